"""Tests for orientation, arithmetic paths and general position."""

import pytest

from crossing_machine.geometry import (
    FIXED_WIDTH_GATE,
    ArithmeticGateError,
    ArithmeticPath,
    GeneralPositionError,
    Point,
    PointSet,
    Violation,
    double_coordinates,
    find_violation_with,
    orientation,
    orientation_fixed128,
    require_general_position,
    resolve_kernel,
    rotate_quarter_turn,
    select_arithmetic_path,
    translate,
    validate_general_position,
)


def test_orientation_signs():
    assert orientation(Point(0, 0), Point(1, 0), Point(0, 1)) == 1
    assert orientation(Point(0, 0), Point(0, 1), Point(1, 0)) == -1
    assert orientation(Point(0, 0), Point(1, 1), Point(2, 2)) == 0


def test_orientation_is_exact_for_huge_coordinates():
    big = 10**40
    assert orientation(Point(0, 0), Point(big, 1), Point(2 * big, 3)) == 1
    assert orientation(Point(0, 0), Point(big, 1), Point(2 * big, 2)) == 0


def test_fixed_width_wraps_above_the_gate():
    # det = 2^128 exactly, which is 0 modulo 2^128
    p, q, r = Point(0, 0), Point(2**100, 0), Point(0, 2**28)
    assert orientation(p, q, r) == 1
    assert orientation_fixed128(p, q, r) == 0


def test_fixed_width_matches_exact_below_the_gate():
    g = FIXED_WIDTH_GATE // 2
    triples = [
        (Point(g, g), Point(-g, g), Point(0, -g)),
        (Point(g, 1), Point(g - 1, 0), Point(-g, -g)),
        (Point(0, 0), Point(g, g), Point(g - 1, g)),
    ]
    for p, q, r in triples:
        assert orientation_fixed128(p, q, r) == orientation(p, q, r)


def test_select_arithmetic_path_gate_is_inclusive():
    at_gate = PointSet.from_pairs([(0, 0), (FIXED_WIDTH_GATE, 0), (0, -FIXED_WIDTH_GATE)])
    above = PointSet.from_pairs([(0, 0), (FIXED_WIDTH_GATE + 1, 0), (0, 1)])
    assert select_arithmetic_path(at_gate) is ArithmeticPath.FIXED_WIDTH_128
    assert select_arithmetic_path(above) is ArithmeticPath.ARBITRARY_PRECISION


def test_forcing_fixed_width_above_gate_is_refused():
    above = PointSet.from_pairs([(0, 0), (-(FIXED_WIDTH_GATE + 1), 0), (0, 1)])
    with pytest.raises(ArithmeticGateError, match="fixed-width gate"):
        resolve_kernel(above, ArithmeticPath.FIXED_WIDTH_128)
    assert resolve_kernel(above, ArithmeticPath.ARBITRARY_PRECISION) is orientation


def test_validate_reports_first_violation_in_lexicographic_order():
    # (0, 1, 2) is collinear and precedes the duplicate pair (0, 3)
    points = PointSet.from_pairs([(0, 0), (1, 1), (2, 2), (0, 0)])
    assert validate_general_position(points) == Violation("collinear", (0, 1, 2))

    points = PointSet.from_pairs([(5, 5), (5, 5), (1, 9), (7, 3)])
    assert validate_general_position(points) == Violation("duplicate", (0, 1))


def test_duplicate_reported_before_triples_it_prefixes():
    points = PointSet.from_pairs([(3, 1), (3, 1), (0, 0), (6, 2)])
    # (0, 1, 2) is also degenerate, but the pair (0, 1) comes first
    assert validate_general_position(points) == Violation("duplicate", (0, 1))


def test_validate_accepts_general_position(square):
    assert validate_general_position(square) is None
    assert require_general_position(square) is square


def test_require_general_position_raises_with_violation():
    points = PointSet.from_pairs([(0, 0), (1, 0), (2, 0), (0, 1)])
    with pytest.raises(GeneralPositionError) as exc_info:
        require_general_position(points)
    assert exc_info.value.violation == Violation("collinear", (0, 1, 2))
    assert "collinear points at indices (0, 1, 2)" in str(exc_info.value)


def test_find_violation_with_checks_only_the_moved_point():
    base = PointSet.from_pairs([(0, 0), (10, 0), (0, 10), (2, 3)])
    assert find_violation_with(base, 3) is None

    onto_edge = base.replace(3, Point(5, 0))
    assert find_violation_with(onto_edge, 3) == Violation("collinear", (0, 1, 3))

    onto_vertex = base.replace(0, Point(10, 0))
    assert find_violation_with(onto_vertex, 0) == Violation("duplicate", (0, 1))


def test_replace_keeps_slot_and_leaves_original_untouched(square):
    moved = square.replace(2, Point(11, 12))
    assert moved[2] == Point(11, 12)
    assert square[2] == Point(10, 10)
    assert moved.n == square.n


def test_transforms(square):
    assert list(double_coordinates(square)) == [(0, 0), (20, 0), (20, 20), (0, 20)]
    assert list(translate(square, -3, 4)) == [(-3, 4), (7, 4), (7, 14), (-3, 14)]
    assert list(rotate_quarter_turn(square)) == [(0, 0), (0, 10), (-10, 10), (-10, 0)]


def test_repeated_doubling_crosses_the_gate():
    points = PointSet.from_pairs([(0, 0), (2, 1), (2, 2), (1, 2)])
    for _ in range(61):
        points = double_coordinates(points)
    assert points.max_abs_coordinate() == FIXED_WIDTH_GATE
    assert select_arithmetic_path(points) is ArithmeticPath.FIXED_WIDTH_128
    points = double_coordinates(points)
    assert select_arithmetic_path(points) is ArithmeticPath.ARBITRARY_PRECISION
    assert validate_general_position(points) is None


def test_max_abs_coordinate():
    assert PointSet.from_pairs([(3, -9), (4, 2)]).max_abs_coordinate() == 9
    assert PointSet(()).max_abs_coordinate() == 0
