"""Property-based checks of the counting identities and invariances."""

from fractions import Fraction

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from crossing_machine.config import Settings
from crossing_machine.geometry import (
    ArithmeticPath,
    Point,
    PointSet,
    double_coordinates,
    orientation,
    orientation_fixed128,
    rotate_quarter_turn,
    translate,
    validate_general_position,
)
from crossing_machine.pointsets import parse_pointset, serialize_pointset
from crossing_machine.service.bounds import decimal_expansion
from crossing_machine.service.common import pattern_total
from crossing_machine.service.counter import apex_contributions, count_crossings, count_patterns
from crossing_machine.service.oracle import oracle_count

COORD = st.integers(min_value=-1000, max_value=1000)

point_sets = (
    st.lists(st.tuples(COORD, COORD), min_size=4, max_size=10, unique=True)
    .map(PointSet.from_pairs)
    .filter(lambda points: validate_general_position(points) is None)
)

PROPERTY_SETTINGS = settings(
    max_examples=50, deadline=None, suppress_health_check=[HealthCheck.filter_too_much]
)


@PROPERTY_SETTINGS
@given(point_sets)
def test_sweep_equals_oracle(points):
    assert count_crossings(points) == oracle_count(points, Settings())


@PROPERTY_SETTINGS
@given(point_sets)
def test_pattern_identities(points):
    tally = count_patterns(points)
    assert tally.A + tally.B == pattern_total(points.n)
    assert (3 * tally.A - tally.B) % 4 == 0
    assert sum(apex_contributions(points)) == tally.A


@PROPERTY_SETTINGS
@given(point_sets, st.integers(-10**12, 10**12), st.integers(-10**12, 10**12))
def test_translation_invariance(points, dx, dy):
    assert count_crossings(translate(points, dx, dy)) == count_crossings(points)


@PROPERTY_SETTINGS
@given(point_sets)
def test_rotation_and_doubling_invariance(points):
    count = count_crossings(points)
    assert count_crossings(rotate_quarter_turn(points)) == count
    assert count_crossings(double_coordinates(points)) == count


@PROPERTY_SETTINGS
@given(point_sets, st.randoms(use_true_random=False))
def test_reordering_invariance(points, rng):
    shuffled = list(points.points)
    rng.shuffle(shuffled)
    assert count_crossings(PointSet(tuple(shuffled))) == count_crossings(points)


@PROPERTY_SETTINGS
@given(point_sets)
def test_text_round_trip(points):
    assert parse_pointset(serialize_pointset(points)) == points


BELOW_GATE = st.integers(min_value=-(2**61), max_value=2**61)


@settings(max_examples=500)
@given(st.tuples(BELOW_GATE, BELOW_GATE), st.tuples(BELOW_GATE, BELOW_GATE),
       st.tuples(BELOW_GATE, BELOW_GATE))
def test_fixed_width_orientation_agrees_below_gate(p, q, r):
    p, q, r = Point(*p), Point(*q), Point(*r)
    assert orientation_fixed128(p, q, r) == orientation(p, q, r)


@PROPERTY_SETTINGS
@given(point_sets)
def test_forced_paths_agree(points):
    fixed = count_crossings(points, ArithmeticPath.FIXED_WIDTH_128)
    assert fixed == count_crossings(points, ArithmeticPath.ARBITRARY_PRECISION)


@settings(max_examples=200)
@given(st.fractions(min_value=0, max_value=100), st.integers(min_value=0, max_value=30))
def test_decimal_expansion_truncates(value, digits):
    shown = Fraction(decimal_expansion(value, digits))
    assert shown <= value < shown + Fraction(1, 10**digits)


@settings(max_examples=200)
@given(st.tuples(COORD, COORD), st.tuples(COORD, COORD), st.tuples(COORD, COORD))
def test_orientation_antisymmetry(p, q, r):
    p, q, r = Point(*p), Point(*q), Point(*r)
    assert orientation(q, p, r) == -orientation(p, q, r)
    assert orientation(q, r, p) == orientation(p, q, r)
