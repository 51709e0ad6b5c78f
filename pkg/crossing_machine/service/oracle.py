"""Brute-force ground truth for the sweep counter.

Shares only the orientation primitive with the rest of the package: convexity
and pattern types are decided directly from orientation signs, so a bug in the
angular sweep cannot hide behind a matching bug here.
"""

from __future__ import annotations

import logging
from itertools import combinations, permutations

from crossing_machine.config import Settings, get_settings
from crossing_machine.geometry import Point, PointSet, orientation
from crossing_machine.service.common import PatternTally, require_countable

logger = logging.getLogger(__name__)

TYPE_A = "A"
TYPE_B = "B"


class DegenerateInputError(ValueError):
    """Raised when the oracle meets a zero orientation."""


def _signed(p: Point, q: Point, r: Point) -> int:
    sign = orientation(p, q, r)
    if sign == 0:
        raise DegenerateInputError(
            f"Degenerate input: {tuple(p)}, {tuple(q)}, {tuple(r)} are collinear"
        )
    return sign


def _convex_from_signs(ijk: int, ijl: int, ikl: int, jkl: int) -> bool:
    """Decide convex position of (i, j, k, l) from its four triple orientations.

    The set is non-convex iff one point is inside the triangle of the other
    three, i.e. its orientations against that triangle's directed edges all
    match the triangle's own orientation.
    """
    l_inside = ijl == jkl == -ikl == ijk
    k_inside = -jkl == ikl == ijl == ijk
    j_inside = -ijk == jkl == ijl == ikl
    i_inside = ijk == ikl == -ijl == jkl
    return not (l_inside or k_inside or j_inside or i_inside)


def is_convex_quadruple(w: Point, x: Point, y: Point, z: Point) -> bool:
    if len({w, x, y, z}) < 4:
        raise DegenerateInputError("Degenerate input: the four points are not distinct")
    return _convex_from_signs(
        _signed(w, x, y), _signed(w, x, z), _signed(w, y, z), _signed(x, y, z)
    )


def _check_size(n: int, settings: Settings) -> None:
    require_countable(n)
    if n > settings.oracle_max_points:
        raise ValueError(
            f"Oracle is capped at {settings.oracle_max_points} points (got {n})"
        )
    if n > settings.oracle_warn_points:
        logger.warning("Running the O(n^4) oracle on %d points; this may take a while", n)


def oracle_count(points: PointSet, settings: Settings | None = None) -> int:
    """Exhaustive count of 4-subsets in convex position."""
    settings = settings or get_settings()
    _check_size(points.n, settings)
    pts = points.points
    n = len(pts)
    signs = {
        (i, j, k): _signed(pts[i], pts[j], pts[k]) for i, j, k in combinations(range(n), 3)
    }
    convex = 0
    for a, b, c, d in combinations(range(n), 4):
        if _convex_from_signs(signs[a, b, c], signs[a, b, d], signs[a, c, d], signs[b, c, d]):
            convex += 1
    return convex


def classify_pattern(p: Point, q: Point, r: Point, s: Point) -> str:
    """A iff q lies strictly inside the convex cone at p bounded by rays pr and ps."""
    if len({p, q, r, s}) < 4:
        raise DegenerateInputError("Degenerate input: pattern points are not distinct")
    cone = _signed(p, r, s)
    if _signed(p, r, q) == cone and _signed(p, q, s) == cone:
        return TYPE_A
    return TYPE_B


def oracle_pattern_tally(points: PointSet, settings: Settings | None = None) -> PatternTally:
    """Classify every ((p, q), {r, s}) pattern one by one."""
    settings = settings or get_settings()
    _check_size(points.n, settings)
    pts = points.points
    n = len(pts)
    a_count = b_count = 0
    for p, q in permutations(range(n), 2):
        rest = [i for i in range(n) if i != p and i != q]
        for r, s in combinations(rest, 2):
            if classify_pattern(pts[p], pts[q], pts[r], pts[s]) == TYPE_A:
                a_count += 1
            else:
                b_count += 1
    return PatternTally(A=a_count, B=b_count, total=a_count + b_count)


def quadruple_pattern_tally(four: tuple[Point, Point, Point, Point]) -> tuple[int, int]:
    """(A, B) over the 12 patterns a single 4-subset determines."""
    a_count = b_count = 0
    for p, q in permutations(range(4), 2):
        r, s = (i for i in range(4) if i != p and i != q)
        if classify_pattern(four[p], four[q], four[r], four[s]) == TYPE_A:
            a_count += 1
        else:
            b_count += 1
    return a_count, b_count


def subset_weight_sum(points: PointSet, settings: Settings | None = None) -> int:
    """Sum of 3A - B over all 4-subsets; convex subsets give 4, the rest give 0."""
    settings = settings or get_settings()
    _check_size(points.n, settings)
    total = 0
    for four in combinations(points.points, 4):
        a_count, b_count = quadruple_pattern_tally(four)
        total += 3 * a_count - b_count
    return total
