"""O(n^2 log n) crossing counter.

For every apex p the other points are sorted counterclockwise around p. For
each y_i in that order, a[i] is the number of points whose counterclockwise
offset from y_i lies strictly inside (0, pi); they form the run that follows
y_i circularly. Any two of them together with y_i bound a wedge at p that
contains the nearer one, so p is the apex of sum C(a[i], 2) type-A patterns.
With A known, the total fixes B and the crossing count is (3A - B) / 4.

The run length is found with one circular two-pointer pass per apex, so after
sorting the sweep is linear.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cmp_to_key
from math import comb

from crossing_machine.geometry import (
    ArithmeticPath,
    GeneralPositionError,
    OrientationFn,
    Point,
    PointSet,
    Violation,
    orientation,
    resolve_kernel,
)
from crossing_machine.service.common import PatternTally, require_countable

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class AngularOrder:
    """Indices of S minus the apex, counterclockwise from the +x direction."""

    apex: int
    order: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class HalfplaneCounts:
    apex: int
    a: tuple[int, ...]


def _half(apex: Point, p: Point) -> int:
    """0 for the upper half-plane at the apex (ray x > 0 included), 1 for the lower."""
    dy = p.y - apex.y
    if dy > 0 or (dy == 0 and p.x > apex.x):
        return 0
    return 1


def angular_order(
    points: PointSet, apex: int, kernel: OrientationFn = orientation
) -> AngularOrder:
    center = points[apex]
    pts = points.points

    def compare(i: int, j: int) -> int:
        hi, hj = _half(center, pts[i]), _half(center, pts[j])
        if hi != hj:
            return hi - hj
        sign = kernel(center, pts[i], pts[j])
        if sign == 0:
            raise GeneralPositionError(Violation("collinear", tuple(sorted((apex, i, j)))))
        return -sign

    others = [i for i in range(len(pts)) if i != apex]
    others.sort(key=cmp_to_key(compare))
    return AngularOrder(apex=apex, order=tuple(others))


def angular_orders(points: PointSet, path: ArithmeticPath | None = None) -> list[AngularOrder]:
    """Counterclockwise order of the remaining points around every apex."""
    kernel = resolve_kernel(points, path)
    return [angular_order(points, apex, kernel) for apex in range(points.n)]


def apex_halfplane_counts(
    points: PointSet, order: AngularOrder, kernel: OrientationFn = orientation
) -> HalfplaneCounts:
    center = points[order.apex]
    ring = [points[i] for i in order.order]
    m = len(ring)
    counts = [0] * m
    # `end` only moves forward: everything strictly between y_i and y_end is
    # also within pi of y_{i+1}.
    end = 1
    for i in range(m):
        end = max(end, i + 1)
        while end < i + m and kernel(center, ring[i], ring[end % m]) > 0:
            end += 1
        counts[i] = end - i - 1
    return HalfplaneCounts(apex=order.apex, a=tuple(counts))


def apex_contributions(points: PointSet, path: ArithmeticPath | None = None) -> list[int]:
    """Type-A patterns with each point as apex, in point order."""
    require_countable(points.n)
    kernel = resolve_kernel(points, path)
    contributions = []
    for apex in range(points.n):
        order = angular_order(points, apex, kernel)
        counts = apex_halfplane_counts(points, order, kernel)
        contributions.append(sum(comb(a, 2) for a in counts.a))
    return contributions


def count_patterns(points: PointSet, path: ArithmeticPath | None = None) -> PatternTally:
    """A(S) by the angular sweep; B(S) from the pattern total."""
    contributions = apex_contributions(points, path)
    return PatternTally.from_type_a(sum(contributions), points.n)


def count_crossings(points: PointSet, path: ArithmeticPath | None = None) -> int:
    """Number of convex 4-subsets, which equals the crossings of K_n drawn on S."""
    return count_patterns(points, path).crossings()
