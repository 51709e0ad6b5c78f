"""Exact integer geometry: points, orientation, general position, arithmetic paths.

The orientation determinant is the only geometric primitive in the package and
it is always evaluated on integers, so no result ever depends on rounding.

Two evaluation paths exist. The arbitrary-precision path is Python's own int.
The fixed-width path reproduces a signed 128-bit evaluation bit for bit (every
intermediate wraps modulo 2**128), which is what a native kernel computes. It
is only correct while every |coordinate| <= 2**62; ``select_arithmetic_path``
enforces that gate and the two paths are required to agree below it.
"""

from __future__ import annotations

import logging
import sys
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

if sys.version_info >= (3, 11):
    from enum import StrEnum
else:  # pragma: no cover - backport of enum.StrEnum for Python 3.10
    from enum import Enum

    class StrEnum(str, Enum):
        def __str__(self) -> str:
            return str.__str__(self)

        def __format__(self, format_spec: str) -> str:
            return str.__format__(str(self), format_spec)

logger = logging.getLogger(__name__)

# Inclusive: "as long as the absolute value of the coordinates is at most 2^62".
FIXED_WIDTH_GATE = 2**62

_INT128_OFFSET = 2**127
_INT128_MASK = 2**128 - 1


class Point(NamedTuple):
    """A lattice point. Coordinates are Python ints of unbounded magnitude."""

    x: int
    y: int


class ArithmeticPath(StrEnum):
    FIXED_WIDTH_128 = "fixed-width-128"
    ARBITRARY_PRECISION = "arbitrary-precision"


class ArithmeticGateError(ValueError):
    """Raised when the fixed-width path is forced on coordinates above the gate."""


@dataclass(frozen=True, slots=True)
class Violation:
    """First general-position failure found in a point set.

    ``kind`` is "duplicate" (indices is a pair) or "collinear" (a triple).
    """

    kind: str
    indices: tuple[int, ...]

    def describe(self) -> str:
        joined = ", ".join(str(i) for i in self.indices)
        if self.kind == "duplicate":
            return f"duplicate points at indices ({joined})"
        return f"collinear points at indices ({joined})"


class GeneralPositionError(ValueError):
    """Raised when a point set has a duplicate point or a collinear triple."""

    def __init__(self, violation: Violation):
        super().__init__(f"Point set is not in general position: {violation.describe()}")
        self.violation = violation


@dataclass(frozen=True, slots=True)
class PointSet:
    """An ordered, immutable sequence of points.

    Construction does not validate; call ``validate_general_position`` or
    ``require_general_position`` at the boundary where points enter.
    """

    points: tuple[Point, ...]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]]) -> PointSet:
        return cls(tuple(Point(int(x), int(y)) for x, y in pairs))

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __getitem__(self, index: int) -> Point:
        return self.points[index]

    def replace(self, index: int, point: Point) -> PointSet:
        """Return S minus the point at ``index`` plus ``point``, in the same slot."""
        points = list(self.points)
        points[index] = point
        return PointSet(tuple(points))

    def max_abs_coordinate(self) -> int:
        return max((max(abs(p.x), abs(p.y)) for p in self.points), default=0)


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of (q - p) x (r - p): +1 counterclockwise, -1 clockwise, 0 collinear."""
    det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    return (det > 0) - (det < 0)


def _wrap128(value: int) -> int:
    return ((value + _INT128_OFFSET) & _INT128_MASK) - _INT128_OFFSET


def orientation_fixed128(p: Point, q: Point, r: Point) -> int:
    """Orientation evaluated with signed 128-bit wrap-around semantics.

    Differences and products are each reduced to 128 bits in the same order a
    native kernel evaluates them. Correct only below ``FIXED_WIDTH_GATE``.
    """
    left = _wrap128(_wrap128(q.x - p.x) * _wrap128(r.y - p.y))
    right = _wrap128(_wrap128(q.y - p.y) * _wrap128(r.x - p.x))
    det = _wrap128(left - right)
    return (det > 0) - (det < 0)


OrientationFn = Callable[[Point, Point, Point], int]


def orientation_kernel(path: ArithmeticPath) -> OrientationFn:
    if path is ArithmeticPath.FIXED_WIDTH_128:
        return orientation_fixed128
    return orientation


def select_arithmetic_path(points: PointSet) -> ArithmeticPath:
    """Fixed-width iff every |x| and |y| is at most 2**62."""
    if points.max_abs_coordinate() <= FIXED_WIDTH_GATE:
        return ArithmeticPath.FIXED_WIDTH_128
    return ArithmeticPath.ARBITRARY_PRECISION


def resolve_kernel(points: PointSet, path: ArithmeticPath | None = None) -> OrientationFn:
    """Pick the orientation kernel for a point set, honouring a forced path."""
    if path is None:
        path = select_arithmetic_path(points)
        logger.debug("Arithmetic path %s for %d points", path, points.n)
    elif (
        path is ArithmeticPath.FIXED_WIDTH_128
        and points.max_abs_coordinate() > FIXED_WIDTH_GATE
    ):
        raise ArithmeticGateError(
            f"Coordinates up to {points.max_abs_coordinate()} exceed the fixed-width gate 2^62"
        )
    return orientation_kernel(path)


def validate_general_position(points: PointSet) -> Violation | None:
    """Return the first violation in lexicographic index order, or None.

    A duplicate pair (i, j) is reported before any triple (i, j, k) it prefixes.
    """
    pts = points.points
    n = len(pts)
    for i in range(n):
        p = pts[i]
        for j in range(i + 1, n):
            q = pts[j]
            if p == q:
                return Violation("duplicate", (i, j))
            for k in range(j + 1, n):
                if orientation(p, q, pts[k]) == 0:
                    return Violation("collinear", (i, j, k))
    return None


def find_violation_with(points: PointSet, index: int) -> Violation | None:
    """Check only the pairs and triples that involve ``points[index]``.

    Equivalent to the full scan when the rest of the set is already valid.
    Reported indices are sorted.
    """
    pts = points.points
    c = pts[index]
    others = [i for i in range(len(pts)) if i != index]
    for i in others:
        if pts[i] == c:
            return Violation("duplicate", tuple(sorted((i, index))))
    for i, j in combinations(others, 2):
        if orientation(pts[i], pts[j], c) == 0:
            return Violation("collinear", tuple(sorted((i, j, index))))
    return None


def require_general_position(points: PointSet) -> PointSet:
    violation = validate_general_position(points)
    if violation is not None:
        raise GeneralPositionError(violation)
    return points


def double_coordinates(points: PointSet) -> PointSet:
    """Multiply every coordinate by two (equivalent to halving the search mean)."""
    return PointSet(tuple(Point(2 * p.x, 2 * p.y) for p in points.points))


def translate(points: PointSet, dx: int, dy: int) -> PointSet:
    return PointSet(tuple(Point(p.x + dx, p.y + dy) for p in points.points))


def rotate_quarter_turn(points: PointSet) -> PointSet:
    """Rotate by 90 degrees counterclockwise: (x, y) -> (-y, x)."""
    return PointSet(tuple(Point(-p.y, p.x) for p in points.points))
