"""Shared service-layer helpers."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

# Every pattern ((p, q), {r, s}) is one ordered pair plus one unordered pair.
PATTERNS_PER_QUADRUPLE = 12


class CounterConsistencyError(RuntimeError):
    """Raised when two exact computations that must agree do not.

    Never expected on genuine input; it signals an implementation bug.
    """


def pattern_total(n: int) -> int:
    """Number of patterns on n points: n(n-1) * C(n-2, 2), which is 12 * C(n, 4)."""
    return PATTERNS_PER_QUADRUPLE * comb(n, 4)


def require_countable(n: int) -> None:
    if n < 4:
        raise ValueError(f"Crossing counts need at least 4 points (got {n})")


@dataclass(frozen=True, slots=True)
class PatternTally:
    """Type-A and type-B pattern counts of a point set."""

    A: int
    B: int
    total: int

    @classmethod
    def from_type_a(cls, a_count: int, n: int) -> PatternTally:
        total = pattern_total(n)
        return cls(A=a_count, B=total - a_count, total=total)

    @property
    def weighted(self) -> int:
        """3A - B, which is four times the number of convex quadrilaterals."""
        return 3 * self.A - self.B

    def crossings(self) -> int:
        weighted = self.weighted
        if weighted % 4:
            raise CounterConsistencyError(
                f"3A - B = {weighted} is not divisible by 4 (A={self.A}, B={self.B})"
            )
        return weighted // 4
