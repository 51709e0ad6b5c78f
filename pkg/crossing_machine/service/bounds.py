"""Exact evaluation of the recursive-construction constant.

A set of m points (m odd) with cr crossings yields drawings of K_n with
    (24 cr + 3m^3 - 7m^2 + (30/7) m) / m^4 * C(n, 4) + Theta(n^3)
crossings. Only the C(n, 4) coefficient is computed, as a reduced fraction;
comparisons against published decimal constants are made by cross-multiplying
with their exact decimal fractions. Nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from crossing_machine.schemas import BoundReport, ConstantComparison

# Coefficients of C(n, 4), as exact decimal fractions.
PUBLISHED_CONSTANTS: dict[str, Fraction] = {
    "lower_bound": Fraction("0.379972"),
    "conjectured": Fraction("0.380029"),
    "improved_upper": Fraction("0.380473"),
    "previous_upper": Fraction("0.380488"),
}


@dataclass(frozen=True, slots=True)
class RationalBound:
    numerator: int
    denominator: int

    @classmethod
    def from_fraction(cls, value: Fraction) -> RationalBound:
        return cls(value.numerator, value.denominator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def construction_bound(m: int, cr: int) -> RationalBound:
    """(168 cr + 21m^3 - 49m^2 + 30m) / (7 m^4), reduced."""
    if m < 3:
        raise ValueError(f"m must be at least 3 (got {m})")
    if m % 2 == 0:
        raise ValueError(f"m must be odd (got {m})")
    limit = comb(m, 4)
    if not 0 <= cr <= limit:
        raise ValueError(f"cr must lie in [0, {limit}] for m={m} (got {cr})")
    numerator = 168 * cr + 21 * m**3 - 49 * m**2 + 30 * m
    return RationalBound.from_fraction(Fraction(numerator, 7 * m**4))


def relation(a: Fraction, b: Fraction) -> str:
    # Fraction comparison cross-multiplies integers.
    if a < b:
        return "<"
    if a > b:
        return ">"
    return "="


def decimal_expansion(value: Fraction, digits: int) -> str:
    """Truncated decimal expansion by long division."""
    if digits < 0:
        raise ValueError(f"digits must be non-negative (got {digits})")
    sign = "-" if value < 0 else ""
    numerator, denominator = abs(value.numerator), value.denominator
    whole, remainder = divmod(numerator, denominator)
    if digits == 0:
        return f"{sign}{whole}"
    fractional = []
    for _ in range(digits):
        remainder *= 10
        digit, remainder = divmod(remainder, denominator)
        fractional.append(str(digit))
    return f"{sign}{whole}.{''.join(fractional)}"


def compare_constants(bound: RationalBound, digits: int = 6) -> BoundReport:
    """Exact relation of the bound to each published constant, plus its decimals."""
    value = bound.value
    comparisons = [
        ConstantComparison(
            name=name,
            constant=decimal_expansion(constant, 6),
            relation=relation(value, constant),
        )
        for name, constant in PUBLISHED_CONSTANTS.items()
    ]
    return BoundReport(
        fraction=str(bound),
        decimal=decimal_expansion(value, digits),
        comparisons=comparisons,
    )


def bound_report(m: int, cr: int, digits: int = 6) -> BoundReport:
    report = compare_constants(construction_bound(m, cr), digits)
    return report.model_copy(update={"m": m, "cr": cr})
