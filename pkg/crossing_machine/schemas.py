"""Pydantic models for search parameters and the reports the CLI prints.

Crossing counts, pattern counts and fractions are exact integers or "p/q"
strings, never floats; a float field here would let pydantic coerce an exact
value into a rounded one on the way out.
"""

from __future__ import annotations

from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field

SEED_LIMIT = 2**64


class SearchConfig(BaseModel):
    """Parameters of one local-search trajectory.

    ``stale_threshold`` and ``max_doublings`` default from settings when None:
    T = stale_factor * n^2 and 16 doublings.
    """

    model_config = ConfigDict(frozen=True)

    seed: int = Field(..., ge=0, lt=SEED_LIMIT)
    # Expected offset magnitude M in lattice units, before the sign flip.
    initial_mean: float = Field(..., gt=0, allow_inf_nan=False)
    stale_threshold: int | None = Field(None, ge=1)
    max_doublings: int | None = Field(None, ge=0)
    iteration_budget: int = Field(..., ge=1)
    oracle_checks: bool = False
    checkpoint_every: int | None = Field(None, ge=1)
    checkpoint_path: Path | None = None


class _Report(BaseModel):
    model_config = ConfigDict(extra="forbid")


class CountReport(_Report):
    n: int
    crossings: int
    arithmetic_path: str
    A: int | None = None
    B: int | None = None
    pattern_total: int | None = None
    apex_contributions: list[int] | None = None
    oracle: int | None = None


class ConstantComparison(_Report):
    name: str
    constant: str
    relation: str = Field(..., pattern="^[<=>]$")


class BoundReport(_Report):
    m: int | None = None
    cr: int | None = None
    fraction: str
    decimal: str
    comparisons: list[ConstantComparison]


class RecordRow(_Report):
    n: int
    computed: int
    table_count: int
    previous_count: int
    status: str = Field(..., pattern="^(match|beat|miss)$")
    # computed - table_count: negative beats the table, positive misses it.
    delta: int
    # previous_count - table_count, the margin the table row itself claims.
    improvement: int


class RecordReport(_Report):
    rows: list[RecordRow]
    matches: int
    beats: int
    misses: int
