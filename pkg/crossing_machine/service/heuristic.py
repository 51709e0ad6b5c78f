"""Randomised local search for point sets with few crossings.

One step picks a point p uniformly, proposes q = p + (t_x, t_y) and keeps the
move when the new set is in general position and has no more crossings than
the incumbent. Ties are accepted so the search can walk across plateaus.

Offsets follow an exponential law with mean M, rounded to the nearest integer
and negated with probability 1/2. When T iterations pass without a strict
improvement the whole set is doubled, which halves the mean relative to the
coordinates while keeping them integral.

Randomness contract: a single numpy ``Generator(PCG64(seed))``. Each step draws,
in order, the point index (``integers(n)``), then for x and y a uniform
``random()`` (53 bits) for the magnitude and a second ``random()`` for the sign.
The magnitude is -M * log1p(-u), rounded half away from zero.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from crossing_machine.config import Settings, get_settings
from crossing_machine.geometry import (
    ArithmeticPath,
    Point,
    PointSet,
    double_coordinates,
    find_violation_with,
    require_general_position,
)
from crossing_machine.pointsets import write_checkpoint
from crossing_machine.schemas import SearchConfig
from crossing_machine.service.common import CounterConsistencyError, require_countable
from crossing_machine.service.counter import count_crossings
from crossing_machine.service.oracle import oracle_count

logger = logging.getLogger(__name__)

# Step counts use plain ints. The cross-checks recount on the gated path.
SEARCH_PATH = ArithmeticPath.ARBITRARY_PRECISION


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _round_half_away(value: float) -> int:
    # Magnitudes are never negative, so half away from zero is floor(v + 0.5).
    return int(math.floor(value + 0.5))


def sample_offset(rng: np.random.Generator, mean: float) -> tuple[int, int]:
    """Draw (t_x, t_y); zero offsets are possible."""
    if not mean > 0:
        raise ValueError(f"Offset mean must be positive (got {mean})")
    offsets = []
    for _ in range(2):
        magnitude = _round_half_away(-mean * math.log1p(-rng.random()))
        if rng.random() < 0.5:
            magnitude = -magnitude
        offsets.append(magnitude)
    return offsets[0], offsets[1]


def propose(points: PointSet, rng: np.random.Generator, mean: float) -> tuple[int, Point]:
    index = int(rng.integers(points.n))
    t_x, t_y = sample_offset(rng, mean)
    p = points[index]
    return index, Point(p.x + t_x, p.y + t_y)


class StepOutcome(NamedTuple):
    points: PointSet
    count: int
    accepted: bool


def step(
    points: PointSet, current_count: int, rng: np.random.Generator, mean: float
) -> StepOutcome:
    """One propose/evaluate/accept round. Rejection leaves S untouched."""
    index, candidate = propose(points, rng, mean)
    if candidate == points[index]:
        # q = p duplicates the point being moved
        return StepOutcome(points, current_count, False)
    moved = points.replace(index, candidate)
    violation = find_violation_with(moved, index)
    if violation is not None:
        logger.debug("Rejected move of point %d: %s", index, violation.describe())
        return StepOutcome(points, current_count, False)
    count = count_crossings(moved, SEARCH_PATH)
    if count <= current_count:
        return StepOutcome(moved, count, True)
    return StepOutcome(points, current_count, False)


@dataclass
class SearchTrace:
    """Audited history of one run. ``best_count`` always equals count_crossings(best_set)."""

    iterations: int
    accepted: int
    improvements: int
    doubling_events: list[int]
    best_set: PointSet
    best_count: int
    objective_history: list[tuple[int, int]] = field(default_factory=list)

    def summary(self) -> str:
        return (
            f"iterations={self.iterations} accepted={self.accepted} "
            f"improvements={self.improvements} doublings={len(self.doubling_events)} "
            f"best_count={self.best_count}"
        )


def default_stale_threshold(n: int, settings: Settings) -> int:
    return settings.stale_factor * n * n


def _cross_check(points: PointSet, expected: int, settings: Settings, oracle: bool) -> None:
    recount = count_crossings(points)
    if recount != expected:
        raise CounterConsistencyError(
            f"Incumbent count {expected} disagrees with a fresh count of {recount}"
        )
    if oracle and points.n <= settings.oracle_check_max_points:
        brute = oracle_count(points, settings)
        if brute != expected:
            raise CounterConsistencyError(
                f"Incumbent count {expected} disagrees with the oracle count {brute}"
            )


def run(config: SearchConfig, start: PointSet, settings: Settings | None = None) -> SearchTrace:
    """Iterate ``step`` for the configured budget and return the full trace."""
    settings = settings or get_settings()
    require_countable(start.n)
    require_general_position(start)

    stale_threshold = config.stale_threshold or default_stale_threshold(start.n, settings)
    max_doublings = (
        config.max_doublings if config.max_doublings is not None else settings.max_doublings
    )
    rng = make_rng(config.seed)

    current = start
    count = count_crossings(current)
    trace = SearchTrace(
        iterations=0,
        accepted=0,
        improvements=0,
        doubling_events=[],
        best_set=current,
        best_count=count,
        objective_history=[(0, count)],
    )
    logger.info(
        "Search start: n=%d count=%d seed=%d mean=%s T=%d",
        start.n,
        count,
        config.seed,
        config.initial_mean,
        stale_threshold,
    )

    stale = 0
    for iteration in range(1, config.iteration_budget + 1):
        outcome = step(current, count, rng, config.initial_mean)
        stale += 1
        if outcome.accepted:
            trace.accepted += 1
            trace.objective_history.append((iteration, outcome.count))
            if outcome.count < count:
                trace.improvements += 1
                stale = 0
                logger.debug("Iteration %d: %d -> %d crossings", iteration, count, outcome.count)
            current, count = outcome.points, outcome.count
        trace.iterations = iteration

        if stale >= stale_threshold and len(trace.doubling_events) < max_doublings:
            current = double_coordinates(current)
            _cross_check(current, count, settings, config.oracle_checks)
            trace.doubling_events.append(iteration)
            stale = 0
            logger.info(
                "Iteration %d: no improvement in %d steps, doubled coordinates",
                iteration,
                stale_threshold,
            )

        trace.best_set, trace.best_count = current, count
        if (
            config.checkpoint_path is not None
            and config.checkpoint_every
            and iteration % config.checkpoint_every == 0
        ):
            write_checkpoint(config.checkpoint_path, current, trace.summary())

    _cross_check(trace.best_set, trace.best_count, settings, config.oracle_checks)
    if config.checkpoint_path is not None:
        write_checkpoint(config.checkpoint_path, trace.best_set, trace.summary())
    logger.info("Search done: %s", trace.summary())
    return trace


def random_start(n: int, span: int, seed: int) -> PointSet:
    """Seeded random set in [-span, span]^2 in general position.

    Points are drawn one at a time; a draw that duplicates an earlier point or
    makes a collinear triple with two of them is discarded and redrawn.
    """
    if n < 3:
        raise ValueError(f"A random start needs at least 3 points (got {n})")
    if span < 1:
        raise ValueError(f"Span must be a positive integer (got {span})")
    rng = make_rng(seed)
    points = PointSet(())
    attempts = 0
    while points.n < n:
        attempts += 1
        if attempts > 1000 * n:
            raise ValueError(f"Could not place {n} points in general position within span {span}")
        x, y = (int(v) for v in rng.integers(-span, span, size=2, endpoint=True))
        candidate = PointSet(points.points + (Point(x, y),))
        if find_violation_with(candidate, candidate.n - 1) is None:
            points = candidate
    return points
