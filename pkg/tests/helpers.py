"""Point-set builders shared by the test modules."""

import random

from crossing_machine.geometry import Point, PointSet, find_violation_with


def parabola_set(n: int, sx: int = 1, sy: int = 1) -> PointSet:
    """(sx*i, sy*i^2) for i in 0..n-1: strictly convex, no three collinear."""
    return PointSet(tuple(Point(sx * i, sy * i * i) for i in range(n)))


def random_general_position(n: int, low: int, high: int, seed: int) -> PointSet:
    """Seeded random set in [low, high]^2; draws that break general position are redrawn."""
    rng = random.Random(seed)
    points = PointSet(())
    while points.n < n:
        candidate = PointSet(points.points + (Point(rng.randint(low, high), rng.randint(low, high)),))
        if find_violation_with(candidate, candidate.n - 1) is None:
            points = candidate
    return points
