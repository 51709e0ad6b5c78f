"""Shared text renderers for the CLI and the tasks.

Every renderer takes one of the report models from ``schemas`` and returns
lines; callers decide where they go.
"""

from __future__ import annotations

from crossing_machine.geometry import Violation
from crossing_machine.schemas import BoundReport, CountReport, RecordReport


def count_lines(report: CountReport) -> list[str]:
    lines = [f"points: {report.n}", f"crossings: {report.crossings}"]
    lines.append(f"arithmetic path: {report.arithmetic_path}")
    if report.A is not None:
        lines.append(f"type A patterns: {report.A}")
        lines.append(f"type B patterns: {report.B}")
        lines.append(f"pattern total: {report.pattern_total}")
    if report.apex_contributions is not None:
        joined = " ".join(str(c) for c in report.apex_contributions)
        lines.append(f"type A per apex: {joined}")
    if report.oracle is not None:
        verdict = "agrees" if report.oracle == report.crossings else "DISAGREES"
        lines.append(f"oracle: {report.oracle} ({verdict})")
    return lines


def violation_lines(violation: Violation | None) -> list[str]:
    if violation is None:
        return ["ok: general position"]
    return [f"violation: {violation.describe()}"]


def bound_lines(report: BoundReport) -> list[str]:
    lines = []
    if report.m is not None:
        lines.append(f"m: {report.m}, cr: {report.cr}")
    lines.append(f"coefficient of C(n,4): {report.fraction}")
    lines.append(f"decimal: {report.decimal}")
    for item in report.comparisons:
        lines.append(f"  {report.fraction} {item.relation} {item.constant} ({item.name})")
    return lines


def record_lines(report: RecordReport) -> list[str]:
    lines = []
    for row in report.rows:
        detail = "" if row.delta == 0 else f" by {abs(row.delta)}"
        lines.append(
            f"n={row.n}: computed {row.computed} vs table {row.table_count} "
            f"(previous {row.previous_count}): {row.status}{detail}"
        )
    lines.append(f"matches: {report.matches}, beats: {report.beats}, misses: {report.misses}")
    return lines
