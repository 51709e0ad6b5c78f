"""The table of improved record counts and verification against it."""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass

from crossing_machine.fixtures import load_records_json
from crossing_machine.schemas import RecordReport, RecordRow

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class RecordEntry:
    new_count: int
    previous_count: int

    @property
    def improvement(self) -> int:
        return self.previous_count - self.new_count


@dataclass(frozen=True)
class RecordTable:
    entries: Mapping[int, RecordEntry]

    def __post_init__(self) -> None:
        for n, entry in self.entries.items():
            if entry.new_count >= entry.previous_count:
                raise ValueError(
                    f"Record for n={n} does not improve on the previous set "
                    f"({entry.new_count} >= {entry.previous_count})"
                )

    @classmethod
    def from_json(cls, data: Mapping) -> RecordTable:
        entries = {
            int(n): RecordEntry(new_count=int(row["new"]), previous_count=int(row["previous"]))
            for n, row in data["entries"].items()
        }
        return cls(dict(sorted(entries.items())))


def load_record_table() -> RecordTable:
    return RecordTable.from_json(load_records_json())


def _status(delta: int) -> str:
    if delta == 0:
        return "match"
    return "beat" if delta < 0 else "miss"


def verify_records(computed: Mapping[int, int], table: RecordTable | None = None) -> RecordReport:
    """Compare computed counts with the table for every n present in both."""
    table = table or load_record_table()
    rows = []
    for n in sorted(set(computed) & set(table.entries)):
        entry = table.entries[n]
        delta = computed[n] - entry.new_count
        rows.append(
            RecordRow(
                n=n,
                computed=computed[n],
                table_count=entry.new_count,
                previous_count=entry.previous_count,
                status=_status(delta),
                delta=delta,
                improvement=entry.improvement,
            )
        )
    skipped = sorted(set(computed) - set(table.entries))
    if skipped:
        logger.info("No table entry for n in %s; skipped", skipped)
    return RecordReport(
        rows=rows,
        matches=sum(row.status == "match" for row in rows),
        beats=sum(row.status == "beat" for row in rows),
        misses=sum(row.status == "miss" for row in rows),
    )
