"""Plain-text point-set format.

    # comment lines start with '#'
    3            <- optional header: the number of points
    0 0
    10 0
    5 7

One point per line, two signed decimal integers separated by whitespace, no
magnitude limit. Blank lines are ignored. The canonical form written by
``serialize_pointset`` has no header and no comments, single spaces and a
trailing newline, so parse(serialize(S)) == S and serialize(parse(t)) == t for
canonical t.
"""

from __future__ import annotations

import logging
import os
import re
import tempfile
from pathlib import Path

from crossing_machine.geometry import (
    GeneralPositionError,
    PointSet,
    validate_general_position,
)

logger = logging.getLogger(__name__)

_INT = r"[+-]?\d+"
_POINT_LINE = re.compile(rf"^\s*({_INT})\s+({_INT})\s*$")
_HEADER_LINE = re.compile(r"^\s*(\d+)\s*$")

MIN_POINTS = 3


class PointSetFormatError(ValueError):
    """Raised for text that is not in the point-set format. Lines are 1-based."""

    def __init__(self, message: str, line: int | None = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")
        self.line = line


def parse_pointset(text: str, validate: bool = True) -> PointSet:
    """Parse point-set text; with ``validate`` also enforce general position."""
    pairs: list[tuple[int, int]] = []
    header: int | None = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None and not pairs:
            header_match = _HEADER_LINE.match(line)
            if header_match:
                header = int(header_match.group(1))
                continue
        match = _POINT_LINE.match(line)
        if not match:
            raise PointSetFormatError(f"expected two integers, got {raw.strip()!r}", number)
        pairs.append((int(match.group(1)), int(match.group(2))))

    if header is not None and header != len(pairs):
        raise PointSetFormatError(f"header announces {header} points but {len(pairs)} follow")
    if len(pairs) < MIN_POINTS:
        raise PointSetFormatError(f"a point set needs at least {MIN_POINTS} points (got {len(pairs)})")

    points = PointSet.from_pairs(pairs)
    if validate:
        violation = validate_general_position(points)
        if violation is not None:
            raise GeneralPositionError(violation)
    return points


def serialize_pointset(points: PointSet) -> str:
    if points.n < MIN_POINTS:
        raise ValueError(f"A point set needs at least {MIN_POINTS} points (got {points.n})")
    return "".join(f"{p.x} {p.y}\n" for p in points)


def read_pointset(path: Path | str, validate: bool = True) -> PointSet:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise PointSetFormatError(f"{path} is not UTF-8 text") from exc
    return parse_pointset(text, validate=validate)


def atomic_write(path: Path, content: str) -> None:
    """Write via a temp file in the same directory so readers never see half a file."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(suffix=".tmp", dir=path.parent)
    tmp_path = Path(tmp_name)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(content)
        os.replace(tmp_path, path)
    finally:
        tmp_path.unlink(missing_ok=True)


def write_pointset(path: Path | str, points: PointSet) -> None:
    atomic_write(Path(path), serialize_pointset(points))


def write_checkpoint(path: Path | str, points: PointSet, summary: str) -> None:
    """Canonical point-set text preceded by one '# ' trace summary line."""
    atomic_write(Path(path), f"# {summary}\n" + serialize_pointset(points))
    logger.info("Checkpoint written to %s (%s)", path, summary)
