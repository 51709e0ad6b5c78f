"""Vendored data: the 75-point record set and the table of improved records."""

from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path

from crossing_machine.geometry import PointSet
from crossing_machine.pointsets import parse_pointset

DATA_DIR = Path(__file__).with_name("data")
APPENDIX_PATH = DATA_DIR / "appendix_75.txt"
RECORDS_PATH = DATA_DIR / "records.json"

APPENDIX_CROSSINGS = 450492


@lru_cache(maxsize=1)
def appendix_text() -> str:
    return APPENDIX_PATH.read_text(encoding="utf-8")


@lru_cache(maxsize=1)
def load_appendix_set() -> PointSet:
    """The 75-point set with 450492 crossings, validated on load."""
    return parse_pointset(appendix_text())


@lru_cache(maxsize=1)
def load_records_json() -> dict:
    return json.loads(RECORDS_PATH.read_text(encoding="utf-8"))
