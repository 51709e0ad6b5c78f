"""Test fixtures and configuration."""

import pytest

from crossing_machine.config import Settings
from crossing_machine.fixtures import load_appendix_set
from crossing_machine.geometry import PointSet


@pytest.fixture
def settings():
    """Fresh settings; nothing is read from the environment."""
    return Settings()


@pytest.fixture
def square():
    return PointSet.from_pairs([(0, 0), (10, 0), (10, 10), (0, 10)])


@pytest.fixture
def triangle_with_center():
    return PointSet.from_pairs([(0, 0), (12, 0), (0, 12), (3, 3)])


@pytest.fixture(scope="session")
def appendix_set():
    return load_appendix_set()


@pytest.fixture
def write_points(tmp_path):
    """Write pairs in the text format and return the path."""

    def _write(pairs, name="points.txt", header=False):
        lines = [f"{len(pairs)}"] if header else []
        lines += [f"{x} {y}" for x, y in pairs]
        path = tmp_path / name
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    return _write
