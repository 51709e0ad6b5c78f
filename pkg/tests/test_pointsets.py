"""Tests for the point-set text format and file helpers."""

import pytest

from crossing_machine.geometry import GeneralPositionError, Point, PointSet
from crossing_machine.pointsets import (
    PointSetFormatError,
    parse_pointset,
    read_pointset,
    serialize_pointset,
    write_checkpoint,
    write_pointset,
)


def test_parse_with_header_comments_and_blank_lines():
    text = "# three points\n3\n\n0 0\n  10   0 \n# inline comment line\n5 7\n"
    points = parse_pointset(text)
    assert list(points) == [Point(0, 0), Point(10, 0), Point(5, 7)]


def test_parse_signed_and_huge_integers():
    big = 10**40
    points = parse_pointset(f"-3 +4\n{big} -{big}\n0 1\n")
    assert points[0] == Point(-3, 4)
    assert points[1] == Point(big, -big)


def test_canonical_text_round_trips():
    text = "0 0\n10 0\n5 7\n-2 9\n"
    assert serialize_pointset(parse_pointset(text)) == text


def test_header_mismatch_is_rejected():
    with pytest.raises(PointSetFormatError, match="header announces 4 points but 3 follow"):
        parse_pointset("4\n0 0\n1 0\n0 1\n")


def test_malformed_line_reports_line_number():
    with pytest.raises(PointSetFormatError) as exc_info:
        parse_pointset("0 0\n1 0\n1.5 2\n")
    assert exc_info.value.line == 3
    assert str(exc_info.value).startswith("line 3: expected two integers")


def test_too_few_points():
    with pytest.raises(PointSetFormatError, match=r"at least 3 points \(got 2\)"):
        parse_pointset("0 0\n1 0\n")


def test_collinear_text_is_rejected_unless_validation_is_off():
    text = "0 0\n1 1\n2 2\n"
    with pytest.raises(GeneralPositionError):
        parse_pointset(text)
    assert parse_pointset(text, validate=False).n == 3


def test_serialize_needs_three_points():
    with pytest.raises(ValueError, match="at least 3 points"):
        serialize_pointset(PointSet.from_pairs([(0, 0), (1, 0)]))


def test_write_and_read(tmp_path, square):
    path = tmp_path / "nested" / "square.txt"
    write_pointset(path, square)
    assert path.read_text(encoding="utf-8") == "0 0\n10 0\n10 10\n0 10\n"
    assert read_pointset(path) == square
    assert list(tmp_path.joinpath("nested").iterdir()) == [path]


def test_read_rejects_binary(tmp_path):
    path = tmp_path / "blob.txt"
    path.write_bytes(b"\xff\xfe\x00garbage")
    with pytest.raises(PointSetFormatError, match="not UTF-8"):
        read_pointset(path)


def test_checkpoint_has_summary_line(tmp_path, square):
    path = tmp_path / "ckpt.txt"
    write_checkpoint(path, square, "iterations=3 best_count=1")
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "# iterations=3 best_count=1"
    assert read_pointset(path) == square


def test_appendix_text_parses(appendix_set):
    assert appendix_set.n == 75
    assert appendix_set[0] == Point(4473587539, 8674070321)
    assert appendix_set.max_abs_coordinate() < 2**62


def test_appendix_set_round_trips_byte_for_byte(appendix_set):
    text = serialize_pointset(appendix_set)
    assert parse_pointset(text) == appendix_set
    assert serialize_pointset(parse_pointset(text)) == text
    assert len(text.splitlines()) == 75
