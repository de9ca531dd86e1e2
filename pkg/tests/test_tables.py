"""Table builders and renderers."""

import csv
import io
import json

import pytest

from onanmoon.tables import TABLE_ROWS, build_table, emit_tables, render


def test_hauptmodul_table_row_level_two():
    header, rows = build_table(7, rows=[2])
    assert header[0] == "level"
    (row,) = rows
    assert row[0] == 2
    # q^-1, q^0, ..., q^5 of the level-2 hauptmodul
    assert [int(x) for x in row[1:]] == [1, 0, 276, -2048, 11202, -49152, 184024]


def test_class_congruence_table_shape():
    header, rows = build_table(5, rows=[3])
    assert header == [
        "D", "dim", "dim mod 5", "tr(5A)", "tr mod 5", "-24H(D)", "-24H mod 5",
    ]
    (row,) = rows
    assert row[0] == 3 and row[1] == 26752
    assert row[1] % 5 == row[2]
    assert row[5] == -8  # -24 H(3) = -24/3 * ... = -8


def test_twist_table_small_row():
    header, rows = build_table(10, rows=[8])
    assert rows == [[8, -188, -6, 3]]


def test_render_csv_roundtrip():
    header, rows = build_table(4, rows=[4, 7])
    text = render(header, rows, "csv")
    parsed = list(csv.reader(io.StringIO(text)))
    assert parsed[0] == header
    assert len(parsed) == 3


def test_render_json():
    header, rows = build_table(3, rows=[20])
    doc = json.loads(render(header, rows, "json"))
    assert doc[0]["D"] == "20"


def test_render_markdown_shape():
    header, rows = build_table(8, rows=[11])
    text = render(header, rows, "markdown")
    lines = text.strip().splitlines()
    assert len(lines) == 3
    assert lines[1].startswith("|-")


def test_render_unknown_format():
    with pytest.raises(ValueError):
        render(["a"], [[1]], "xml")


def test_emit_tables_multiple():
    text = emit_tables([7, 8], "csv")
    assert "Table 7" in text and "Table 8" in text


def test_bad_table_index():
    with pytest.raises(ValueError):
        build_table(2)


def test_published_row_lists():
    assert TABLE_ROWS[3] == [20, 24, 40]
    assert TABLE_ROWS[9][-1] == 2671
