"""Tests for coloring JSON documents."""

import json

import pytest

from f_edge_color.core.coloring import FColoring, upper_color_f
from f_edge_color.core.errors import ColoringFormatError
from f_edge_color.formats.coloring_json import (
    dumps_stable,
    parse_coloring_json,
    read_coloring_json,
    serialize_coloring_json,
    write_coloring_json,
)


class TestSerialize:
    """Tests for serialize_coloring_json and dumps_stable."""

    def test_exact_bytes(self):
        """Test the document layout is fixed."""
        col = FColoring(3, {(1, 2): 3, (0, 1): 1, (0, 2): 2})
        assert serialize_coloring_json(col) == (
            '{"k": 3, "edges": [[1, 2, 1], [1, 3, 2], [2, 3, 3]]}\n'
        )

    def test_stable_across_runs(self, petersen):
        """Test two serializations of the same coloring are byte-identical."""
        first = serialize_coloring_json(upper_color_f(petersen))
        second = serialize_coloring_json(upper_color_f(petersen))
        assert first == second

    def test_dumps_keeps_insertion_order(self):
        """Test keys are not re-sorted."""
        assert dumps_stable({"b": 1, "a": 2}) == '{"b": 1, "a": 2}\n'


class TestParse:
    """Tests for parse_coloring_json."""

    def test_parse(self):
        """Test 1-based rows become 0-based normalized edges."""
        col = parse_coloring_json('{"k": 2, "edges": [[2, 1, 1], [2, 3, 2]]}')
        assert col.k == 2
        assert col.assignment == {(0, 1): 1, (1, 2): 2}

    def test_colors_not_range_checked(self):
        """Test out-of-palette colors parse so verification can report them."""
        col = parse_coloring_json('{"k": 1, "edges": [[1, 2, 5]]}')
        assert col.assignment == {(0, 1): 5}

    @pytest.mark.parametrize(
        "text",
        [
            "not json",
            "[]",
            '{"k": 2}',
            '{"k": -1, "edges": []}',
            '{"k": true, "edges": []}',
            '{"k": 2, "edges": {}}',
            '{"k": 2, "edges": [[1, 2]]}',
            '{"k": 2, "edges": [[1, 2, "1"]]}',
            '{"k": 2, "edges": [[0, 2, 1]]}',
            '{"k": 2, "edges": [[1, 1, 1]]}',
            '{"k": 2, "edges": [[1, 2, 1], [2, 1, 2]]}',
        ],
    )
    def test_malformed(self, text):
        """Test malformed documents raise ColoringFormatError."""
        with pytest.raises(ColoringFormatError):
            parse_coloring_json(text)

    def test_vertex_above_n(self):
        """Test endpoints are range-checked when n is known."""
        text = '{"k": 1, "edges": [[1, 4, 1]]}'
        assert parse_coloring_json(text).assignment == {(0, 3): 1}
        with pytest.raises(ColoringFormatError, match="vertex 4"):
            parse_coloring_json(text, n=3)


class TestFiles:
    """Tests for the file helpers."""

    def test_write_then_read(self, tmp_path, c5):
        """Test a written coloring reads back unchanged."""
        col = upper_color_f(c5)
        path = tmp_path / "out" / "c5.json"
        write_coloring_json(path, col)
        assert json.loads(path.read_text())["k"] == col.k
        assert read_coloring_json(path, n=5) == col
