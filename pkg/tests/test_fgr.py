"""Tests for the .fgr instance format."""

import pytest

from f_edge_color.core.errors import (
    DuplicateEdgeError,
    FgrSyntaxError,
    HeaderMismatchError,
    LoopEdgeError,
    NonPositiveFError,
    VertexOutOfRangeError,
)
from f_edge_color.core.generators import family_names, gen_family
from f_edge_color.formats.fgr import parse_fgr, read_fgr, serialize_fgr, write_fgr

FAMILY_MATRIX = [
    ("cycle", [5], "const:1"),
    ("path", [4], "hub:2"),
    ("complete", [5], "const:2"),
    ("complete_bipartite", [2, 3], "list:1,2,1,1,3"),
    ("wheel", [5], "hub:2"),
    ("petersen", [], "const:1"),
    ("star", [4], "const:3"),
    ("random", [7, 0.5, 5], "hub:2"),
    ("clique_pair", [5, 2], "const:1"),
    ("graph_w", [], None),
]


class TestParseFgr:
    """Tests for parse_fgr."""

    def test_triangle(self):
        """Test the smallest complete document."""
        inst = parse_fgr("p fgraph 3 3\nf 1 1 1\ne 1 2\ne 2 3\ne 1 3\n")
        assert inst.n == 3
        assert inst.edges == ((0, 1), (0, 2), (1, 2))
        assert inst.f == (1, 1, 1)

    def test_edgeless(self):
        """Test a header with no edges."""
        inst = parse_fgr("p fgraph 2 0\nf 1 1\n")
        assert inst.n == 2
        assert inst.m == 0

    def test_comments_and_blank_lines(self):
        """Test comments and blank lines are ignored anywhere."""
        text = "# header follows\n\np fgraph 2 1  # two vertices\nf 2 1\n\ne 2 1 # reversed\n"
        inst = parse_fgr(text)
        assert inst.edges == ((0, 1),)
        assert inst.f == (2, 1)

    def test_loop_names_line(self):
        """Test a loop is reported at its line."""
        with pytest.raises(LoopEdgeError) as exc:
            parse_fgr("p fgraph 2 1\nf 1 1\ne 1 1\n")
        assert exc.value.line == 3
        assert str(exc.value).startswith("line 3:")

    def test_duplicate_names_line(self):
        """Test a repeated edge is reported at the second occurrence."""
        with pytest.raises(DuplicateEdgeError) as exc:
            parse_fgr("p fgraph 3 2\nf 1 1 1\ne 1 2\n# again\ne 2 1\n")
        assert exc.value.line == 5
        assert exc.value.index == 1

    def test_vertex_out_of_range(self):
        """Test endpoints must lie in 1..n."""
        with pytest.raises(VertexOutOfRangeError) as exc:
            parse_fgr("p fgraph 2 1\nf 1 1\ne 1 3\n")
        assert exc.value.line == 3

    def test_non_positive_f(self):
        """Test f values must be positive."""
        with pytest.raises(NonPositiveFError) as exc:
            parse_fgr("p fgraph 2 0\nf 1 0\n")
        assert exc.value.line == 2
        assert exc.value.index == 1

    @pytest.mark.parametrize(
        "text",
        [
            "p fgraph 2 2\nf 1 1\ne 1 2\n",
            "p fgraph 2 0\nf 1 1\ne 1 2\n",
            "p fgraph 3 0\nf 1 1\n",
        ],
    )
    def test_header_mismatch(self, text):
        """Test edge and f counts must agree with the header."""
        with pytest.raises(HeaderMismatchError):
            parse_fgr(text)

    @pytest.mark.parametrize(
        "text,line",
        [
            ("p graph 2 0\nf 1 1\n", 1),
            ("p fgraph 2\nf 1 1\n", 1),
            ("p fgraph two 0\nf 1 1\n", 1),
            ("f 1 1\np fgraph 2 0\n", 1),
            ("p fgraph 2 0\np fgraph 2 0\n", 2),
            ("p fgraph 2 1\ne 1 2\nf 1 1\n", 2),
            ("p fgraph 2 1\nf 1 1\ne 1\n", 3),
            ("p fgraph 2 0\nf 1 1\nx 1\n", 3),
            ("p fgraph 2 0\n", 2),
            ("", 1),
        ],
    )
    def test_syntax_errors(self, text, line):
        """Test malformed lines raise FgrSyntaxError with their line number."""
        with pytest.raises(FgrSyntaxError) as exc:
            parse_fgr(text)
        assert exc.value.line == line


class TestSerializeFgr:
    """Tests for serialize_fgr and the file helpers."""

    def test_layout(self):
        """Test header, f line and 1-based edges in edge order."""
        text = serialize_fgr(gen_family("path", [3], "hub:2"), comments=["gen path 3 hub:2"])
        assert text == "# gen path 3 hub:2\np fgraph 3 2\nf 1 2 1\ne 1 2\ne 2 3\n"

    @pytest.mark.parametrize("name,params,spec", FAMILY_MATRIX)
    def test_round_trip(self, name, params, spec):
        """Test parse(serialize(inst)) == inst for every family."""
        inst = gen_family(name, params, spec)
        assert parse_fgr(serialize_fgr(inst)) == inst

    def test_matrix_covers_every_family(self):
        """Test the round-trip matrix names every family."""
        assert sorted(name for name, _, _ in FAMILY_MATRIX) == family_names()

    def test_file_round_trip(self, tmp_path, w_instance):
        """Test writing creates parent directories and reads back the same instance."""
        path = tmp_path / "nested" / "w.fgr"
        write_fgr(path, w_instance)
        assert read_fgr(path) == w_instance
