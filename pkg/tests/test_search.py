"""Tests for the exact branch-and-bound coloring search."""

import pytest
from hypothesis import given, settings

from f_edge_color.core.coloring import (
    SearchStatus,
    middle_bound,
    search_coloring,
    search_delta_f_coloring,
    verify_coloring,
)
from f_edge_color.core.coloring.search import degeneracy_order, search_edge_order
from f_edge_color.core.errors import EmptyGraphError
from f_edge_color.core.graph import build_instance

from .strategies import instances


class TestSearchColoring:
    """Tests for search_coloring."""

    def test_odd_cycle_refuted_at_root(self, c5):
        """Test the per-color bound proves C5 has no 2-coloring without branching."""
        result = search_coloring(c5, 2)
        assert result.status is SearchStatus.PROVED_NONE
        assert result.nodes_expanded == 0
        assert result.coloring is None
        assert not result.found

    def test_k4_three_colors(self, k4):
        """Test K4 has a 3-coloring."""
        result = search_coloring(k4, 3)
        assert result.found
        assert result.coloring.k == 3
        assert verify_coloring(k4, result.coloring).valid

    def test_capacity_refutes_k4_two_colors(self, k4):
        """Test degree above k * f is refuted at the root."""
        result = search_coloring(k4, 2)
        assert result.status is SearchStatus.PROVED_NONE
        assert result.nodes_expanded == 0

    def test_petersen_three_colors(self, petersen):
        """Test the Petersen graph has no 3-coloring."""
        assert search_coloring(petersen, 3).status is SearchStatus.PROVED_NONE

    def test_budget_exhausted(self, petersen):
        """Test a budget of one node stops the search with EXHAUSTED."""
        result = search_coloring(petersen, 3, budget=1)
        assert result.status is SearchStatus.EXHAUSTED
        assert result.nodes_expanded == 1
        assert result.coloring is None

    def test_fixed_edges_kept(self, triangle):
        """Test precolored edges keep their colors."""
        result = search_coloring(triangle, 3, fixed={(1, 0): 3})
        assert result.found
        assert result.coloring.color_of(0, 1) == 3
        assert verify_coloring(triangle, result.coloring).valid

    def test_conflicting_fixed_edges(self, triangle):
        """Test precolored edges that already clash prove there is no extension."""
        result = search_coloring(triangle, 3, fixed={(0, 1): 1, (1, 2): 1})
        assert result.status is SearchStatus.PROVED_NONE

    def test_fixed_color_outside_palette(self, triangle):
        """Test a precolored edge outside 1..k cannot be extended."""
        result = search_coloring(triangle, 3, fixed={(0, 1): 4})
        assert result.status is SearchStatus.PROVED_NONE

    def test_empty_palette(self, triangle):
        """Test k = 0 only colors edgeless instances."""
        assert search_coloring(triangle, 0).status is SearchStatus.PROVED_NONE
        edgeless = search_coloring(build_instance(2, [], [1, 1]), 0)
        assert edgeless.found
        assert edgeless.coloring.assignment == {}

    def test_f_two_single_color(self, even_triangle):
        """Test f = 2 lets one color cover a triangle."""
        result = search_coloring(even_triangle, 1)
        assert result.found
        assert set(result.coloring.assignment.values()) == {1}

    @given(instances(min_edges=1, max_n=6))
    @settings(max_examples=60, deadline=None)
    def test_middle_bound_always_found(self, inst):
        """Test a coloring with max ceil((d + 1) / f) colors always exists."""
        result = search_coloring(inst, middle_bound(inst))
        assert result.found
        assert verify_coloring(inst, result.coloring).valid

    @given(instances(min_edges=1, max_n=6))
    @settings(max_examples=60, deadline=None)
    def test_below_delta_f_never_found(self, inst):
        """Test fewer than delta_f colors are always refuted."""
        result = search_coloring(inst, inst.delta_f - 1)
        assert result.status is SearchStatus.PROVED_NONE


class TestSearchDeltaF:
    """Tests for search_delta_f_coloring."""

    def test_w_has_no_delta_f_coloring(self, w_instance):
        """Test the exceptional wheel needs delta_f + 1 colors."""
        result = search_delta_f_coloring(w_instance)
        assert result.k == 3
        assert result.status is SearchStatus.PROVED_NONE

    def test_bipartite_found(self, k33):
        """Test K_{3,3} has a 3-coloring."""
        assert search_delta_f_coloring(k33).found

    def test_edgeless_rejected(self):
        """Test the search needs an edge."""
        with pytest.raises(EmptyGraphError):
            search_delta_f_coloring(build_instance(1, [], [1]))


class TestOrdering:
    """Tests for the branching order helpers."""

    def test_degeneracy_order_is_permutation(self, petersen):
        """Test every vertex appears once."""
        assert sorted(degeneracy_order(petersen.graph)) == list(range(10))

    def test_low_degree_vertex_last(self, c5_pendant):
        """Test the pendant vertex is peeled first and so ordered last."""
        assert degeneracy_order(c5_pendant.graph)[-1] == 5

    def test_edge_order_is_permutation(self, k4):
        """Test every edge is branched exactly once."""
        order = search_edge_order(k4.graph, k4.edges)
        assert sorted(order) == list(k4.edges)
