"""Tests for star and matching cuts."""

from itertools import product

import pytest
from hypothesis import assume, given, settings

from f_edge_color.core.cuts import (
    CutKind,
    CutWitness,
    find_matching_cut,
    find_star_cut,
    verify_cut,
)
from f_edge_color.core.errors import DisconnectedError, PreconditionError
from f_edge_color.core.generators import gen_family
from f_edge_color.core.graph import build_instance

from .strategies import connected_instances


def brute_force_matching_cut(inst):
    """Whether some bipartition crosses at most delta_f - 2 pairwise disjoint edges."""
    g = inst.graph
    limit = inst.delta_f - 2
    for rest in product((0, 1), repeat=g.n - 1):
        side = (0,) + rest
        if 1 not in side:
            continue
        cut = [(u, v) for u, v in g.edges if side[u] != side[v]]
        ends = [x for e in cut for x in e]
        if len(cut) <= limit and len(ends) == len(set(ends)):
            return True
    return False


class TestStarCut:
    """Tests for find_star_cut."""

    def test_bridge_between_cliques(self):
        """Test two K5 joined by one edge have a size-1 star cut at the lower endpoint."""
        inst = gen_family("clique_pair", [5, 1])
        cut = find_star_cut(inst)
        assert cut is not None
        assert cut.kind is CutKind.STAR
        assert cut.cut_edges == ((0, 5),)
        assert cut.star_center == 0
        assert verify_cut(inst.graph, cut)

    def test_low_degree_vertex_is_star(self):
        """Test the edges at a vertex of degree <= delta_f - 2 form a star cut."""
        # K5 plus vertex 5 attached to 0 and 1: no bridge and no cut vertex
        edges = [(a, b) for a in range(5) for b in range(a + 1, 5)] + [(0, 5), (1, 5)]
        inst = build_instance(6, edges, [1] * 6)
        assert inst.delta_f == 5
        cut = find_star_cut(inst)
        assert cut is not None
        assert cut.star_center == 5
        assert cut.cut_edges == ((0, 5), (1, 5))
        assert cut.sides[0] == frozenset({5})

    def test_no_star_cut_in_matching_pair(self, clique_pair_matching):
        """Test two K5 joined by a 2-matching have no small star cut."""
        assert find_star_cut(clique_pair_matching) is None

    def test_requires_delta_f_three(self, c5):
        """Test small delta_f is a precondition failure."""
        with pytest.raises(PreconditionError):
            find_star_cut(c5)

    def test_requires_connected(self):
        """Test a disconnected instance is rejected."""
        k4 = gen_family("complete", [4]).graph
        edges = list(k4.edges) + [(a + 4, b + 4) for a, b in k4.edges]
        with pytest.raises(DisconnectedError):
            find_star_cut(build_instance(8, edges, [1] * 8))

    def test_witness_serialises_one_based(self):
        """Test to_dict uses 1-based vertices."""
        cut = find_star_cut(gen_family("clique_pair", [5, 1]))
        assert cut.to_dict() == {"kind": "star", "size": 1, "star_center": 1, "edges": [[1, 6]]}


class TestMatchingCut:
    """Tests for find_matching_cut."""

    def test_two_matching_between_cliques(self, clique_pair_matching):
        """Test the 2-matching joining two K5 is found and verified."""
        result = find_matching_cut(clique_pair_matching)
        assert not result.budget_exhausted
        witness = result.witness
        assert witness is not None
        assert witness.kind is CutKind.MATCHING
        assert witness.cut_edges == ((0, 5), (1, 6))
        assert 0 in witness.sides[0]
        assert verify_cut(clique_pair_matching.graph, witness)

    def test_none_in_k4(self, k4):
        """Test K4 has no matching cut of size <= 1."""
        result = find_matching_cut(k4)
        assert result.witness is None
        assert not result.budget_exhausted
        assert result.nodes_expanded > 0

    def test_budget_exhaustion(self, clique_pair_matching):
        """Test a tiny budget reports exhaustion instead of failing."""
        result = find_matching_cut(clique_pair_matching, budget=1)
        assert result.witness is None
        assert result.budget_exhausted

    def test_requires_delta_f_three(self, triangle):
        """Test small delta_f is a precondition failure."""
        with pytest.raises(PreconditionError):
            find_matching_cut(triangle)

    @given(connected_instances(min_n=4, max_n=7, max_f=1))
    @settings(max_examples=60, deadline=None)
    def test_agrees_with_brute_force(self, inst):
        """Test a witness exists exactly when brute force finds a small matching cut."""
        assume(inst.delta_f >= 3)
        result = find_matching_cut(inst)
        assert not result.budget_exhausted
        assert (result.witness is not None) == brute_force_matching_cut(inst)
        if result.witness is not None:
            assert result.witness.size <= inst.delta_f - 2
            assert verify_cut(inst.graph, result.witness)


class TestVerifyCut:
    """Tests for verify_cut."""

    def test_rejects_non_cut(self, k4):
        """Test a single K4 edge does not disconnect anything."""
        fake = CutWitness(
            cut_edges=((0, 1),),
            kind=CutKind.MATCHING,
            star_center=None,
            sides=(frozenset({0}), frozenset({1, 2, 3})),
        )
        assert not verify_cut(k4.graph, fake)

    def test_rejects_star_without_center(self, clique_pair_matching):
        """Test a star witness whose edges do not share the center is rejected."""
        fake = CutWitness(
            cut_edges=((0, 5), (1, 6)),
            kind=CutKind.STAR,
            star_center=0,
            sides=(frozenset(range(5)), frozenset(range(5, 10))),
        )
        assert not verify_cut(clique_pair_matching.graph, fake)
