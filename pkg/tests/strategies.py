"""Hypothesis strategies and networkx adapters shared by the property tests."""

from itertools import combinations

import networkx as nx
from hypothesis import strategies as st

from f_edge_color.core.graph import FInstance, Graph


@st.composite
def graphs(draw, min_n=1, max_n=7):
    """Simple graphs on min_n..max_n vertices."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [pair for pair, kept in zip(pairs, keep) if kept])


@st.composite
def instances(draw, min_n=1, max_n=7, max_f=3, min_edges=0):
    """f-instances with f drawn from 1..max_f."""
    g = draw(graphs(min_n, max_n).filter(lambda g: g.m >= min_edges))
    f = draw(st.lists(st.integers(1, max_f), min_size=g.n, max_size=g.n))
    return FInstance(g, tuple(f))


@st.composite
def connected_instances(draw, min_n=2, max_n=6, max_f=3):
    """Connected f-instances: a random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    tree = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    pairs = [p for p in combinations(range(n), 2) if p not in tree]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    extra = [pair for pair, kept in zip(pairs, keep) if kept]
    f = draw(st.lists(st.integers(1, max_f), min_size=n, max_size=n))
    return FInstance(Graph.from_edges(n, tree + extra), tuple(f))


def to_networkx(g):
    """The same graph as a networkx Graph."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    return nxg
