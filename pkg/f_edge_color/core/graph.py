"""Simple undirected graphs and f-instances.

Vertices are dense 0-based indices. Edges are stored normalized as ``(u, v)`` with
``u < v`` and kept in sorted order; the position of an edge in :attr:`Graph.edges`
is its edge index, which drives every deterministic tie-break in the package.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Set, Tuple

import networkx as nx

from .errors import (
    DuplicateEdgeError,
    LoopEdgeError,
    NonPositiveFError,
    VertexOutOfRangeError,
)

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    """Return the edge ``{u, v}`` as an ordered pair with the smaller endpoint first."""
    return (u, v) if u < v else (v, u)


def _normalize_edges(n: int, edges: Iterable[Sequence[int]]) -> Tuple[Edge, ...]:
    seen: Dict[Edge, int] = {}
    for index, pair in enumerate(edges):
        u, v = int(pair[0]), int(pair[1])
        for endpoint in (u, v):
            if endpoint < 0 or endpoint >= n:
                raise VertexOutOfRangeError(
                    f"edge {index} names vertex {endpoint} outside 0..{n - 1}", index
                )
        if u == v:
            raise LoopEdgeError(f"edge {index} is a loop at vertex {u}", index)
        key = normalize_edge(u, v)
        if key in seen:
            raise DuplicateEdgeError(
                f"edge {index} duplicates edge {seen[key]} ({key[0]}, {key[1]})", index
            )
        seen[key] = index
    return tuple(sorted(seen))


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Attributes:
        n: Vertex count.
        edges: Normalized edges in sorted order.
        adjacency: Neighbor set of every vertex.
    """

    n: int
    edges: Tuple[Edge, ...]
    adjacency: Tuple[FrozenSet[int], ...] = field(repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph, rejecting loops, duplicates and out-of-range vertices.

        Args:
            n: Vertex count.
            edges: Pairs of vertex indices in any order.

        Returns:
            Graph instance.

        Raises:
            VertexOutOfRangeError, LoopEdgeError, DuplicateEdgeError: naming the
                offending position in ``edges``.
        """
        if n < 0:
            raise VertexOutOfRangeError(f"vertex count must be >= 0, got {n}", -1)
        normalized = _normalize_edges(n, edges)
        neighbors: List[set] = [set() for _ in range(n)]
        for u, v in normalized:
            neighbors[u].add(v)
            neighbors[v].add(u)
        return cls(n=n, edges=normalized, adjacency=tuple(frozenset(s) for s in neighbors))

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """Convert a networkx graph, numbering its nodes ``0..n-1`` in sorted order."""
        index = {node: i for i, node in enumerate(sorted(g.nodes))}
        return cls.from_edges(len(index), [(index[u], index[v]) for u, v in g.edges])

    @cached_property
    def nx_graph(self) -> nx.Graph:
        """Frozen networkx copy on nodes ``0..n-1``."""
        view = nx.Graph()
        view.add_nodes_from(range(self.n))
        view.add_edges_from(self.edges)
        return nx.freeze(view)

    @property
    def m(self) -> int:
        """Edge count."""
        return len(self.edges)

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        """Degree of every vertex."""
        return tuple(len(adj) for adj in self.adjacency)

    def degree(self, v: int) -> int:
        """Degree of ``v``."""
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        """Maximum degree, 0 for the empty graph."""
        return max(self.degrees, default=0)

    def neighbors(self, v: int) -> List[int]:
        """Neighbors of ``v`` in increasing order."""
        return sorted(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        """Whether ``{u, v}`` is an edge."""
        return 0 <= u < self.n and v in self.adjacency[u]

    @cached_property
    def edge_index(self) -> Dict[Edge, int]:
        """Map from normalized edge to its index."""
        return {edge: i for i, edge in enumerate(self.edges)}

    @cached_property
    def incidence(self) -> Tuple[Tuple[Edge, ...], ...]:
        """Incident edges of every vertex, in edge-index order."""
        incident: List[List[Edge]] = [[] for _ in range(self.n)]
        for edge in self.edges:
            incident[edge[0]].append(edge)
            incident[edge[1]].append(edge)
        return tuple(tuple(items) for items in incident)

    def without_edges(self, removed: Iterable[Sequence[int]]) -> "Graph":
        """Copy of the graph with the given edges deleted (vertices kept)."""
        drop = {normalize_edge(e[0], e[1]) for e in removed}
        return Graph.from_edges(self.n, [e for e in self.edges if e not in drop])

    def induced(self, vertices: Iterable[int]) -> Tuple["Graph", Tuple[int, ...]]:
        """Induced subgraph relabelled to ``0..k-1``.

        Returns:
            Tuple of (subgraph, mapping local index -> original vertex).
        """
        members = tuple(sorted(set(vertices)))
        local = {v: i for i, v in enumerate(members)}
        edges = [
            (local[u], local[v]) for u, v in self.edges if u in local and v in local
        ]
        return Graph.from_edges(len(members), edges), members

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``permutation[v]``."""
        return Graph.from_edges(
            self.n, [(permutation[u], permutation[v]) for u, v in self.edges]
        )


class Bipartition(NamedTuple):
    """Two-sided vertex partition; every edge crosses it."""

    side_a: FrozenSet[int]
    side_b: FrozenSet[int]


class Claw(NamedTuple):
    """Induced K_{1,3}: a center and three pairwise non-adjacent neighbors."""

    center: int
    leaves: Tuple[int, int, int]


def _compute_delta_f(graph: Graph, f: Sequence[int]) -> int:
    return max((-(-graph.degree(v) // f[v]) for v in range(graph.n)), default=0)


@dataclass(frozen=True)
class FInstance:
    """A simple graph paired with a positive vertex function f.

    Attributes:
        graph: The underlying graph.
        f: Positive integer per vertex.
        delta_f: Cached max over v of ceil(d(v) / f(v)); 0 when there are no edges.
    """

    graph: Graph
    f: Tuple[int, ...]
    delta_f: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "f", tuple(int(x) for x in self.f))
        if len(self.f) != self.graph.n:
            raise NonPositiveFError(
                f"f has {len(self.f)} entries but the graph has {self.graph.n} vertices",
                len(self.f),
            )
        for v, value in enumerate(self.f):
            if value < 1:
                raise NonPositiveFError(f"f({v}) = {value} is not positive", v)
        object.__setattr__(self, "delta_f", _compute_delta_f(self.graph, self.f))

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self.graph.edges

    def ratio_ceiling(self, v: int) -> int:
        """ceil(d(v) / f(v))."""
        return -(-self.graph.degree(v) // self.f[v])

    def is_f_maximum(self, v: int) -> bool:
        """Whether ``d(v) = f(v) * delta_f`` (requires at least one edge)."""
        return self.delta_f > 0 and self.graph.degree(v) == self.f[v] * self.delta_f

    def with_f(self, f: Sequence[int]) -> "FInstance":
        """Same graph under another vertex function."""
        return FInstance(self.graph, tuple(f))

    def without_edges(self, removed: Iterable[Sequence[int]]) -> "FInstance":
        """Same vertex set and f with the given edges deleted."""
        return FInstance(self.graph.without_edges(removed), self.f)

    def induced(self, vertices: Iterable[int]) -> Tuple["FInstance", Tuple[int, ...]]:
        """Induced sub-instance relabelled to ``0..k-1`` plus the local->original map."""
        sub, members = self.graph.induced(vertices)
        return FInstance(sub, tuple(self.f[v] for v in members)), members

    def relabel(self, permutation: Sequence[int]) -> "FInstance":
        """Instance with vertex ``v`` renamed to ``permutation[v]``."""
        f = [0] * self.n
        for v, target in enumerate(permutation):
            f[target] = self.f[v]
        return FInstance(self.graph.relabel(permutation), tuple(f))


def build_instance(n: int, edges: Iterable[Sequence[int]], f: Sequence[int]) -> FInstance:
    """Validate raw input and build an :class:`FInstance`.

    Args:
        n: Vertex count.
        edges: Pairs of 0-based vertex indices.
        f: Positive integer per vertex.

    Returns:
        FInstance with ``delta_f`` cached.

    Raises:
        VertexOutOfRangeError, LoopEdgeError, DuplicateEdgeError: naming the edge index.
        NonPositiveFError: naming the vertex index.
    """
    graph = Graph.from_edges(n, edges)
    return FInstance(graph, tuple(f))


def delta_f(inst: FInstance) -> int:
    """Max over v of ceil(d(v) / f(v)), recomputed from scratch; 0 for edgeless graphs."""
    return _compute_delta_f(inst.graph, inst.f)


def connected_components(g: Graph) -> List[Tuple[int, ...]]:
    """Maximal connected vertex sets, each sorted, ordered by smallest member."""
    return sorted(tuple(sorted(c)) for c in nx.connected_components(g.nx_graph))


def is_connected(g: Graph) -> bool:
    """Whether the graph has exactly one component (the null graph is not connected)."""
    return count_components(g) == 1


def is_bipartite(g: Graph) -> Optional[Bipartition]:
    """Two-color the graph.

    The lowest-index vertex of every component goes to side A, so the answer is
    deterministic; isolated vertices land on side A.

    Returns:
        The bipartition, or None when an odd cycle exists.
    """
    try:
        color = nx.bipartite.color(g.nx_graph)
    except nx.NetworkXError:
        return None
    side_a: Set[int] = set()
    for component in connected_components(g):
        anchor = color[component[0]]
        side_a.update(v for v in component if color[v] == anchor)
    return Bipartition(frozenset(side_a), frozenset(range(g.n)) - frozenset(side_a))


def find_claw(g: Graph) -> Optional[Claw]:
    """Lexicographically smallest induced K_{1,3}, or None when the graph is claw-free."""
    for center in range(g.n):
        for a, b, c in combinations(g.neighbors(center), 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return Claw(center, (a, b, c))
    return None


def is_claw_free(g: Graph) -> bool:
    """Whether no induced K_{1,3} exists."""
    return find_claw(g) is None


def find_bridges(g: Graph) -> List[Edge]:
    """Cut edges, in edge-index order."""
    found = {normalize_edge(u, v) for u, v in nx.bridges(g.nx_graph)}
    return [e for e in g.edges if e in found]


def count_components(g: Graph) -> int:
    """Number of connected components."""
    return nx.number_connected_components(g.nx_graph)
