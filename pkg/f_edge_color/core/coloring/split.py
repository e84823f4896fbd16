"""Vertex splitting: reduce f-coloring to proper edge coloring.

Vertex ``v`` becomes ``f(v)`` copies; its incident edges, taken in edge-index order,
are dealt to the copies round-robin, so each copy carries at most ceil(d(v)/f(v))
edges. A proper coloring of the split graph merges back into an f-coloring because
each copy sees a color at most once.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..errors import CoverageMismatchError, EmptyGraphError
from ..graph import Edge, FInstance, Graph, normalize_edge
from .base import FColoring


@dataclass(frozen=True)
class SplitGraph:
    """Result of :func:`split_instance`.

    Attributes:
        split: The split graph.
        origin: Split vertex -> original vertex.
        groups: For each original vertex, its copies in order.
        edge_origin: Split edge -> original edge.
    """

    split: Graph
    origin: Tuple[int, ...]
    groups: Tuple[Tuple[int, ...], ...]
    edge_origin: Dict[Edge, Edge]


def split_instance(inst: FInstance) -> SplitGraph:
    """Split every vertex into f(v) copies with round-robin edge distribution.

    Raises:
        EmptyGraphError: If the instance has no edges.
    """
    if inst.delta_f == 0:
        raise EmptyGraphError("cannot split an edgeless instance")

    g = inst.graph
    offsets: List[int] = []
    total = 0
    for v in range(g.n):
        offsets.append(total)
        total += inst.f[v]
    origin = tuple(v for v in range(g.n) for _ in range(inst.f[v]))
    groups = tuple(tuple(range(offsets[v], offsets[v] + inst.f[v])) for v in range(g.n))

    copy_of: Dict[Tuple[int, Edge], int] = {}
    for v in range(g.n):
        for position, edge in enumerate(g.incidence[v]):
            copy_of[(v, edge)] = offsets[v] + position % inst.f[v]

    edge_origin: Dict[Edge, Edge] = {}
    for edge in g.edges:
        u, v = edge
        edge_origin[normalize_edge(copy_of[(u, edge)], copy_of[(v, edge)])] = edge

    return SplitGraph(
        split=Graph.from_edges(total, list(edge_origin)),
        origin=origin,
        groups=groups,
        edge_origin=edge_origin,
    )


def merge_split_coloring(split: SplitGraph, inst: FInstance, coloring: FColoring) -> FColoring:
    """Carry a coloring of the split graph back to the original edges.

    Raises:
        CoverageMismatchError: If the split coloring does not cover every original edge.
    """
    merged = {split.edge_origin[e]: c for e, c in coloring.assignment.items()}
    if len(merged) != inst.m:
        raise CoverageMismatchError(
            f"split coloring covers {len(merged)} of {inst.m} original edges"
        )
    return FColoring(coloring.k, merged)
