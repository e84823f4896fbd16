"""Exact f-chromatic index, f-criticality and small-instance enumeration."""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Sequence, Union

from .canonical import canonical_form
from .coloring import (
    FColoring,
    SearchStatus,
    search_coloring,
    search_delta_f_coloring,
    upper_color_f,
)
from .errors import EmptyGraphError, InternalInconsistencyError, TooLargeError
from .generators import FPattern
from .graph import FInstance, Graph, is_connected

logger = logging.getLogger(__name__)

ORACLE_EDGE_CAP = 30
ENUMERATION_VERTEX_CAP = 8


@dataclass(frozen=True)
class OracleResult:
    """Exact f-chromatic index with a witness.

    Attributes:
        chi_f: delta_f or delta_f + 1.
        witness: f-coloring with ``chi_f`` colors.
        nodes_expanded: Nodes of the exhaustive search at delta_f.
        exhausted_at_delta_f: True when no delta_f-coloring exists.
    """

    chi_f: int
    witness: FColoring
    nodes_expanded: int
    exhausted_at_delta_f: bool

    def to_dict(self) -> Dict[str, object]:
        return {
            "chi_f": self.chi_f,
            "exhausted_at_delta_f": self.exhausted_at_delta_f,
            "nodes": self.nodes_expanded,
            "witness": self.witness.to_dict(),
        }


def _check_size(inst: FInstance, max_edges: int) -> None:
    if inst.m == 0:
        raise EmptyGraphError("the f-chromatic index needs at least one edge")
    cap = min(max_edges, ORACLE_EDGE_CAP)
    if inst.m > cap:
        raise TooLargeError(f"{inst.m} edges exceed the oracle cap of {cap}")


def exact_chi_f(inst: FInstance, max_edges: int = ORACLE_EDGE_CAP) -> OracleResult:
    """Decide between delta_f and delta_f + 1 by exhaustive search.

    Raises:
        EmptyGraphError: If the instance has no edges.
        TooLargeError: Above ``max_edges`` (never more than 30) edges.
        InternalInconsistencyError: If the constructive colorer beats a proved bound.
    """
    _check_size(inst, max_edges)
    result = search_delta_f_coloring(inst)
    if result.status is SearchStatus.FOUND and result.coloring is not None:
        return OracleResult(inst.delta_f, result.coloring, result.nodes_expanded, False)
    if result.status is not SearchStatus.PROVED_NONE:
        raise InternalInconsistencyError("unbounded search ended without a decision")

    upper = upper_color_f(inst)
    if upper.k <= inst.delta_f:
        raise InternalInconsistencyError(
            f"search proved no {inst.delta_f}-coloring exists, "
            f"but the constructive colorer used {upper.k} colors"
        )
    return OracleResult(inst.delta_f + 1, upper, result.nodes_expanded, True)


def is_f_critical(inst: FInstance, max_edges: int = ORACLE_EDGE_CAP) -> bool:
    """Connected, f-Class 2, and every edge deletion lowers the f-chromatic index.

    Once G is f-Class 2 with index delta_f(G) + 1, deleting ``e`` lowers the index
    exactly when G - e has a delta_f(G)-coloring.

    Raises:
        EmptyGraphError: If the instance has no edges.
        TooLargeError: Above the oracle edge cap.
    """
    _check_size(inst, max_edges)
    if not is_connected(inst.graph):
        return False
    if not exact_chi_f(inst, max_edges).exhausted_at_delta_f:
        return False
    for edge in inst.edges:
        rest = inst.without_edges([edge])
        if rest.m == 0:
            continue
        if search_coloring(rest, inst.delta_f).status is not SearchStatus.FOUND:
            return False
    return True


def _augment(g: Graph) -> Iterator[Graph]:
    n = g.n
    for mask in range(1, 1 << n):
        extra = [(v, n) for v in range(n) if mask >> v & 1]
        yield Graph.from_edges(n + 1, list(g.edges) + extra)


def connected_graphs(n: int) -> List[Graph]:
    """All connected graphs on ``n`` vertices up to isomorphism, canonically labelled.

    Sorted by canonical key. Built by adding a vertex to every connected graph on
    ``n - 1`` vertices, since every connected graph has a non-cut vertex.

    Raises:
        TooLargeError: If ``n`` exceeds 8.
    """
    if n > ENUMERATION_VERTEX_CAP:
        raise TooLargeError(f"enumeration is capped at {ENUMERATION_VERTEX_CAP} vertices")
    if n < 1:
        return []
    level: Dict[str, Graph] = {"1:": Graph.from_edges(1, [])}
    for _ in range(1, n):
        nxt: Dict[str, Graph] = {}
        for g in level.values():
            for h in _augment(g):
                form = canonical_form(h)
                if form.key not in nxt:
                    nxt[form.key] = h.relabel(form.permutation)
        level = nxt
    return [level[key] for key in sorted(level)]


PatternLike = Union[str, FPattern]


def enumerate_instances(
    max_n: int, f_palette: Iterable[PatternLike] = ("const:1",)
) -> Iterator[FInstance]:
    """Stream connected non-isomorphic graphs on 2..max_n vertices crossed with f patterns.

    Order: by vertex count, then canonical key, then palette order. Each graph is
    emitted in its canonical labeling.

    Raises:
        TooLargeError: If ``max_n`` exceeds 8.
    """
    if max_n > ENUMERATION_VERTEX_CAP:
        raise TooLargeError(f"enumeration is capped at {ENUMERATION_VERTEX_CAP} vertices")
    patterns: Sequence[FPattern] = [
        p if isinstance(p, FPattern) else FPattern.parse(p) for p in f_palette
    ]
    for n in range(2, max_n + 1):
        graphs = connected_graphs(n)
        logger.debug("%d connected graphs on %d vertices", len(graphs), n)
        for g in graphs:
            for pattern in patterns:
                yield FInstance(g, pattern.apply(g))


def critical_instances(
    max_n: int, f_palette: Iterable[PatternLike] = ("const:1",)
) -> Iterator[FInstance]:
    """The f-critical members of :func:`enumerate_instances`."""
    for inst in enumerate_instances(max_n, f_palette):
        if inst.m <= ORACLE_EDGE_CAP and is_f_critical(inst):
            yield inst
