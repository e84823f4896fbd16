"""Small edge cuts that are a star or a matching.

Both finders require a connected instance with delta_f >= 3 and only report cuts of
size at most delta_f - 2. Every witness is re-checked by deleting its edges and
counting components before it is returned.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Tuple

from .errors import DisconnectedError, PreconditionError
from .graph import Edge, FInstance, Graph, connected_components, count_components, find_bridges

logger = logging.getLogger(__name__)

DEFAULT_CUT_BUDGET = 1_000_000


class CutKind(str, Enum):
    """Shape of an edge cut."""

    MATCHING = "matching"
    STAR = "star"


@dataclass(frozen=True)
class CutWitness:
    """An edge cut separating ``sides[0]`` from ``sides[1]``.

    Attributes:
        cut_edges: Normalized cut edges in sorted order.
        kind: MATCHING or STAR.
        star_center: Shared endpoint of a star cut, None for matching cuts.
        sides: Vertex parts (X, Y); every cut edge has one end in each.
    """

    cut_edges: Tuple[Edge, ...]
    kind: CutKind
    star_center: Optional[int]
    sides: Tuple[FrozenSet[int], FrozenSet[int]]

    @property
    def size(self) -> int:
        return len(self.cut_edges)

    def to_dict(self) -> Dict:
        """JSON-friendly view with 1-based vertices."""
        return {
            "kind": self.kind.value,
            "size": self.size,
            "star_center": None if self.star_center is None else self.star_center + 1,
            "edges": [[u + 1, v + 1] for u, v in self.cut_edges],
        }


@dataclass(frozen=True)
class MatchingCutResult:
    """Outcome of the bounded matching-cut search."""

    witness: Optional[CutWitness]
    nodes_expanded: int
    budget_exhausted: bool


def _check_preconditions(inst: FInstance) -> None:
    if inst.delta_f < 3:
        raise PreconditionError(
            f"small-cut search needs delta_f >= 3, got delta_f = {inst.delta_f}"
        )
    if count_components(inst.graph) != 1:
        raise DisconnectedError("small-cut search needs a connected instance")


def verify_cut(g: Graph, witness: CutWitness) -> bool:
    """Independent check that the witness is an edge cut with consistent sides."""
    x_side, y_side = witness.sides
    if not x_side or not y_side or x_side & y_side or len(x_side | y_side) != g.n:
        return False
    for u, v in witness.cut_edges:
        if not g.has_edge(u, v) or (u in x_side) == (v in x_side):
            return False
    if witness.kind is CutKind.MATCHING:
        endpoints = [x for e in witness.cut_edges for x in e]
        if len(set(endpoints)) != len(endpoints):
            return False
    elif any(witness.star_center not in e for e in witness.cut_edges):
        return False
    return count_components(g.without_edges(witness.cut_edges)) > count_components(g)


def _star_candidates(g: Graph) -> List[CutWitness]:
    everyone = frozenset(range(g.n))
    found: List[CutWitness] = []

    for u in range(g.n):
        if g.degree(u) == 0:
            continue
        found.append(
            CutWitness(
                cut_edges=tuple(g.incidence[u]),
                kind=CutKind.STAR,
                star_center=u,
                sides=(frozenset([u]), everyone - {u}),
            )
        )
        rest, local_to_global = g.induced(everyone - {u})
        pieces = connected_components(rest)
        if len(pieces) < 2:
            continue
        for piece in pieces:
            y_side = frozenset(local_to_global[i] for i in piece)
            edges = tuple(e for e in g.incidence[u] if (e[0] if e[1] == u else e[1]) in y_side)
            found.append(
                CutWitness(
                    cut_edges=tuple(sorted(edges)),
                    kind=CutKind.STAR,
                    star_center=u,
                    sides=(everyone - y_side, y_side),
                )
            )

    for a, b in find_bridges(g):
        split = connected_components(g.without_edges([(a, b)]))
        a_side = next(frozenset(c) for c in split if a in c)
        found.append(
            CutWitness(
                cut_edges=((a, b),),
                kind=CutKind.STAR,
                star_center=a,
                sides=(a_side, everyone - a_side),
            )
        )
    return found


def find_star_cut(inst: FInstance) -> Optional[CutWitness]:
    """Smallest star cut of size <= delta_f - 2, ties broken by lowest center.

    Candidates at each vertex u are the edges from u into each component of G - u
    (when G - u is disconnected) and the full edge set at u; every bridge is also a
    size-1 candidate centered at its lower endpoint.

    Raises:
        PreconditionError: If delta_f < 3.
        DisconnectedError: If the instance is not connected.
    """
    _check_preconditions(inst)
    limit = inst.delta_f - 2
    g = inst.graph
    candidates = [c for c in _star_candidates(g) if c.size <= limit]
    candidates.sort(key=lambda c: (c.size, c.star_center, c.cut_edges))
    for candidate in candidates:
        if verify_cut(g, candidate):
            logger.debug(
                "star cut of size %d at vertex %d", candidate.size, candidate.star_center
            )
            return candidate
    return None


def _bfs_order(g: Graph) -> List[int]:
    order = [0]
    seen = {0}
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        for y in g.neighbors(x):
            if y not in seen:
                seen.add(y)
                order.append(y)
    return order


def find_matching_cut(inst: FInstance, budget: int = DEFAULT_CUT_BUDGET) -> MatchingCutResult:
    """Bounded branch-and-bound search for a matching cut of size <= delta_f - 2.

    Vertices are placed on side X or Y in BFS order with vertex 0 fixed on X. A
    placement is pruned when the vertex would get a second crossing edge, when it
    would cross to a neighbor that already has one, or when the crossing count would
    exceed the size limit. Each attempted placement counts as one expanded node.

    Args:
        inst: Connected instance with delta_f >= 3.
        budget: Maximum number of expanded nodes.

    Returns:
        MatchingCutResult; ``budget_exhausted`` is set when the search gave up.

    Raises:
        PreconditionError: If delta_f < 3.
        DisconnectedError: If the instance is not connected.
    """
    _check_preconditions(inst)
    g = inst.graph
    limit = inst.delta_f - 2
    n = g.n
    order = _bfs_order(g)

    side: List[Optional[int]] = [None] * n
    crossing = [0] * n
    placed_crossings: List[List[int]] = [[] for _ in range(n)]
    total = 0
    nodes = 0

    def place(v: int, s: int) -> bool:
        nonlocal total
        partners = [w for w in g.adjacency[v] if side[w] is not None and side[w] != s]
        if len(partners) > 1 or total + len(partners) > limit:
            return False
        if partners and crossing[partners[0]]:
            return False
        side[v] = s
        for w in partners:
            crossing[w] += 1
            crossing[v] += 1
        placed_crossings[v] = partners
        total += len(partners)
        return True

    def undo(v: int) -> None:
        nonlocal total
        for w in placed_crossings[v]:
            crossing[w] -= 1
            crossing[v] -= 1
        total -= len(placed_crossings[v])
        placed_crossings[v] = []
        side[v] = None

    place(order[0], 0)
    choice = [0] * (n + 1)
    depth = 1
    while depth >= 1:
        if depth == n:
            witness = _matching_witness(g, side)
            if witness is not None:
                logger.debug("matching cut of size %d after %d nodes", witness.size, nodes)
                return MatchingCutResult(witness, nodes, False)
            depth -= 1
            undo(order[depth])
            continue

        v = order[depth]
        advanced = False
        while choice[depth] < 2:
            s = choice[depth]
            choice[depth] += 1
            nodes += 1
            if nodes > budget:
                logger.info("matching-cut search gave up after %d nodes", budget)
                return MatchingCutResult(None, budget, True)
            if place(v, s):
                advanced = True
                break
        if advanced:
            depth += 1
            choice[depth] = 0
        else:
            choice[depth] = 0
            depth -= 1
            if depth >= 1:
                undo(order[depth])

    logger.debug("no matching cut; %d nodes expanded", nodes)
    return MatchingCutResult(None, nodes, False)


def _matching_witness(g: Graph, side: List[Optional[int]]) -> Optional[CutWitness]:
    x_side = frozenset(v for v in range(g.n) if side[v] == 0)
    y_side = frozenset(v for v in range(g.n) if side[v] == 1)
    if not y_side:
        return None
    cut = tuple(e for e in g.edges if side[e[0]] != side[e[1]])
    witness = CutWitness(cut, CutKind.MATCHING, None, (x_side, y_side))
    if not verify_cut(g, witness):
        logger.warning("discarding matching cut that failed re-verification: %s", cut)
        return None
    return witness
