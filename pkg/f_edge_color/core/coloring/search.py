"""Exact branch-and-bound search for f-colorings with a fixed palette.

Edges are branched in an order derived from a degeneracy ordering of the vertices,
densest part first. Colors are tried in ascending order, and a color may only be
used once every lower color has appeared (first-use symmetry breaking) unless some
edges are precolored. After each assignment the search prunes on:

* per-vertex capacity: uncolored edges at a vertex must fit in its spare slots;
* forward checking: every uncolored edge next to the assigned one keeps a color
  with a spare slot at both ends;
* a per-color bound: color ``c`` can still take at most
  ``floor(sum_x min(spare(x, c), uncolored(x)) / 2)`` edges, and these bounds must
  add up to the number of uncolored edges.

The per-color bound refutes overfull instances such as odd cycles at the root.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..errors import EmptyGraphError
from ..graph import Edge, FInstance, Graph, normalize_edge
from .base import FColoring

logger = logging.getLogger(__name__)


class SearchStatus(str, Enum):
    """How a bounded search ended."""

    FOUND = "found"
    EXHAUSTED = "exhausted"
    PROVED_NONE = "proved_none"


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an exact coloring search.

    Attributes:
        status: FOUND, EXHAUSTED (budget hit) or PROVED_NONE (tree fully explored).
        k: Palette size searched.
        coloring: The witness when FOUND.
        nodes_expanded: Color assignments tried.
    """

    status: SearchStatus
    k: int
    coloring: Optional[FColoring]
    nodes_expanded: int

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND


def degeneracy_order(g: Graph) -> List[int]:
    """Vertices in reverse smallest-last order (densest part first)."""
    degree = list(g.degrees)
    removed = [False] * g.n
    order: List[int] = []
    for _ in range(g.n):
        v = min((x for x in range(g.n) if not removed[x]), key=lambda x: (degree[x], x))
        removed[v] = True
        order.append(v)
        for w in g.adjacency[v]:
            if not removed[w]:
                degree[w] -= 1
    order.reverse()
    return order


def search_edge_order(g: Graph, edges: Sequence[Edge]) -> List[Edge]:
    """Branching order: by later endpoint position, then earlier, in degeneracy order."""
    position = {v: i for i, v in enumerate(degeneracy_order(g))}

    def key(e: Edge) -> Tuple[int, int, Edge]:
        a, b = position[e[0]], position[e[1]]
        return (max(a, b), min(a, b), e)

    return sorted(edges, key=key)


class _Search:
    def __init__(
        self,
        inst: FInstance,
        k: int,
        budget: Optional[int],
        fixed: Mapping[Edge, int],
    ):
        self.inst = inst
        self.k = k
        self.budget = budget
        self.fixed = dict(fixed)
        self.f = inst.f
        n = inst.n

        free = [e for e in inst.edges if e not in self.fixed]
        self.order = search_edge_order(inst.graph, free)
        self.symmetric = not self.fixed

        # spare[x][c] for c in 1..k; index 0 unused.
        self.spare = [[self.f[x]] * (k + 1) for x in range(n)]
        self.uncolored = [0] * n
        self.remaining = len(self.order)
        self.later: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
        for i, (a, b) in enumerate(self.order):
            self.uncolored[a] += 1
            self.uncolored[b] += 1
            self.later[a].append((i, b))
            self.later[b].append((i, a))
        self.assigned: List[int] = [0] * len(self.order)
        self.max_used: List[int] = [0] * (len(self.order) + 1)
        self.nodes = 0
        self.fixed_ok = self._apply_fixed()

    def _apply_fixed(self) -> bool:
        for (a, b), c in self.fixed.items():
            if not 1 <= c <= self.k:
                return False
            self.spare[a][c] -= 1
            self.spare[b][c] -= 1
            if self.spare[a][c] < 0 or self.spare[b][c] < 0:
                return False
        return True

    def _spare_total(self, x: int) -> int:
        return sum(self.spare[x][1:])

    def _capacity_ok(self, x: int) -> bool:
        return self.uncolored[x] <= self._spare_total(x)

    def _edge_has_option(self, a: int, b: int) -> bool:
        sa, sb = self.spare[a], self.spare[b]
        return any(sa[c] > 0 and sb[c] > 0 for c in range(1, self.k + 1))

    def _color_bound_ok(self) -> bool:
        if self.remaining == 0:
            return True
        active = [x for x in range(self.inst.n) if self.uncolored[x]]
        room = 0
        for c in range(1, self.k + 1):
            room += sum(min(self.spare[x][c], self.uncolored[x]) for x in active) // 2
            if room >= self.remaining:
                return True
        return False

    def _root_ok(self) -> bool:
        if not self.fixed_ok:
            return False
        if any(not self._capacity_ok(x) for x in range(self.inst.n)):
            return False
        if any(not self._edge_has_option(a, b) for a, b in self.order):
            return False
        return self._color_bound_ok()

    def _candidates(self, depth: int) -> List[int]:
        a, b = self.order[depth]
        top = min(self.k, self.max_used[depth] + 1) if self.symmetric else self.k
        options = [
            c for c in range(1, top + 1) if self.spare[a][c] > 0 and self.spare[b][c] > 0
        ]
        options.reverse()
        return options

    def _assign(self, depth: int, c: int) -> None:
        a, b = self.order[depth]
        self.assigned[depth] = c
        self.spare[a][c] -= 1
        self.spare[b][c] -= 1
        self.uncolored[a] -= 1
        self.uncolored[b] -= 1
        self.remaining -= 1
        self.max_used[depth + 1] = max(self.max_used[depth], c)

    def _unassign(self, depth: int) -> None:
        a, b = self.order[depth]
        c = self.assigned[depth]
        self.assigned[depth] = 0
        self.spare[a][c] += 1
        self.spare[b][c] += 1
        self.uncolored[a] += 1
        self.uncolored[b] += 1
        self.remaining += 1

    def _consistent(self, depth: int) -> bool:
        a, b = self.order[depth]
        for x in (a, b):
            if not self._capacity_ok(x):
                return False
            for i, y in self.later[x]:
                if i > depth and not self._edge_has_option(x, y):
                    return False
        return self._color_bound_ok()

    def _result(self, status: SearchStatus) -> SearchResult:
        coloring = None
        if status is SearchStatus.FOUND:
            assignment: Dict[Edge, int] = dict(self.fixed)
            assignment.update(zip(self.order, self.assigned))
            coloring = FColoring(self.k, assignment)
        return SearchResult(status, self.k, coloring, self.nodes)

    def run(self) -> SearchResult:
        if not self._root_ok():
            return self._result(SearchStatus.PROVED_NONE)
        total = len(self.order)
        if total == 0:
            return self._result(SearchStatus.FOUND)

        pending: List[List[int]] = [[] for _ in range(total)]
        pending[0] = self._candidates(0)
        depth = 0
        while True:
            if not pending[depth]:
                if depth == 0:
                    return self._result(SearchStatus.PROVED_NONE)
                depth -= 1
                self._unassign(depth)
                continue

            c = pending[depth].pop()
            self.nodes += 1
            if self.budget is not None and self.nodes > self.budget:
                self.nodes = self.budget
                return self._result(SearchStatus.EXHAUSTED)

            self._assign(depth, c)
            if not self._consistent(depth):
                self._unassign(depth)
                continue
            if depth + 1 == total:
                return self._result(SearchStatus.FOUND)
            depth += 1
            pending[depth] = self._candidates(depth)


def search_coloring(
    inst: FInstance,
    k: int,
    budget: Optional[int] = None,
    fixed: Optional[Mapping[Edge, int]] = None,
) -> SearchResult:
    """Search for an f-coloring of ``inst`` with colors ``1..k``.

    Args:
        inst: Instance to color.
        k: Palette size.
        budget: Maximum color assignments to try; None searches to completion.
        fixed: Precolored edges kept as they are (disables symmetry breaking).

    Returns:
        SearchResult. PROVED_NONE is only reported after the whole tree is explored.
    """
    precolored = {normalize_edge(u, v): c for (u, v), c in (fixed or {}).items()}
    if k < 1:
        status = SearchStatus.FOUND if inst.m == 0 else SearchStatus.PROVED_NONE
        coloring = FColoring(max(k, 0), {}) if inst.m == 0 else None
        return SearchResult(status, k, coloring, 0)
    result = _Search(inst, k, budget, precolored).run()
    logger.debug(
        "search k=%d on %d edges: %s after %d nodes",
        k,
        inst.m,
        result.status.value,
        result.nodes_expanded,
    )
    return result


def search_delta_f_coloring(inst: FInstance, budget: Optional[int] = None) -> SearchResult:
    """Search for a delta_f-coloring.

    Raises:
        EmptyGraphError: If the instance has no edges.
    """
    if inst.delta_f == 0:
        raise EmptyGraphError("delta_f-coloring search needs at least one edge")
    return search_coloring(inst, inst.delta_f, budget)
