"""Canonical labeling of small graphs.

Vertices are first split into cells by color refinement (degree, then the multiset
of neighbor cells, until stable); cells are ordered by their refined signature, so
the order is isomorphism-invariant. The canonical form is the smallest upper-triangle
adjacency string over every labeling that keeps the cell order, i.e. the product of
permutations inside each cell. Practical up to about eight vertices.
"""

from dataclasses import dataclass
from itertools import permutations, product
from typing import Dict, List, Optional, Sequence, Tuple

from .graph import Graph


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical key plus the labeling that realizes it.

    Attributes:
        key: ``n`` and the upper-triangle adjacency string of the canonical labeling.
        order: ``order[i]`` is the original vertex placed at canonical position ``i``.
    """

    key: str
    order: Tuple[int, ...]

    @property
    def permutation(self) -> Tuple[int, ...]:
        """Original vertex -> canonical position."""
        position = [0] * len(self.order)
        for i, v in enumerate(self.order):
            position[v] = i
        return tuple(position)


def refine_cells(g: Graph, initial: Optional[Sequence[int]] = None) -> List[List[int]]:
    """Stable color refinement; returns cells in invariant order, members sorted."""
    colors = list(initial) if initial is not None else list(g.degrees)
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[w] for w in g.adjacency[v]))) for v in range(g.n)
        ]
        ranking: Dict[tuple, int] = {s: i for i, s in enumerate(sorted(set(signatures)))}
        refined = [ranking[s] for s in signatures]
        if len(set(refined)) == len(set(colors)):
            colors = refined
            break
        colors = refined
    cells: Dict[int, List[int]] = {}
    for v in range(g.n):
        cells.setdefault(colors[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _adjacency_string(g: Graph, order: Sequence[int]) -> str:
    n = len(order)
    return "".join(
        "1" if g.has_edge(order[i], order[j]) else "0"
        for i in range(n)
        for j in range(i + 1, n)
    )


def canonical_form(g: Graph, initial: Optional[Sequence[int]] = None) -> CanonicalForm:
    """Canonical key and labeling of ``g``.

    Args:
        g: Graph to canonicalize.
        initial: Optional invariant vertex colors (e.g. f values) refined alongside
            the degrees; two graphs get the same key iff an isomorphism maps one
            onto the other respecting these colors.
    """
    seeds = None
    if initial is not None:
        pairs = [(initial[v], g.degree(v)) for v in range(g.n)]
        ranking = {p: i for i, p in enumerate(sorted(set(pairs)))}
        seeds = [ranking[p] for p in pairs]
    cells = refine_cells(g, seeds)

    best: Optional[Tuple[str, Tuple[int, ...]]] = None
    for choice in product(*(permutations(cell) for cell in cells)):
        order = tuple(v for part in choice for v in part)
        text = _adjacency_string(g, order)
        if best is None or text < best[0]:
            best = (text, order)
    assert best is not None
    prefix = f"{g.n}:"
    if initial is not None:
        prefix += ",".join(str(initial[v]) for v in best[1]) + ":"
    return CanonicalForm(prefix + best[0], best[1])
