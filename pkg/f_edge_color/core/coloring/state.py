"""Mutable proper-edge-coloring state shared by the Vizing and König colorers."""

from typing import Dict, List, Optional, Tuple

from ..graph import Edge, normalize_edge
from .base import FColoring

# (from, to, color) steps of an alternating path.
PathStep = Tuple[int, int, int]


class ProperColoringState:
    """Proper partial edge coloring with O(1) lookup of the edge of a color at a vertex.

    ``at[x][c]`` is the neighbor reached from ``x`` by the edge colored ``c``.
    """

    def __init__(self, n: int, palette: int):
        self.palette = palette
        self.at: List[Dict[int, int]] = [{} for _ in range(n)]
        self.color: Dict[Edge, int] = {}

    def is_free(self, x: int, c: int) -> bool:
        return c not in self.at[x]

    def lowest_free(self, x: int) -> int:
        for c in range(1, self.palette + 1):
            if c not in self.at[x]:
                return c
        raise ValueError(f"vertex {x} has no free color among 1..{self.palette}")

    def lowest_common_free(self, u: int, v: int) -> Optional[int]:
        for c in range(1, self.palette + 1):
            if c not in self.at[u] and c not in self.at[v]:
                return c
        return None

    def get(self, u: int, v: int) -> Optional[int]:
        return self.color.get(normalize_edge(u, v))

    def assign(self, u: int, v: int, c: int) -> None:
        self.color[normalize_edge(u, v)] = c
        self.at[u][c] = v
        self.at[v][c] = u

    def clear(self, u: int, v: int) -> int:
        c = self.color.pop(normalize_edge(u, v))
        del self.at[u][c]
        del self.at[v][c]
        return c

    def alternating_path(self, start: int, first: int, second: int) -> List[PathStep]:
        """Maximal path from ``start`` whose colors alternate first, second, first, ...

        ``start`` must miss ``second`` so the path cannot close on itself.
        """
        steps: List[PathStep] = []
        x, c = start, first
        while c in self.at[x]:
            y = self.at[x][c]
            steps.append((x, y, c))
            x, c = y, (second if c == first else first)
        return steps

    def swap_path(self, steps: List[PathStep], a: int, b: int) -> None:
        """Exchange colors ``a`` and ``b`` along a path."""
        for x, y, _ in steps:
            self.clear(x, y)
        for x, y, c in steps:
            self.assign(x, y, b if c == a else a)

    def to_coloring(self, k: Optional[int] = None) -> FColoring:
        used = max(self.color.values(), default=0)
        return FColoring(used if k is None else k, dict(self.color))
