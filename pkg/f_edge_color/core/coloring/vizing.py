"""Proper edge coloring with at most max_degree + 1 colors (fan rotation).

Edges are colored in edge-index order. An edge whose endpoints share a free color
takes the lowest such color; otherwise a maximal fan is built at the lower endpoint,
a two-colored path is inverted and a prefix of the fan is rotated.
"""

import logging
from typing import List

from ..errors import InternalInconsistencyError
from ..graph import Graph
from .base import FColoring
from .state import ProperColoringState

logger = logging.getLogger(__name__)


def _maximal_fan(state: ProperColoringState, g: Graph, u: int, v: int) -> List[int]:
    fan = [v]
    in_fan = {v}
    while True:
        last = fan[-1]
        nxt = None
        for w in g.neighbors(u):
            if w in in_fan:
                continue
            c = state.get(u, w)
            if c is not None and state.is_free(last, c):
                nxt = w
                break
        if nxt is None:
            return fan
        fan.append(nxt)
        in_fan.add(nxt)


def _rotate(state: ProperColoringState, u: int, fan: List[int]) -> None:
    shifted = [state.get(u, w) for w in fan[1:]]
    for w in fan[1:]:
        state.clear(u, w)
    for w, c in zip(fan[:-1], shifted):
        state.assign(u, w, c)  # type: ignore[arg-type]


def _color_edge(state: ProperColoringState, g: Graph, u: int, v: int) -> None:
    common = state.lowest_common_free(u, v)
    if common is not None:
        state.assign(u, v, common)
        return

    fan = _maximal_fan(state, g, u, v)
    c = state.lowest_free(u)
    d = state.lowest_free(fan[-1])
    if c != d:
        path = state.alternating_path(u, d, c)
        state.swap_path(path, c, d)

    for j, w in enumerate(fan):
        if j > 0:
            prev_color = state.get(u, w)
            if prev_color is None or not state.is_free(fan[j - 1], prev_color):
                break
        if state.is_free(w, d):
            _rotate(state, u, fan[: j + 1])
            state.assign(u, w, d)
            return
    raise InternalInconsistencyError(f"fan rotation failed on edge ({u}, {v})")


def vizing_color(g: Graph) -> FColoring:
    """Proper edge coloring of ``g`` with at most ``max_degree + 1`` colors.

    Returns:
        FColoring whose ``k`` is the highest color used.
    """
    state = ProperColoringState(g.n, g.max_degree + 1)
    for u, v in g.edges:
        _color_edge(state, g, u, v)
    coloring = state.to_coloring()
    logger.debug("vizing: %d edges, max degree %d, %d colors", g.m, g.max_degree, coloring.k)
    return coloring
