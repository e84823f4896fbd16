"""Bipartite edge coloring with exactly max_degree colors (alternating paths)."""

import logging

from ..errors import InternalInconsistencyError, NotBipartiteError
from ..graph import Bipartition, Graph
from .base import FColoring
from .state import ProperColoringState

logger = logging.getLogger(__name__)


def _check_partition(g: Graph, bipartition: Bipartition) -> None:
    side_a, side_b = bipartition
    if side_a & side_b or len(side_a) + len(side_b) != g.n:
        raise NotBipartiteError("partition sides overlap or do not cover every vertex")
    for u, v in g.edges:
        if (u in side_a) == (v in side_a):
            raise NotBipartiteError(f"edge ({u}, {v}) lies inside one side of the partition")


def konig_color(g: Graph, bipartition: Bipartition) -> FColoring:
    """Proper edge coloring of a bipartite graph with ``max_degree`` colors.

    For each edge ``uv`` in index order, ``a`` is the lowest color free at ``u`` and
    ``b`` the lowest free at ``v``. When ``a`` is taken at ``v``, the a/b path leaving
    ``v`` is swapped; bipartiteness keeps that path away from ``u``.

    Raises:
        NotBipartiteError: If ``bipartition`` is not a valid bipartition of ``g``.
    """
    _check_partition(g, bipartition)
    delta = g.max_degree
    state = ProperColoringState(g.n, delta)
    for u, v in g.edges:
        a = state.lowest_free(u)
        if not state.is_free(v, a):
            b = state.lowest_free(v)
            path = state.alternating_path(v, a, b)
            if any(y == u for _, y, _ in path):
                raise InternalInconsistencyError(f"alternating path from {v} reached {u}")
            state.swap_path(path, a, b)
        state.assign(u, v, a)
    logger.debug("konig: %d edges, %d colors", g.m, delta)
    return state.to_coloring(delta)
