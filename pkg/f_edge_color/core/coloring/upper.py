"""Constructive f-coloring with at most max over v of ceil((d(v) + 1) / f(v)) colors."""

import logging

from ..errors import EmptyGraphError
from ..graph import FInstance, is_bipartite
from .base import FColoring
from .extension import extend_one_edge
from .konig import konig_color
from .split import merge_split_coloring, split_instance
from .vizing import vizing_color

logger = logging.getLogger(__name__)


def middle_bound(inst: FInstance) -> int:
    """max over v of ceil((d(v) + 1) / f(v)); either delta_f or delta_f + 1."""
    return max(
        (-(-(inst.graph.degree(v) + 1) // inst.f[v]) for v in range(inst.n)),
        default=0,
    )


def _drop_top_class(inst: FInstance, coloring: FColoring) -> FColoring:
    """Recolor the edges of the highest color one at a time with one color fewer.

    Valid when no vertex is f-maximum: every vertex then keeps a spare color.
    """
    k = coloring.k - 1
    pending = coloring.color_class(coloring.k)
    colors = {e: c for e, c in coloring.assignment.items() if c != coloring.k}
    for i, edge in enumerate(pending):
        step = inst.without_edges(pending[i + 1 :])
        colors = dict(extend_one_edge(step, FColoring(k, colors), edge, k).assignment)
    return FColoring(k, colors)


def upper_color_f(inst: FInstance) -> FColoring:
    """f-coloring with at most ``middle_bound(inst)`` <= delta_f + 1 colors.

    The instance is split into f(v) copies per vertex; the split graph is colored by
    König when bipartite and by fan rotation otherwise, then merged back. When the
    result still needs delta_f + 1 colors but no vertex is f-maximum, the top color
    class is re-inserted edge by edge with one color fewer.

    Raises:
        EmptyGraphError: If the instance has no edges.
    """
    if inst.delta_f == 0:
        raise EmptyGraphError("cannot color an edgeless instance")

    split = split_instance(inst)
    bipartition = is_bipartite(split.split)
    if bipartition is not None:
        proper = konig_color(split.split, bipartition)
    else:
        proper = vizing_color(split.split)
    coloring = merge_split_coloring(split, inst, proper)

    bound = middle_bound(inst)
    if coloring.k > bound:
        logger.debug("reducing %d colors to %d by re-inserting the top class", coloring.k, bound)
        coloring = _drop_top_class(inst, coloring)

    logger.debug(
        "upper coloring: %d colors (delta_f=%d, bipartite split=%s)",
        coloring.k,
        inst.delta_f,
        bipartition is not None,
    )
    return coloring
