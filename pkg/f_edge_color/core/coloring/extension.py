"""Extend a k-coloring of G - e to all of G.

The extension is guaranteed when every neighbor of an endpoint of ``e`` (the
endpoints included) has a color it sees at most f - 1 times. Strategies, in order:

1. a color spare at both endpoints;
2. a two-color alternating trail flip started at one endpoint, lower endpoint first;
3. exhaustive recoloring of the edges touching the closed neighborhood of ``e``.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Sequence, Set, Tuple

from ..errors import (
    CoverageMismatchError,
    InternalExtensionFailure,
    PreconditionError,
)
from ..graph import Edge, FInstance, normalize_edge
from .base import FColoring, verify_coloring
from .search import SearchStatus, search_coloring

logger = logging.getLogger(__name__)


class ExtensionTier(str, Enum):
    """Which strategy completed the extension."""

    COMMON_SPARE = "common_spare"
    TRAIL_FLIP = "trail_flip"
    NEIGHBORHOOD = "neighborhood"


@dataclass(frozen=True)
class ExtensionOutcome:
    coloring: FColoring
    tier: ExtensionTier


def _spare_colors(inst: FInstance, counts: Counter, x: int, k: int) -> Tuple[int, ...]:
    return tuple(c for c in range(1, k + 1) if counts[(x, c)] < inst.f[x])


def _check_partial(inst: FInstance, partial: FColoring, e: Edge, k: int) -> Counter:
    if e not in inst.graph.edge_index:
        raise PreconditionError(f"edge {e} is not an edge of the instance")
    expected = set(inst.edges) - {e}
    if set(partial.assignment) != expected:
        raise CoverageMismatchError("partial coloring must cover exactly E - {e}")
    if any(not 1 <= c <= k for c in partial.assignment.values()):
        raise PreconditionError(f"partial coloring uses colors outside 1..{k}")
    counts = partial.recount()
    for (x, c), count in sorted(counts.items()):
        if count > inst.f[x]:
            raise PreconditionError(
                f"partial coloring is not an f-coloring: vertex {x} sees color {c} {count} times"
            )
    u, v = e
    for x in sorted({u, v} | inst.graph.adjacency[u] | inst.graph.adjacency[v]):
        if not _spare_colors(inst, counts, x, k):
            raise PreconditionError(
                f"vertex {x} has no color seen at most f({x}) - 1 = {inst.f[x] - 1} times"
            )
    return counts


def _trail_flip(
    inst: FInstance,
    colors: Dict[Edge, int],
    counts: Counter,
    start: int,
    take: int,
    give: int,
    e: Edge,
) -> None:
    """Recolor an alternating trail from ``start``: ``take`` -> ``give``, then back.

    Stops as soon as the color received at the current vertex stays within f.
    Mutates ``colors`` and ``counts``.
    """
    used: Set[Edge] = set()
    current = start
    for _ in range(inst.m):
        step = next(
            (
                edge
                for edge in inst.graph.incidence[current]
                if edge != e and edge not in used and colors[edge] == take
            ),
            None,
        )
        if step is None:
            return
        used.add(step)
        colors[step] = give
        a, b = step
        counts[(a, take)] -= 1
        counts[(b, take)] -= 1
        counts[(a, give)] += 1
        counts[(b, give)] += 1
        current = b if a == current else a
        if counts[(current, give)] <= inst.f[current]:
            return
        take, give = give, take


def _try_trail_flips(
    inst: FInstance, partial: FColoring, counts: Counter, e: Edge, k: int
) -> Optional[FColoring]:
    u, v = e
    for start, other in ((u, v), (v, u)):
        wanted = _spare_colors(inst, counts, other, k)[0]
        own = _spare_colors(inst, counts, start, k)[0]
        colors = dict(partial.assignment)
        trial_counts = Counter(counts)
        _trail_flip(inst, colors, trial_counts, start, wanted, own, e)
        if any(count > inst.f[x] for (x, _), count in trial_counts.items()):
            continue
        common = [
            c
            for c in range(1, k + 1)
            if trial_counts[(u, c)] < inst.f[u] and trial_counts[(v, c)] < inst.f[v]
        ]
        if common:
            colors[e] = common[0]
            return FColoring(k, colors)
    return None


def _neighborhood_edges(inst: FInstance, e: Edge) -> Set[Edge]:
    u, v = e
    ball = {u, v} | inst.graph.adjacency[u] | inst.graph.adjacency[v]
    return {edge for edge in inst.edges if edge[0] in ball or edge[1] in ball}


def extend_one_edge_traced(
    inst: FInstance,
    partial: FColoring,
    e: Sequence[int],
    k: int,
) -> ExtensionOutcome:
    """Like :func:`extend_one_edge` but also reports which strategy succeeded."""
    edge = normalize_edge(e[0], e[1])
    counts = _check_partial(inst, partial, edge, k)
    u, v = edge

    outcome = None
    common = [
        c
        for c in range(1, k + 1)
        if counts[(u, c)] < inst.f[u] and counts[(v, c)] < inst.f[v]
    ]
    if common:
        colors = dict(partial.assignment)
        colors[edge] = common[0]
        outcome = ExtensionOutcome(FColoring(k, colors), ExtensionTier.COMMON_SPARE)

    if outcome is None:
        flipped = _try_trail_flips(inst, partial, counts, edge, k)
        if flipped is not None:
            outcome = ExtensionOutcome(flipped, ExtensionTier.TRAIL_FLIP)

    if outcome is None:
        region = _neighborhood_edges(inst, edge)
        fixed = {x: c for x, c in partial.assignment.items() if x not in region}
        result = search_coloring(inst, k, fixed=fixed)
        if result.status is not SearchStatus.FOUND or result.coloring is None:
            raise InternalExtensionFailure(
                f"recoloring within distance 2 of edge {edge} ended {result.status.value} "
                "although every neighbor has a spare"
            )
        outcome = ExtensionOutcome(result.coloring, ExtensionTier.NEIGHBORHOOD)

    if not verify_coloring(inst, outcome.coloring).valid:
        raise InternalExtensionFailure(f"extension at edge {edge} produced an invalid coloring")
    logger.debug("extended edge %s via %s", edge, outcome.tier.value)
    return outcome


def extend_one_edge(inst: FInstance, partial: FColoring, e: Sequence[int], k: int) -> FColoring:
    """Extend a valid k-coloring of ``inst - e`` to a valid k-coloring of ``inst``.

    Args:
        inst: Instance containing ``e``.
        partial: Valid f-coloring with colors ``1..k`` of every edge except ``e``.
        e: The uncolored edge.
        k: Palette size.

    Raises:
        CoverageMismatchError: If ``partial`` does not cover exactly E - {e}.
        PreconditionError: If ``partial`` is invalid or some neighbor of an endpoint
            has no spare color.
        InternalExtensionFailure: If even the neighborhood recoloring fails.
    """
    return extend_one_edge_traced(inst, partial, e, k).coloring
