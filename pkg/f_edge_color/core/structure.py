"""f-core extraction and recognition of the exceptional wheel instance."""

import logging
from dataclasses import dataclass
from itertools import permutations
from typing import FrozenSet, List, Optional, Tuple

from .errors import EmptyGraphError
from .graph import FInstance, Graph, connected_components

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoreInfo:
    """The f-core of an instance plus the structural flags the classifier reads.

    Attributes:
        members: f-maximum vertices, i.e. d(v) = f(v) * delta_f.
        core_graph: Induced subgraph on ``members`` with local labels.
        core_vertices: Local core index -> original vertex.
        max_core_degree: Maximum degree inside the core (0 for an empty core).
        is_forest: The core has no cycle.
        all_components_unicyclic_or_tree: Every core component has at most one cycle.
        is_two_regular: The core is nonempty and every member has core-degree 2.
    """

    members: FrozenSet[int]
    core_graph: Graph
    core_vertices: Tuple[int, ...]
    max_core_degree: int
    is_forest: bool
    all_components_unicyclic_or_tree: bool
    is_two_regular: bool

    @property
    def is_empty(self) -> bool:
        return not self.members

    def component_shapes(self) -> List[str]:
        """Label each core component as ``tree``, ``unicyclic`` or ``cyclic``."""
        shapes = []
        for component in connected_components(self.core_graph):
            excess = _component_edge_count(self.core_graph, component) - len(component)
            shapes.append("tree" if excess < 0 else "unicyclic" if excess == 0 else "cyclic")
        return shapes


def _component_edge_count(g: Graph, component: Tuple[int, ...]) -> int:
    return sum(g.degree(v) for v in component) // 2


def f_maximum_vertices(inst: FInstance) -> FrozenSet[int]:
    """Vertices with d(v) = f(v) * delta_f (empty for an edgeless instance)."""
    return frozenset(v for v in range(inst.n) if inst.is_f_maximum(v))


def f_core(inst: FInstance) -> CoreInfo:
    """Compute the f-core and its structural flags.

    Raises:
        EmptyGraphError: If the instance has no edges.
    """
    if inst.delta_f == 0:
        raise EmptyGraphError("the f-core is undefined for an edgeless instance")

    members = f_maximum_vertices(inst)
    core_graph, core_vertices = inst.graph.induced(members)
    components = connected_components(core_graph)
    excess = [_component_edge_count(core_graph, c) - len(c) for c in components]

    info = CoreInfo(
        members=members,
        core_graph=core_graph,
        core_vertices=core_vertices,
        max_core_degree=core_graph.max_degree,
        is_forest=all(x < 0 for x in excess),
        all_components_unicyclic_or_tree=all(x <= 0 for x in excess),
        is_two_regular=bool(members) and all(d == 2 for d in core_graph.degrees),
    )
    logger.debug(
        "f-core: %d members, max degree %d, forest=%s",
        len(members),
        info.max_core_degree,
        info.is_forest,
    )
    return info


# The wheel on a 5-cycle, hub last: rim 0..4, hub 5.
_W_RIM_CYCLE = ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4))


def is_graph_W(inst: FInstance) -> bool:
    """Whether the instance is the 5-wheel with f = 2 at the hub and f = 1 on the rim.

    A degree-sequence filter runs first; the rim is then matched against a 5-cycle
    directly.
    """
    g = inst.graph
    if g.n != 6 or g.m != 10:
        return False
    hubs = [v for v in range(6) if g.degree(v) == 5]
    if len(hubs) != 1:
        return False
    hub = hubs[0]
    rim = [v for v in range(6) if v != hub]
    if any(g.degree(v) != 3 for v in rim):
        return False
    if inst.f[hub] != 2 or any(inst.f[v] != 1 for v in rim):
        return False
    return _rim_matches_cycle(g, rim)


def _rim_matches_cycle(g: Graph, rim: List[int]) -> bool:
    first = rim[0]
    for rest in permutations(rim[1:]):
        order = (first,) + rest
        if all(g.has_edge(order[a], order[b]) for a, b in _W_RIM_CYCLE):
            return True
    return False


def find_hub(g: Graph) -> Optional[int]:
    """Lowest-index vertex of maximum degree, or None for the null graph."""
    if g.n == 0:
        return None
    top = g.max_degree
    return next(v for v in range(g.n) if g.degree(v) == top)
