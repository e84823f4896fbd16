"""delta_f-coloring when every f(v) is even, through an Euler orientation.

Odd-degree vertices are joined to an auxiliary vertex, every component is walked
as an Euler circuit and the edges are oriented along the walk; after dropping the
auxiliary edges each vertex has out- and in-degree at most ceil(d(v) / 2). The
oriented edges form a bipartite graph between out-copies and in-copies with
f' = f / 2 on both copies, whose own delta is at most delta_f. Coloring it and
merging the two copies of ``v`` gives each color at most f(v) times at ``v``.
"""

import logging
from typing import Dict, List, Tuple

from ..errors import EmptyGraphError, PreconditionError
from ..graph import Edge, FInstance, Graph, build_instance
from .base import FColoring
from .upper import upper_color_f

logger = logging.getLogger(__name__)


def euler_orientation(g: Graph) -> List[Tuple[int, int]]:
    """Orient every edge so that |out(v) - in(v)| <= 1 at each vertex.

    Returns:
        Arcs ``(tail, head)``, one per edge of ``g``.
    """
    n = g.n
    extra = n
    odd = [v for v in range(n) if g.degree(v) % 2 == 1]
    edges: List[Edge] = list(g.edges) + [(v, extra) for v in odd]
    incident: List[List[int]] = [[] for _ in range(n + 1)]
    for i, (a, b) in enumerate(edges):
        incident[a].append(i)
        incident[b].append(i)

    used = [False] * len(edges)
    cursor = [0] * (n + 1)
    arcs: List[Tuple[int, int]] = []
    for root in range(n + 1):
        stack = [root]
        while stack:
            x = stack[-1]
            while cursor[x] < len(incident[x]) and used[incident[x][cursor[x]]]:
                cursor[x] += 1
            if cursor[x] == len(incident[x]):
                stack.pop()
                continue
            i = incident[x][cursor[x]]
            used[i] = True
            a, b = edges[i]
            y = b if a == x else a
            arcs.append((x, y))
            stack.append(y)
    return [(a, b) for a, b in arcs if a != extra and b != extra]


def even_f_color(inst: FInstance) -> FColoring:
    """delta_f-coloring of an instance whose f values are all even.

    Raises:
        PreconditionError: If some f(v) is odd.
        EmptyGraphError: If the instance has no edges.
    """
    odd = [v for v in range(inst.n) if inst.f[v] % 2]
    if odd:
        raise PreconditionError(f"f({odd[0]}) = {inst.f[odd[0]]} is odd")
    if inst.delta_f == 0:
        raise EmptyGraphError("cannot color an edgeless instance")

    n = inst.n
    arcs = euler_orientation(inst.graph)
    halves = [x // 2 for x in inst.f]
    doubled = build_instance(2 * n, [(a, n + b) for a, b in arcs], halves + halves)
    coloring = upper_color_f(doubled)

    assignment: Dict[Edge, int] = {}
    for a, b in arcs:
        assignment[(a, b) if a < b else (b, a)] = coloring.color_of(a, n + b)
    logger.debug(
        "even-f coloring: %d arcs, doubled delta_f=%d", len(arcs), doubled.delta_f
    )
    return FColoring(inst.delta_f, assignment)
