"""Named instance families and vertex-function patterns.

Every family is deterministic. ``random n p seed`` draws from a 64-bit linear
congruential generator::

    state = (state * 6364136223846793005 + 1442695040888963407) mod 2**64
    draw  = (state >> 11) / 2**53

with the seed as the initial state, one draw per vertex pair ``u < v`` in
lexicographic order, keeping the edge when the draw is below ``p``.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx

from .errors import BadParamsError, UnknownFamilyError
from .graph import FInstance, Graph
from .structure import find_hub

logger = logging.getLogger(__name__)

Param = Union[str, int, float]

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
_MASK64 = (1 << 64) - 1


class RandomLCG:
    """Portable 64-bit linear congruential generator."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state * LCG_MULTIPLIER + LCG_INCREMENT) & _MASK64
        return self.state

    def uniform(self) -> float:
        """Next draw in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) / float(1 << 53)


@dataclass(frozen=True)
class FPattern:
    """Vertex-function pattern: ``const:k``, ``hub:k`` or ``list:a,b,...``.

    ``hub:k`` puts ``k`` on the lowest-index vertex of maximum degree and 1 elsewhere.
    """

    kind: str
    values: Tuple[int, ...]

    @classmethod
    def parse(cls, spec: str) -> "FPattern":
        """Parse an f spec.

        Raises:
            BadParamsError: If the pattern is malformed or a value is not positive.
        """
        kind, sep, body = spec.strip().partition(":")
        kind = kind.lower()
        if not sep or kind not in ("const", "hub", "list"):
            raise BadParamsError(f"f spec must be const:k, hub:k or list:a,b,..., got {spec!r}")
        try:
            values = tuple(int(x) for x in body.split(",") if x.strip())
        except ValueError as e:
            raise BadParamsError(f"f spec {spec!r} has a non-integer value") from e
        if not values or (kind != "list" and len(values) != 1):
            raise BadParamsError(f"f spec {spec!r} has the wrong number of values")
        if any(x < 1 for x in values):
            raise BadParamsError(f"f spec {spec!r} has a value below 1")
        return cls(kind, values)

    def apply(self, g: Graph) -> Tuple[int, ...]:
        """f vector for ``g``.

        Raises:
            BadParamsError: If a list pattern has the wrong length.
        """
        if self.kind == "const":
            return (self.values[0],) * g.n
        if self.kind == "list":
            if len(self.values) != g.n:
                raise BadParamsError(
                    f"f list has {len(self.values)} values for {g.n} vertices"
                )
            return self.values
        f = [1] * g.n
        hub = find_hub(g)
        if hub is not None:
            f[hub] = self.values[0]
        return tuple(f)

    def __str__(self) -> str:
        return f"{self.kind}:{','.join(str(x) for x in self.values)}"


def _as_int(value: Param, name: str, minimum: int) -> int:
    try:
        number = int(value)
    except (TypeError, ValueError) as e:
        raise BadParamsError(f"{name} must be an integer, got {value!r}") from e
    if isinstance(value, float) and value != number:
        raise BadParamsError(f"{name} must be an integer, got {value!r}")
    if number < minimum:
        raise BadParamsError(f"{name} must be >= {minimum}, got {number}")
    return number


def _as_probability(value: Param, name: str) -> float:
    try:
        number = float(value)
    except (TypeError, ValueError) as e:
        raise BadParamsError(f"{name} must be a number, got {value!r}") from e
    if not 0.0 <= number <= 1.0:
        raise BadParamsError(f"{name} must lie in [0, 1], got {number}")
    return number


def _cycle(n: Param) -> Graph:
    return Graph.from_networkx(nx.cycle_graph(_as_int(n, "n", 3)))


def _path(n: Param) -> Graph:
    return Graph.from_networkx(nx.path_graph(_as_int(n, "n", 1)))


def _complete(n: Param) -> Graph:
    return Graph.from_networkx(nx.complete_graph(_as_int(n, "n", 1)))


def _complete_bipartite(a: Param, b: Param) -> Graph:
    left, right = _as_int(a, "a", 1), _as_int(b, "b", 1)
    return Graph.from_networkx(nx.complete_bipartite_graph(left, right))


def _wheel(n: Param) -> Graph:
    # hub 0, rim 1..n in cycle order
    return Graph.from_networkx(nx.wheel_graph(_as_int(n, "n", 3) + 1))


def _petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


def _star(n: Param) -> Graph:
    return Graph.from_networkx(nx.star_graph(_as_int(n, "n", 1)))


def _random(n: Param, p: Param, seed: Param) -> Graph:
    size = _as_int(n, "n", 1)
    prob = _as_probability(p, "p")
    rng = RandomLCG(_as_int(seed, "seed", 0))
    edges = [(u, v) for u, v in combinations(range(size), 2) if rng.uniform() < prob]
    return Graph.from_edges(size, edges)


def _clique_pair(n: Param, r: Param) -> Graph:
    size = _as_int(n, "n", 2)
    links = _as_int(r, "r", 1)
    if links > size:
        raise BadParamsError(f"r must be <= n, got r={links}, n={size}")
    pair = nx.disjoint_union(nx.complete_graph(size), nx.complete_graph(size))
    pair.add_edges_from((i, size + i) for i in range(links))
    return Graph.from_networkx(pair)


def graph_w() -> FInstance:
    """The 5-wheel with f = 2 at the hub (vertex 0) and f = 1 on the rim."""
    return FInstance(_wheel(5), (2, 1, 1, 1, 1, 1))


FAMILIES: Dict[str, Tuple[Tuple[str, ...], Callable[..., Graph]]] = {
    "cycle": (("n",), _cycle),
    "path": (("n",), _path),
    "complete": (("n",), _complete),
    "complete_bipartite": (("a", "b"), _complete_bipartite),
    "wheel": (("n",), _wheel),
    "petersen": ((), _petersen),
    "star": (("n",), _star),
    "random": (("n", "p", "seed"), _random),
    "clique_pair": (("n", "r"), _clique_pair),
}


def family_names() -> List[str]:
    return sorted(list(FAMILIES) + ["graph_w"])


def gen_family(name: str, params: Sequence[Param] = (), f_spec: Optional[str] = None) -> FInstance:
    """Build a named family member.

    Args:
        name: Family name (see :func:`family_names`).
        params: Positional family parameters.
        f_spec: ``const:k``, ``hub:k`` or ``list:...``; defaults to ``const:1``.
            ``graph_w`` carries its own f and rejects an explicit spec.

    Raises:
        UnknownFamilyError: For an unknown family name.
        BadParamsError: For wrong parameter counts or values, or a bad f spec.
    """
    key = name.lower()
    if key == "graph_w":
        if params:
            raise BadParamsError("graph_w takes no parameters")
        if f_spec is not None:
            raise BadParamsError("graph_w fixes its own f; drop the f spec")
        return graph_w()
    if key not in FAMILIES:
        raise UnknownFamilyError(
            f"unknown family {name!r}; expected one of {', '.join(family_names())}"
        )
    arg_names, builder = FAMILIES[key]
    if len(params) != len(arg_names):
        usage = " ".join(arg_names) or "no parameters"
        raise BadParamsError(f"{key} expects {usage}, got {len(params)} parameter(s)")
    graph = builder(*params)
    pattern = FPattern.parse(f_spec or "const:1")
    logger.debug("generated %s %s: n=%d m=%d f=%s", key, list(params), graph.n, graph.m, pattern)
    return FInstance(graph, pattern.apply(graph))
