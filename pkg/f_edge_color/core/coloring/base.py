"""Edge colorings and their verification."""

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Mapping, NamedTuple, Sequence, Tuple

from ..errors import CoverageMismatchError
from ..graph import Edge, FInstance, normalize_edge


@dataclass(frozen=True)
class FColoring:
    """Colors ``1..k`` assigned to edges.

    Attributes:
        k: Palette size.
        assignment: Normalized edge -> color.
    """

    k: int
    assignment: Mapping[Edge, int] = field(repr=False)

    def __post_init__(self) -> None:
        normalized = {normalize_edge(u, v): int(c) for (u, v), c in self.assignment.items()}
        object.__setattr__(self, "assignment", normalized)

    @cached_property
    def counts(self) -> Dict[Tuple[int, int], int]:
        """(vertex, color) -> number of incident edges with that color."""
        return dict(self.recount())

    def recount(self) -> Counter:
        """Per (vertex, color) counts recomputed from the assignment."""
        tally: Counter = Counter()
        for (u, v), c in self.assignment.items():
            tally[(u, c)] += 1
            tally[(v, c)] += 1
        return tally

    def color_of(self, u: int, v: int) -> int:
        return self.assignment[normalize_edge(u, v)]

    def count(self, v: int, color: int) -> int:
        return self.counts.get((v, color), 0)

    @property
    def colors_used(self) -> int:
        """Number of distinct colors that actually appear."""
        return len(set(self.assignment.values()))

    def color_class(self, color: int) -> List[Edge]:
        """Edges with the given color, sorted."""
        return sorted(e for e, c in self.assignment.items() if c == color)

    def rows(self) -> List[Tuple[int, int, int]]:
        """(u, v, color) triples in edge order, 0-based vertices."""
        return [(u, v, c) for (u, v), c in sorted(self.assignment.items())]

    def to_dict(self) -> Dict[str, object]:
        """``{"k": k, "edges": [[u, v, c], ...]}`` with 1-based vertices in edge order."""
        return {"k": self.k, "edges": [[u + 1, v + 1, c] for u, v, c in self.rows()]}

    def relabel(self, permutation: Sequence[int]) -> "FColoring":
        """Coloring of the relabelled graph where ``v`` became ``permutation[v]``."""
        return FColoring(
            self.k,
            {(permutation[u], permutation[v]): c for (u, v), c in self.assignment.items()},
        )

    def restricted(self, edges: Sequence[Edge]) -> "FColoring":
        """Coloring restricted to ``edges`` with the same palette."""
        keep = {normalize_edge(u, v) for u, v in edges}
        return FColoring(self.k, {e: c for e, c in self.assignment.items() if e in keep})


class Violation(NamedTuple):
    """A vertex seeing one color more often than f allows."""

    vertex: int
    color: int
    count: int
    f: int


@dataclass(frozen=True)
class ColoringReport:
    """Result of :func:`verify_coloring`.

    Attributes:
        valid: True iff there are no violations and every color lies in ``1..k``.
        violations: Every over-capacity (vertex, color) pair, sorted.
        out_of_range: Edges whose color is outside ``1..k``.
    """

    valid: bool
    violations: Tuple[Violation, ...]
    out_of_range: Tuple[Tuple[Edge, int], ...] = ()

    def __bool__(self) -> bool:
        return self.valid

    def summary(self) -> str:
        if self.valid:
            return "valid"
        parts = [
            f"vertex {v.vertex + 1} sees color {v.color} {v.count} times (f = {v.f})"
            for v in self.violations
        ]
        parts += [
            f"edge {u + 1}-{w + 1} has color {c} outside the palette"
            for (u, w), c in self.out_of_range
        ]
        return "; ".join(parts)


def verify_coloring(inst: FInstance, col: FColoring) -> ColoringReport:
    """Check that ``col`` is an f-coloring of ``inst`` with colors ``1..col.k``.

    Raises:
        CoverageMismatchError: If the colored edges differ from the instance edges.
    """
    expected = set(inst.edges)
    got = set(col.assignment)
    if expected != got:
        missing = sorted(expected - got)
        extra = sorted(got - expected)
        raise CoverageMismatchError(
            f"coloring covers the wrong edge set (missing {missing[:5]}, extra {extra[:5]})"
        )

    violations = tuple(
        sorted(
            Violation(v, c, count, inst.f[v])
            for (v, c), count in col.recount().items()
            if count > inst.f[v]
        )
    )
    out_of_range = tuple(
        sorted((e, c) for e, c in col.assignment.items() if not 1 <= c <= col.k)
    )
    return ColoringReport(not violations and not out_of_range, violations, out_of_range)
