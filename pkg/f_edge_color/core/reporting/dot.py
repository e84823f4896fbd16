"""Graphviz DOT export with edge colors taken from a coloring."""

from typing import Optional

from jinja2 import Template, TemplateError

from ..coloring import FColoring
from ..graph import FInstance

# Fixed palette; color c uses entry (c - 1) mod 12.
PALETTE = (
    "#e6194b",
    "#3cb44b",
    "#4363d8",
    "#f58231",
    "#911eb4",
    "#42d4f4",
    "#f032e6",
    "#bfef45",
    "#9a6324",
    "#800000",
    "#469990",
    "#000075",
)


def palette_color(color: int) -> str:
    return PALETTE[(color - 1) % len(PALETTE)]


class DotExporter:
    """Renders an instance, optionally colored, as an undirected DOT graph."""

    DOT_TEMPLATE = """graph {{ name }} {
  node [shape=circle];
{%- for v in vertices %}
  {{ v.id }} [label="{{ v.id }}\\nf={{ v.f }}"];
{%- endfor %}
{%- for e in edges %}
  {{ e.u }} -- {{ e.v }}{% if e.color %} [color="{{ e.hex }}", label="{{ e.color }}"]{% endif %};
{%- endfor %}
}
"""

    def __init__(self, name: str = "G"):
        self.name = name

    def render(self, inst: FInstance, coloring: Optional[FColoring] = None) -> str:
        """DOT text with 1-based vertex ids.

        Raises:
            ValueError: If template rendering fails.
        """
        vertices = [{"id": v + 1, "f": inst.f[v]} for v in range(inst.n)]
        edges = []
        for u, v in inst.edges:
            color = coloring.assignment.get((u, v)) if coloring is not None else None
            edges.append(
                {
                    "u": u + 1,
                    "v": v + 1,
                    "color": color,
                    "hex": palette_color(color) if color else None,
                }
            )
        try:
            return Template(self.DOT_TEMPLATE).render(
                name=self.name, vertices=vertices, edges=edges
            )
        except TemplateError as e:
            raise ValueError(f"Failed to render DOT template: {e}") from e


def export_dot(inst: FInstance, coloring: Optional[FColoring] = None) -> str:
    """DOT text for ``inst``; colored edges get a palette color and a label."""
    return DotExporter().render(inst, coloring)
