"""Human-readable classification reports."""

from typing import Any, Dict, List, Optional

from jinja2 import Template, TemplateError

from ..classifier import AggregateVerdict, Rule, Verdict, VerdictClass

CITATIONS: Dict[Rule, str] = {
    Rule.BIPARTITE: "bipartite graphs are f-Class 1",
    Rule.EVEN_F: "graphs with every f(v) even are f-Class 1",
    Rule.EMPTY_CORE: "graphs with an empty f-core are f-Class 1",
    Rule.CORE_UNICYCLIC: (
        "graphs whose f-core components are unicyclic or trees, "
        "and whose f-core is not 2-regular, are f-Class 1"
    ),
    Rule.CORE_DEG2_NECESSARY: (
        "f-critical necessary conditions: an f-Class 2 graph with f-core degree <= 2 "
        "has a 2-regular f-core, non-core degrees f(v)*delta_f - 1, at least 2f(v) "
        "f-maximum neighbors at every vertex and at least three f-maximum vertices"
    ),
    Rule.SMALL_CUT: (
        "small matching or star cut: with f-core degree <= 2, an edge cut of size "
        "<= delta_f - 2 that is a matching or a star forces f-Class 1"
    ),
    Rule.CLAWFREE: (
        "claw-free: a connected claw-free graph with f-core degree <= 2 and some "
        "f(v) >= 2 is f-Class 1 unless it is the wheel W"
    ),
    Rule.EXACT: "exhaustive search at delta_f colors",
}

FOREST_CITATION = "graphs whose f-core is a forest are f-Class 1"

_STYLES = {
    VerdictClass.CLASS1: "\033[32m",
    VerdictClass.CLASS2: "\033[31m",
    VerdictClass.UNKNOWN: "\033[33m",
}
_RESET = "\033[0m"


def citation(verdict: Verdict) -> Optional[str]:
    """Descriptive name of the condition that decided, None for Unknown."""
    if verdict.rule is Rule.CORE_UNICYCLIC and verdict.core_is_forest:
        return FOREST_CITATION
    return CITATIONS.get(verdict.rule)


class ReportRenderer:
    """Renders verdicts as plain text, optionally with ANSI colors on the class line."""

    VERDICT_TEMPLATE = """{{ indent }}class: {{ klass }}
{{ indent }}rule: {{ rule_id }} {{ rule }}
{{ indent }}delta_f: {{ delta_f }}
{%- if cited %}
{{ indent }}reason: {{ cited }}
{%- endif %}
{%- if witness %}
{{ indent }}witness: {{ witness.k }} colors on {{ witness.edges }} edges
{%- endif %}
{%- if upper %}
{{ indent }}upper coloring: {{ upper.k }} colors
{%- endif %}
{%- if search %}
{{ indent }}search: {{ search.status }} after {{ search.nodes }} nodes
{%- endif %}
{%- if cut %}
{{ indent }}cut: {{ cut.kind }} of size {{ cut.size }} ({{ cut.edges }})
{%- endif %}
{%- for note in notes %}
{{ indent }}note: {{ note }}
{%- endfor %}
{%- if misses %}
{{ indent }}rules that did not fire:
{%- for code, name, reason in misses %}
{{ indent }}  {{ code }} {{ name }}: {{ reason }}
{%- endfor %}
{%- endif %}"""

    def __init__(self, styled: bool = False):
        self.styled = styled

    def _class_label(self, verdict_class: VerdictClass) -> str:
        if not self.styled:
            return verdict_class.value
        return f"{_STYLES[verdict_class]}{verdict_class.value}{_RESET}"

    def _context(self, verdict: Verdict, indent: str) -> Dict[str, Any]:
        cut = None
        if verdict.cut is not None:
            cut = {
                "kind": verdict.cut.kind.value,
                "size": verdict.cut.size,
                "edges": ", ".join(f"{u + 1}-{v + 1}" for u, v in verdict.cut.cut_edges),
            }
        search = None
        if verdict.proof is not None:
            search = {
                "status": verdict.proof.status.value,
                "nodes": verdict.proof.nodes_expanded,
            }
        return {
            "indent": indent,
            "klass": self._class_label(verdict.verdict_class),
            "rule": verdict.rule.value,
            "rule_id": verdict.rule.code,
            "delta_f": verdict.delta_f,
            "cited": citation(verdict),
            "witness": (
                None
                if verdict.witness is None
                else {"k": verdict.witness.k, "edges": len(verdict.witness.assignment)}
            ),
            "upper": None if verdict.upper_witness is None else {"k": verdict.upper_witness.k},
            "search": search,
            "cut": cut,
            "notes": list(verdict.notes),
            "misses": [(rule.code, rule.value, reason) for rule, reason in verdict.misses.items()],
        }

    def render(self, verdict: Verdict, indent: str = "") -> str:
        """Report for one verdict.

        Raises:
            ValueError: If template rendering fails.
        """
        try:
            return Template(self.VERDICT_TEMPLATE).render(**self._context(verdict, indent))
        except TemplateError as e:
            raise ValueError(f"Failed to render report template: {e}") from e

    def render_aggregate(self, aggregate: AggregateVerdict) -> str:
        """Report for a possibly disconnected instance, one block per component."""
        lines: List[str] = [
            f"class: {self._class_label(aggregate.verdict_class)}",
            f"delta_f: {aggregate.delta_f}",
            f"components: {len(aggregate.components)}",
        ]
        if aggregate.witness is not None:
            lines.append(f"witness: {aggregate.witness.k} colors")
        lines.extend(f"note: {note}" for note in aggregate.notes)
        for i, component in enumerate(aggregate.components, start=1):
            members = " ".join(str(v + 1) for v in component.vertices)
            lines.append(f"component {i} (vertices {members}):")
            lines.append(self.render(component.verdict, indent="  "))
        return "\n".join(lines)


def explain(verdict: Verdict, styled: bool = False) -> str:
    """Text trace: rule fired, its condition, witness summary and per-rule miss reasons."""
    return ReportRenderer(styled).render(verdict)


def explain_aggregate(aggregate: AggregateVerdict, styled: bool = False) -> str:
    return ReportRenderer(styled).render_aggregate(aggregate)
