"""Rule pipeline deciding f-Class 1 / f-Class 2 with checkable certificates.

Rules run in a fixed order and the first one that fires decides. Every Class 1
verdict carries a delta_f-coloring (or a note when the witness search ran out of
budget); every Class 2 verdict carries the exhaustive-search result at delta_f and a
(delta_f + 1)-coloring.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from ..utils.logging import get_logger
from .coloring import (
    FColoring,
    SearchResult,
    SearchStatus,
    even_f_color,
    search_delta_f_coloring,
    upper_color_f,
    verify_coloring,
)
from .cuts import CutKind, CutWitness, find_matching_cut, find_star_cut
from .errors import DisconnectedError, EmptyGraphError, InternalInconsistencyError
from .graph import FInstance, connected_components, find_claw, is_bipartite
from .structure import CoreInfo, f_core, is_graph_W

logger = get_logger(__name__)


class VerdictClass(str, Enum):
    CLASS1 = "Class1"
    CLASS2 = "Class2"
    UNKNOWN = "Unknown"


class Rule(str, Enum):
    """Classifier rules in pipeline order."""

    BIPARTITE = "BIPARTITE"
    EVEN_F = "EVEN_F"
    EMPTY_CORE = "EMPTY_CORE"
    CORE_UNICYCLIC = "CORE_UNICYCLIC"
    CORE_DEG2_NECESSARY = "CORE_DEG2_NECESSARY"
    SMALL_CUT = "SMALL_CUT"
    CLAWFREE = "CLAWFREE"
    EXACT = "EXACT"
    UNKNOWN = "UNKNOWN"

    @property
    def code(self) -> str:
        return f"R{list(Rule).index(self) + 1}"


@dataclass(frozen=True)
class ClassifyOptions:
    """Limits for one classification.

    Attributes:
        exact_edge_limit: Largest edge count the exact rule will search.
        cut_budget: Node budget of the matching-cut search.
        witness_budget: Node budget for the witness search of a rule that guarantees one.
        exact_budget: Node budget of the exact rule; None searches to completion.
    """

    exact_edge_limit: int = 24
    cut_budget: int = 1_000_000
    witness_budget: Optional[int] = 5_000_000
    exact_budget: Optional[int] = None

    @classmethod
    def from_config(cls, config: Any) -> "ClassifyOptions":
        """Build from a ``ClassifierConfig``-shaped object."""
        return cls(
            exact_edge_limit=config.exact_edge_limit,
            cut_budget=config.cut_budget,
            witness_budget=config.witness_budget,
            exact_budget=config.exact_budget,
        )


@dataclass(frozen=True)
class Verdict:
    """Classification of one connected instance.

    Attributes:
        verdict_class: Class1, Class2 or Unknown.
        rule: The rule that decided.
        delta_f: delta_f of the classified instance.
        witness: delta_f-coloring backing a Class1 verdict.
        upper_witness: (delta_f + 1)-coloring attached to Class2 and Unknown verdicts.
        proof: Exact-search result backing R8 verdicts.
        cut: Cut found by the small-cut rule.
        core_is_forest: Whether the f-core is a forest (None when not computed).
        notes: Free-form remarks.
        misses: Why each earlier rule did not fire, in pipeline order.
    """

    verdict_class: VerdictClass
    rule: Rule
    delta_f: int
    witness: Optional[FColoring] = None
    upper_witness: Optional[FColoring] = None
    proof: Optional[SearchResult] = None
    cut: Optional[CutWitness] = None
    core_is_forest: Optional[bool] = None
    notes: Tuple[str, ...] = ()
    misses: Dict[Rule, str] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        """Stable JSON view (fixed key order, 1-based vertices)."""
        return {
            "class": self.verdict_class.value,
            "rule": self.rule.value,
            "rule_id": self.rule.code,
            "delta_f": self.delta_f,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "upper_witness": (
                None if self.upper_witness is None else self.upper_witness.to_dict()
            ),
            "search": (
                None
                if self.proof is None
                else {"status": self.proof.status.value, "nodes": self.proof.nodes_expanded}
            ),
            "cut": None if self.cut is None else self.cut.to_dict(),
            "notes": list(self.notes),
            "misses": {rule.code: reason for rule, reason in self.misses.items()},
        }


@dataclass(frozen=True)
class ComponentVerdict:
    """Verdict of one component; ``vertices[i]`` is the original vertex of local ``i``."""

    vertices: Tuple[int, ...]
    verdict: Verdict


@dataclass(frozen=True)
class AggregateVerdict:
    """Classification of a possibly disconnected instance.

    Attributes:
        verdict_class: Aggregate class measured against the global delta_f.
        delta_f: Global delta_f.
        components: Per-component verdicts, components ordered by smallest vertex.
        witness: Global delta_f-coloring when the aggregate is Class1 and every
            deciding component has a witness.
        notes: Free-form remarks.
    """

    verdict_class: VerdictClass
    delta_f: int
    components: Tuple[ComponentVerdict, ...]
    witness: Optional[FColoring] = None
    notes: Tuple[str, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "class": self.verdict_class.value,
            "delta_f": self.delta_f,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "components": [
                {"vertices": [v + 1 for v in cv.vertices], **cv.verdict.to_dict()}
                for cv in self.components
            ],
            "notes": list(self.notes),
        }


class _Pipeline:
    """One classification run; collects miss reasons as rules are tried."""

    def __init__(self, inst: FInstance, opts: ClassifyOptions):
        self.inst = inst
        self.opts = opts
        self.misses: Dict[Rule, str] = {}
        self.notes: List[str] = []
        self.core: CoreInfo = f_core(inst)
        self.log = get_logger(
            __name__, {"n": inst.n, "m": inst.m, "delta_f": inst.delta_f}
        )

    def class1(
        self, rule: Rule, witness: Optional[FColoring], cut: Optional[CutWitness] = None
    ) -> Verdict:
        self.log.info("rule %s (%s) fired: Class1", rule.code, rule.value)
        return Verdict(
            verdict_class=VerdictClass.CLASS1,
            rule=rule,
            delta_f=self.inst.delta_f,
            witness=witness,
            cut=cut,
            core_is_forest=self.core.is_forest,
            notes=tuple(self.notes),
            misses=dict(self.misses),
        )

    def searched_witness(self, rule: Rule) -> Optional[FColoring]:
        result = search_delta_f_coloring(self.inst, self.opts.witness_budget)
        if result.status is SearchStatus.PROVED_NONE:
            raise InternalInconsistencyError(
                f"rule {rule.value} asserts Class1 but no delta_f-coloring exists"
            )
        if result.status is SearchStatus.EXHAUSTED:
            self.notes.append(
                f"witness search exhausted its budget of {self.opts.witness_budget} nodes"
            )
            self.log.warning("rule %s fired but the witness search ran out of budget", rule.code)
            return None
        return result.coloring

    def try_bipartite(self) -> Optional[Verdict]:
        if is_bipartite(self.inst.graph) is None:
            self.misses[Rule.BIPARTITE] = "graph contains an odd cycle"
            return None
        return self.class1(Rule.BIPARTITE, upper_color_f(self.inst))

    def try_even_f(self) -> Optional[Verdict]:
        odd = next((v for v in range(self.inst.n) if self.inst.f[v] % 2), None)
        if odd is not None:
            self.misses[Rule.EVEN_F] = f"f({odd + 1}) = {self.inst.f[odd]} is odd"
            return None
        return self.class1(Rule.EVEN_F, even_f_color(self.inst))

    def try_empty_core(self) -> Optional[Verdict]:
        if not self.core.is_empty:
            self.misses[Rule.EMPTY_CORE] = (
                f"f-core has {len(self.core.members)} f-maximum vertices"
            )
            return None
        return self.class1(Rule.EMPTY_CORE, upper_color_f(self.inst))

    def try_core_unicyclic(self) -> Optional[Verdict]:
        if not self.core.all_components_unicyclic_or_tree:
            shapes = ", ".join(self.core.component_shapes())
            self.misses[Rule.CORE_UNICYCLIC] = (
                f"an f-core component has more than one cycle (components: {shapes})"
            )
            return None
        if self.core.is_two_regular:
            self.misses[Rule.CORE_UNICYCLIC] = "f-core is 2-regular"
            return None
        return self.class1(Rule.CORE_UNICYCLIC, self.searched_witness(Rule.CORE_UNICYCLIC))

    def necessary_condition_failure(self) -> Optional[str]:
        """First failed necessary condition of Class 2 with f-core degree <= 2."""
        inst = self.inst
        g = inst.graph
        for v in range(inst.n):
            if v not in self.core.members and g.degree(v) != inst.f[v] * inst.delta_f - 1:
                return (
                    f"vertex {v + 1} is outside the f-core with degree {g.degree(v)}, "
                    f"not f*delta_f - 1 = {inst.f[v] * inst.delta_f - 1}"
                )
        for v in range(inst.n):
            tight = len(g.adjacency[v] & self.core.members)
            if tight < 2 * inst.f[v]:
                return (
                    f"vertex {v + 1} has {tight} f-maximum neighbors, "
                    f"fewer than 2f = {2 * inst.f[v]}"
                )
        if len(self.core.members) < 3:
            return f"only {len(self.core.members)} f-maximum vertices"
        return None

    def try_necessary(self) -> Optional[Verdict]:
        if self.core.max_core_degree > 2:
            self.misses[Rule.CORE_DEG2_NECESSARY] = (
                f"f-core has maximum degree {self.core.max_core_degree}"
            )
            return None
        failure = self.necessary_condition_failure()
        if failure is None:
            self.misses[Rule.CORE_DEG2_NECESSARY] = "all necessary conditions of Class 2 hold"
            return None
        self.notes.append(failure)
        return self.class1(
            Rule.CORE_DEG2_NECESSARY, self.searched_witness(Rule.CORE_DEG2_NECESSARY)
        )

    def try_small_cut(self) -> Optional[Verdict]:
        if self.core.max_core_degree > 2:
            self.misses[Rule.SMALL_CUT] = f"f-core has maximum degree {self.core.max_core_degree}"
            return None
        if self.inst.delta_f < 3:
            self.misses[Rule.SMALL_CUT] = "delta_f < 3 leaves no room for a cut"
            return None
        cut = find_star_cut(self.inst)
        if cut is None:
            result = find_matching_cut(self.inst, self.opts.cut_budget)
            cut = result.witness
            if cut is None:
                reason = "no star or matching cut of size <= delta_f - 2"
                if result.budget_exhausted:
                    reason = "no star cut; matching-cut budget exhausted"
                    self.notes.append("matching-cut budget exhausted")
                self.misses[Rule.SMALL_CUT] = reason
                return None
        witness = self.searched_witness(Rule.SMALL_CUT)
        if witness is not None and cut.kind is CutKind.MATCHING:
            cut_colors = [witness.assignment[e] for e in cut.cut_edges]
            if len(set(cut_colors)) == len(cut_colors):
                self.notes.append(
                    "distinct_cut_colors: the cut edges have pairwise different colors"
                )
        return self.class1(Rule.SMALL_CUT, witness, cut)

    def try_claw_free(self) -> Optional[Verdict]:
        if self.core.max_core_degree > 2:
            self.misses[Rule.CLAWFREE] = f"f-core has maximum degree {self.core.max_core_degree}"
            return None
        claw = find_claw(self.inst.graph)
        if claw is not None:
            leaves = ", ".join(str(x + 1) for x in claw.leaves)
            self.misses[Rule.CLAWFREE] = f"claw at vertex {claw.center + 1} with leaves {leaves}"
            return None
        if all(x == 1 for x in self.inst.f):
            self.misses[Rule.CLAWFREE] = "f is 1 everywhere"
            return None
        if is_graph_W(self.inst):
            self.misses[Rule.CLAWFREE] = "instance is the exceptional wheel W"
            return None
        return self.class1(Rule.CLAWFREE, self.searched_witness(Rule.CLAWFREE))

    def exact(self) -> Verdict:
        inst = self.inst
        if inst.m > self.opts.exact_edge_limit:
            self.misses[Rule.EXACT] = (
                f"{inst.m} edges exceed the exact limit of {self.opts.exact_edge_limit}"
            )
            return self.unknown()
        result = search_delta_f_coloring(inst, self.opts.exact_budget)
        if result.status is SearchStatus.FOUND:
            self.log.info("rule %s (EXACT) fired: Class1", Rule.EXACT.code)
            return Verdict(
                verdict_class=VerdictClass.CLASS1,
                rule=Rule.EXACT,
                delta_f=inst.delta_f,
                witness=result.coloring,
                proof=result,
                core_is_forest=self.core.is_forest,
                notes=tuple(self.notes),
                misses=dict(self.misses),
            )
        if result.status is SearchStatus.EXHAUSTED:
            self.misses[Rule.EXACT] = (
                f"exact search budget exhausted after {result.nodes_expanded} nodes"
            )
            self.notes.append("exact search budget exhausted")
            return self.unknown()

        upper = upper_color_f(inst)
        if upper.k <= inst.delta_f:
            raise InternalInconsistencyError(
                "exact search found no delta_f-coloring but the constructive colorer did"
            )
        self.log.info("rule %s (EXACT) fired: Class2", Rule.EXACT.code)
        return Verdict(
            verdict_class=VerdictClass.CLASS2,
            rule=Rule.EXACT,
            delta_f=inst.delta_f,
            upper_witness=upper,
            proof=result,
            core_is_forest=self.core.is_forest,
            notes=tuple(self.notes),
            misses=dict(self.misses),
        )

    def unknown(self) -> Verdict:
        self.log.info("no rule decided: Unknown")
        return Verdict(
            verdict_class=VerdictClass.UNKNOWN,
            rule=Rule.UNKNOWN,
            delta_f=self.inst.delta_f,
            upper_witness=upper_color_f(self.inst),
            core_is_forest=self.core.is_forest,
            notes=tuple(self.notes),
            misses=dict(self.misses),
        )

    def run(self) -> Verdict:
        for step in (
            self.try_bipartite,
            self.try_even_f,
            self.try_empty_core,
            self.try_core_unicyclic,
            self.try_necessary,
            self.try_small_cut,
            self.try_claw_free,
        ):
            verdict = step()
            if verdict is not None:
                return verdict
        return self.exact()


def classify(inst: FInstance, opts: Optional[ClassifyOptions] = None) -> Verdict:
    """Classify a connected instance with at least one edge.

    Raises:
        EmptyGraphError: If the instance has no edges.
        DisconnectedError: If the instance is not connected.
    """
    if inst.m == 0:
        raise EmptyGraphError("cannot classify an edgeless instance")
    if len(connected_components(inst.graph)) != 1:
        raise DisconnectedError("classify needs a connected instance; use classify_any")
    verdict = _Pipeline(inst, opts or ClassifyOptions()).run()
    witness = verdict.witness
    if witness is not None and (
        witness.k != inst.delta_f or not verify_coloring(inst, witness).valid
    ):
        raise InternalInconsistencyError(f"rule {verdict.rule.value} produced an invalid witness")
    return verdict


def classify_any(inst: FInstance, opts: Optional[ClassifyOptions] = None) -> AggregateVerdict:
    """Classify every component with an edge and aggregate against the global delta_f.

    The aggregate is Class2 when some component attaining the global delta_f is
    Class2, Class1 when all of them are Class1, and Unknown otherwise. Components
    with a smaller delta_f always fit in the global palette.

    Raises:
        EmptyGraphError: If the instance has no edges.
    """
    if inst.m == 0:
        raise EmptyGraphError("cannot classify an edgeless instance")
    opts = opts or ClassifyOptions()
    global_delta = inst.delta_f

    results: List[Tuple[FInstance, ComponentVerdict]] = []
    for component in connected_components(inst.graph):
        sub, members = inst.induced(component)
        if sub.m == 0:
            continue
        results.append((sub, ComponentVerdict(members, classify(sub, opts))))

    deciding = [cv.verdict for _, cv in results if cv.verdict.delta_f == global_delta]
    if any(v.verdict_class is VerdictClass.CLASS2 for v in deciding):
        aggregate = VerdictClass.CLASS2
    elif all(v.verdict_class is VerdictClass.CLASS1 for v in deciding):
        aggregate = VerdictClass.CLASS1
    else:
        aggregate = VerdictClass.UNKNOWN

    notes: List[str] = []
    witness = None
    if aggregate is VerdictClass.CLASS1:
        witness = _merge_witnesses(results, global_delta)
        if witness is None:
            notes.append("no global witness: a deciding component has no witness coloring")
    logger.info("aggregate over %d components: %s", len(results), aggregate.value)
    return AggregateVerdict(
        verdict_class=aggregate,
        delta_f=global_delta,
        components=tuple(cv for _, cv in results),
        witness=witness,
        notes=tuple(notes),
    )


def _merge_witnesses(
    results: List[Tuple[FInstance, ComponentVerdict]], global_delta: int
) -> Optional[FColoring]:
    assignment = {}
    for sub, cv in results:
        local = cv.verdict.witness
        if local is None:
            if cv.verdict.delta_f == global_delta:
                return None
            local = upper_color_f(sub)
        for (u, v), c in local.assignment.items():
            assignment[(cv.vertices[u], cv.vertices[v])] = c
    return FColoring(global_delta, assignment)

