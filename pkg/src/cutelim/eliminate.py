"""
Cut elimination for calculi whose inception rules come from the rule generator.

Repeatedly take the leftmost uppermost cut (both premises cut-free, dreams
included) and reduce it:

  * an identity premise is dropped;
  * when both premises introduce the cut formula, a principal reduction
    replaces it by cuts on the immediate subformulas;
  * otherwise the cut moves up the premise where the formula is a parameter,
    left premise first, rebuilding every dream it crosses.

Every intermediate derivation is re-checked, congruence is recomputed from
the check, and each step must create only cuts of strictly smaller measure.
"""
import logging
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from checker import (
    Calculus, CheckReport, Derivation, DerivationChecker, is_cut_free, node_at, premise_path, replace_node, walk,
)
from config import CUTELIM_MAX_STEPS
from dto import ReductionKind
from errors import CutEliminationError
from kernel import CUT, ID, FormulaLeaf, is_left_principal, is_right_principal, print_sequent
from syntax import print_formula
from .measure import CutMeasure, cut_measure
from .parametric import ParametricPush
from .principal import reduce_principal

logger = logging.getLogger(__name__)


@dataclass
class ReductionRecord:
    step: int
    kind: ReductionKind
    path: str
    formula: str
    before: CutMeasure
    # largest measure among the cuts the reduction created
    after: Optional[CutMeasure] = None

    def render(self) -> str:
        after = str(self.after) if self.after is not None else "-"
        return f"{self.step:>4}  {self.kind.value:<10} {self.formula}  {self.before} -> {after}  at {self.path}"


@dataclass
class EliminationResult:
    derivation: Derivation
    trace: List[ReductionRecord] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def steps(self) -> int:
        return len({r.step for r in self.trace})

    def kinds(self) -> List[ReductionKind]:
        return [r.kind for r in self.trace]

    def render_trace(self) -> str:
        return "\n".join(r.render() for r in self.trace)


def uppermost_cut(d: Derivation) -> Optional[str]:
    """Path of the first cut in pre-order whose premises are cut-free."""
    for path, node, _ in walk(d):
        if node.rule == CUT and all(is_cut_free(p) for p in node.premises):
            return path
    return None


class CutEliminator:
    def __init__(self, calculus: Calculus, max_steps: int = CUTELIM_MAX_STEPS):
        self.calculus = calculus
        self.max_steps = max_steps
        self.trace: List[ReductionRecord] = []
        self.timings: Dict[str, float] = {"check_s": 0.0, "reduce_s": 0.0}

    def check(self, d: Derivation) -> CheckReport:
        t0 = time.perf_counter()
        report = DerivationChecker(self.calculus).run(d)
        self.timings["check_s"] += time.perf_counter() - t0
        if not report.ok:
            issue = report.issues[0]
            raise CutEliminationError(f"derivation does not check: {issue.message}", issue.path)
        return report

    def run(self, d: Derivation) -> EliminationResult:
        endsequent = d.conclusion
        step = 0
        while True:
            report = self.check(d)
            path = uppermost_cut(d)
            if path is None:
                break
            step += 1
            if step > self.max_steps:
                raise CutEliminationError(f"gave up after {self.max_steps} reductions", path)
            t0 = time.perf_counter()
            d = replace_node(d, path, self.reduce(d, path, report, step))
            self.timings["reduce_s"] += time.perf_counter() - t0
            if d.conclusion != endsequent:
                raise CutEliminationError(f"endsequent changed to {print_sequent(d.conclusion)}", path)
        logger.info(
            "[cutelim] %s: %d reduction(s), check %.3fs, reduce %.3fs",
            print_sequent(endsequent), step, self.timings["check_s"], self.timings["reduce_s"],
        )
        return EliminationResult(d, list(self.trace), dict(self.timings))

    def record(self, step: int, kind: ReductionKind, path: str, formula: str, before: CutMeasure,
               created: List[CutMeasure]) -> None:
        after = max(created) if created else None
        if after is not None and not after < before:
            raise CutEliminationError(f"{kind.value} step {step} does not decrease the cut measure ({before} -> {after})", path)
        self.trace.append(ReductionRecord(step, kind, path, formula, before, after))
        logger.info("[cutelim][step=%d] %s at %s on %s: %s -> %s", step, kind.value, path, formula, before, after or "-")

    def reduce(self, d: Derivation, path: str, report: CheckReport, step: int) -> Derivation:
        node = node_at(d, path)
        left, right = node.premises
        if not isinstance(left.conclusion.succ, FormulaLeaf):
            raise CutEliminationError("cut premise does not end in a formula", premise_path(path, 0))
        formula = left.conclusion.succ.formula
        shown = print_formula(formula)
        before = cut_measure(left, right, formula, self.calculus.depth_of)

        if left.rule == ID or right.rule == ID:
            self.record(step, ReductionKind.AXIOM, path, shown, before, [])
            return right if left.rule == ID else left

        left_rule, right_rule = self.calculus.lookup(left.rule), self.calculus.lookup(right.rule)
        if left_rule is None or right_rule is None:
            raise CutEliminationError(f"unknown rule {left.rule if left_rule is None else right.rule}", path)
        left_principal, right_principal = is_left_principal(left_rule), is_right_principal(right_rule)
        if left_principal and right_principal:
            result, created = reduce_principal(node, self.calculus)
            self.record(step, ReductionKind.PRINCIPAL, path, shown, before, created)
            return result

        push = ParametricPush(self.calculus, d, report, path, succedent=not left_principal)
        result = push.run()
        self.record(step, ReductionKind.PARAMETRIC, path, shown, before, push.created)
        for event in push.events:
            self.record(step, ReductionKind.REBUILD, event.path, shown, before, event.created)
        return result


def eliminate_all_cuts(d: Derivation, calculus: Calculus, max_steps: int = CUTELIM_MAX_STEPS) -> EliminationResult:
    """Cut-free derivation of the same endsequent, with one trace record per reduction."""
    t0 = time.perf_counter()
    result = CutEliminator(calculus, max_steps).run(d)
    result.timings["total_s"] = time.perf_counter() - t0
    if not is_cut_free(result.derivation):
        raise CutEliminationError("cuts remain after elimination")
    return result
