"""
Parametric step: push a cut up the premise where its formula is a parameter.

The occurrences congruent to the cut formula in that premise are replaced by
the other side of the cut's conclusion. Where the trace ends in an
introduction of the formula, the introducing subderivation is cut against
the other premise (the bridge); an identity axiom is replaced by the bridge
outright. Dreams whose aims change are rebuilt by `WitnessBuilder`.
"""
import logging
from collections import defaultdict
from typing import Dict, List, Tuple

from checker import (
    Calculus, CheckReport, Derivation, congruence_classes, dream_path, node_at, premise_path, walk,
)
from errors import CutEliminationError
from kernel import (
    ID, ParamAllocator, Position, Structure, instantiate_sequent, print_sequent, sequent_params,
)
from .measure import CutMeasure
from .substitution import metavar_prefix, substituted_bindings
from .witness import BridgeSupply, Push, RebuildEvent, WitnessBuilder, allowed_at, allowed_rules

logger = logging.getLogger(__name__)


def _under(path: str, prefix: str) -> bool:
    return path == prefix or path.startswith(prefix + "/")


class ParametricPush:
    def __init__(self, calculus: Calculus, d: Derivation, report: CheckReport, cut_path: str, succedent: bool):
        self.calculus = calculus
        self.cut_path = cut_path
        node = node_at(d, cut_path)
        left, right = node.premises
        if succedent:
            formula = left.conclusion.succ.formula
            self.pushed_path, bridge_path = premise_path(cut_path, 0), premise_path(cut_path, 1)
            replacement: Structure = node.conclusion.succ
        else:
            formula = right.conclusion.ante.formula
            self.pushed_path, bridge_path = premise_path(cut_path, 1), premise_path(cut_path, 0)
            replacement = node.conclusion.ante
        self.pushed = node_at(d, self.pushed_path)
        self.push = Push(formula, replacement, succedent)
        self.allowed = allowed_at(d, cut_path, calculus)

        start = (self.pushed_path, 1 if succedent else 0, ())
        self.traced: Dict[str, List[Position]] = defaultdict(list)
        for occ_path, side, path in congruence_classes(d, report).class_of(start):
            if not _under(occ_path, self.pushed_path):
                raise CutEliminationError(
                    f"cut formula is congruent to a structure outside the cut premise ({occ_path})", cut_path
                )
            self.traced[occ_path].append((side, path))

        used = {p.ident for _, n, _ in walk(d) for p in sequent_params(n.conclusion)}
        introduced = {ident for ident, at in report.params.items() if _under(at, bridge_path)}
        self.supply = BridgeSupply(node_at(d, bridge_path), introduced, ParamAllocator(used=used))
        self.applications = {app.path: app for app in report.applications}
        self.builder = WitnessBuilder(calculus, self.push, self.supply, self.applications, rebound={})
        self.introductions: List[CutMeasure] = []

    @property
    def created(self) -> List[CutMeasure]:
        return self.introductions + self.builder.created

    @property
    def events(self) -> List[RebuildEvent]:
        return self.builder.events

    def run(self) -> Derivation:
        """Derivation replacing the cut node."""
        return self.visit(self.pushed, self.pushed_path)

    def visit(self, node: Derivation, path: str) -> Derivation:
        positions = self.traced.get(path)
        if not positions:
            return node
        if node.rule == ID:
            return self.supply.take(self.allowed, path)
        app = self.applications.get(path)
        if app is None:
            raise CutEliminationError(f"no checked application at {path}", path)
        rule = app.rule
        principal: List[Position] = []
        parametric: List[Position] = []
        for side, p in positions:
            found = metavar_prefix(rule.conclusion.side(side), p)
            (parametric if found else principal).append((side, p))
        if any(p for _, p in principal):
            raise CutEliminationError(f"{rule.name} introduces a formula below the top of a side", path)

        updated = substituted_bindings(rule, app.substitution, parametric, self.push.replacement)
        for name, value in updated.items():
            if value == app.substitution[name]:
                continue
            if app.origins.get(name, path) != path:
                raise CutEliminationError(f"{rule.name} would rebind the inherited metavariable {name}", path)
            self.builder.rebound[(path, name)] = value

        premises = []
        for i, child in enumerate(node.premises):
            rebuilt = self.visit(child, premise_path(path, i))
            expected = instantiate_sequent(rule.premises[i], updated)
            if rebuilt.conclusion != expected:
                raise CutEliminationError(
                    f"premise {i} became {print_sequent(rebuilt.conclusion)}, rule wants {print_sequent(expected)}", path
                )
            premises.append(rebuilt)
        dreams = [
            self.builder.rebuild_witness(
                dream, dream_path(path, k), instantiate_sequent(rule.contracts[k].aim, updated),
                allowed_rules(self.calculus, rule, k),
            )
            for k, dream in enumerate(node.dreams)
        ]
        bindings = tuple((name, updated.get(name, value)) for name, value in node.bindings)
        rebuilt = Derivation(node.rule, instantiate_sequent(rule.conclusion, updated), tuple(premises), tuple(dreams), bindings)
        if principal:
            bridge = self.supply.take(self.allowed, path)
            self.introductions.append(self.push.measure(node, bridge, self.calculus.depth_of))
            logger.debug("[cutelim][path=%s] %s introduces the cut formula", path, rule.name)
            return self.push.cut_with(rebuilt, bridge)
        return rebuilt


def push_cut(
    calculus: Calculus, d: Derivation, report: CheckReport, cut_path: str, succedent: bool
) -> Tuple[Derivation, ParametricPush]:
    step = ParametricPush(calculus, d, report, cut_path, succedent)
    return step.run(), step