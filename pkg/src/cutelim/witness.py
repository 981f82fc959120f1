"""
Rebuilding dreams after a parametric substitution.

When the occurrences of a cut formula A are replaced by a structure Y and the
trace crosses an inception rule, the contract aims change and the old dream
no longer derives them. A new witness is obtained from the old one without
touching its inside: wherever the new aim differs, display the occurrence of
A, cut it against the bridge (A |- Y, or Y |- A for precedent occurrences)
and undisplay. Contract rules applied inside the dream that inherited a
rebound metavariable get the same treatment on their premises and nested
aims; their conclusions never mention such metavariables.
"""
import logging
from dataclasses import dataclass, field, replace
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from checker import Application, Calculus, Derivation, dream_path, premise_path, walk
from errors import CutEliminationError, DisplayError
from kernel import (
    ANTE, CUT, SUCC, FormulaLeaf, InceptionRule, Param, ParamAllocator, Sequent, Structure, at_position, display,
    instantiate_sequent, print_sequent, print_structure, rename_params, sequent_metavars, structure_diff,
    undisplay,
)
from syntax import Formula, print_formula
from .measure import CutMeasure, cut_measure

logger = logging.getLogger(__name__)


def cut(left: Derivation, right: Derivation) -> Derivation:
    return Derivation(CUT, Sequent(left.conclusion.ante, right.conclusion.succ), (left, right))


def chain(node: Derivation, steps) -> Derivation:
    """Stack one display postulate node per step on top of `node`."""
    for step in steps:
        node = Derivation(step.rule, step.result, (node,))
    return node


def allowed_rules(calculus: Calculus, rule: InceptionRule, k: int) -> FrozenSet[str]:
    """Rules a dream fulfilling contract k of `rule` may apply."""
    names = {r.name for r in calculus.base} | {r.name for r in calculus.analytic}
    return frozenset(names | {r.name for r in rule.contracts[k].rules})


def allowed_at(d: Derivation, path: str, calculus: Calculus) -> Optional[FrozenSet[str]]:
    """Rules available at `path`; None outside dreams, where every rule is."""
    allowed = None
    node = d
    for part in path.split("/")[1:]:
        kind, i = part[0], int(part[1:])
        if kind == "d":
            allowed = allowed_rules(calculus, calculus.lookup(node.rule), i)
            node = node.dreams[i]
        else:
            node = node.premises[i]
    return allowed


def _rename(d: Derivation, mapping: Dict[str, str]) -> Derivation:
    def seq(s: Sequent) -> Sequent:
        return Sequent(rename_params(s.ante, mapping), rename_params(s.succ, mapping))

    bindings = tuple(
        (name, rename_params(value, mapping) if isinstance(value, Param) else value) for name, value in d.bindings
    )
    return replace(
        d,
        conclusion=seq(d.conclusion),
        premises=tuple(_rename(c, mapping) for c in d.premises),
        dreams=tuple(_rename(c, mapping) for c in d.dreams),
        bindings=bindings,
    )


@dataclass(frozen=True)
class Push:
    """Direction of a parametric step: which side A sits on and what replaces it."""
    formula: Formula
    replacement: Structure
    # A is traced in succedent positions of the left premise
    succedent: bool

    def cut_with(self, node: Derivation, bridge: Derivation) -> Derivation:
        return cut(node, bridge) if self.succedent else cut(bridge, node)

    def measure(self, node: Derivation, bridge: Derivation, depth_of) -> CutMeasure:
        if self.succedent:
            return cut_measure(node, bridge, self.formula, depth_of)
        return cut_measure(bridge, node, self.formula, depth_of)


class BridgeSupply:
    """
    Copies of the opposite cut premise. The first copy is the premise itself;
    later ones get fresh names for the parameters its own contracts introduced.
    """

    def __init__(self, bridge: Derivation, introduced: Set[str], allocator: ParamAllocator):
        self.bridge = bridge
        self.introduced = sorted(introduced)
        self.allocator = allocator
        self.copies = 0
        self.top_rules = {node.rule for _, node, in_dream in walk(bridge) if not in_dream}

    def take(self, allowed: Optional[FrozenSet[str]], path: str) -> Derivation:
        if allowed is not None and not self.top_rules <= allowed:
            missing = ", ".join(sorted(self.top_rules - allowed))
            raise CutEliminationError(f"the cut premise uses {missing}, which the dream cannot apply", path)
        self.copies += 1
        if self.copies == 1 or not self.introduced:
            return self.bridge
        mapping = {}
        for ident in self.introduced:
            base = ident.rstrip("0123456789") or "N"
            mapping[ident] = self.allocator.fresh(base, None).ident
        return _rename(self.bridge, mapping)


@dataclass
class RebuildEvent:
    path: str
    created: List[CutMeasure] = field(default_factory=list)


class WitnessBuilder:
    """
    Rebuilds dreams under rebound metavariables. `rebound` maps
    `(application path, metavariable)` to the new binding; applications
    inside dreams find inherited bindings through their origins.
    """

    def __init__(
        self,
        calculus: Calculus,
        push: Push,
        supply: BridgeSupply,
        applications: Optional[Dict[str, Application]] = None,
        rebound: Optional[Dict[Tuple[str, str], Structure]] = None,
    ):
        self.calculus = calculus
        self.push = push
        self.supply = supply
        self.applications = applications or {}
        self.rebound = rebound if rebound is not None else {}
        self.created: List[CutMeasure] = []
        self.events: List[RebuildEvent] = []

    def rebuild_witness(self, dream: Derivation, path: str, aim: Sequent, allowed: Optional[FrozenSet[str]]) -> Derivation:
        """A derivation of `aim` from the cut-free witness `dream` of the unsubstituted aim."""
        inner = self.rebuild(dream, path, allowed)
        if inner.conclusion == aim:
            return inner
        before = len(self.created)
        rebuilt = self.patch(inner, aim, path, allowed, dream)
        self.events.append(RebuildEvent(path, self.created[before:]))
        logger.info("[cutelim][path=%s] dream rebuilt for %s", path, print_sequent(aim))
        return rebuilt

    def rebuild(self, node: Derivation, path: str, allowed: Optional[FrozenSet[str]]) -> Derivation:
        """Same conclusion; contract rules with rebound inherited metavariables get patched premises and aims."""
        app = self.applications.get(path)
        sigma = app.substitution if app else {}
        updated = {
            name: self.rebound.get((app.origins.get(name, path), name), value) for name, value in sigma.items()
        } if app else {}
        changed = {name for name in sigma if updated[name] != sigma[name]}
        rule = app.rule if app else None
        if changed and rule is not None:
            clash = changed & {mv.name for mv in sequent_metavars(rule.conclusion)}
            if clash:
                raise CutEliminationError(
                    f"contract rule {rule.name} concludes with substituted {', '.join(sorted(clash))}", path
                )
        premises = []
        for i, child in enumerate(node.premises):
            cpath = premise_path(path, i)
            rebuilt = self.rebuild(child, cpath, allowed)
            if changed:
                rebuilt = self.patch(rebuilt, instantiate_sequent(rule.premises[i], updated), cpath, allowed, child)
            premises.append(rebuilt)
        dreams = []
        for k, dream in enumerate(node.dreams):
            dpath = dream_path(path, k)
            inner_allowed = allowed_rules(self.calculus, rule, k) if rule is not None else allowed
            if changed:
                aim = instantiate_sequent(rule.contracts[k].aim, updated)
                dreams.append(self.rebuild_witness(dream, dpath, aim, inner_allowed))
            else:
                dreams.append(self.rebuild(dream, dpath, inner_allowed))
        bindings = tuple((name, updated.get(name, value)) for name, value in node.bindings)
        return replace(node, premises=tuple(premises), dreams=tuple(dreams), bindings=bindings)

    def patch(
        self, node: Derivation, target: Sequent, path: str, allowed: Optional[FrozenSet[str]], original: Derivation
    ) -> Derivation:
        """Turn `node` into a derivation of `target` by display, cut against the bridge, undisplay."""
        if node.conclusion == target:
            return node
        leaf = FormulaLeaf(self.push.formula)
        sites = [(side, p) for side in (0, 1) for p in structure_diff(node.conclusion.side(side), target.side(side))]
        current = node
        for pos in sites:
            if at_position(node.conclusion, pos) != leaf or at_position(target, pos) != self.push.replacement:
                raise CutEliminationError(
                    f"{print_sequent(node.conclusion)} and {print_sequent(target)} differ beyond "
                    f"{print_formula(self.push.formula)} / {print_structure(self.push.replacement)}", path,
                )
            try:
                shown, steps = display(current.conclusion, pos, self.calculus.signature)
            except DisplayError as e:
                raise CutEliminationError(str(e), path) from e
            # the displayed occurrence sits opposite the last residual
            shown_side = (SUCC if steps[-1].residual_side == ANTE else ANTE) if steps else pos[0]
            on_succedent = shown_side == SUCC
            if on_succedent is not self.push.succedent:
                raise CutEliminationError(
                    f"occurrence of {print_formula(self.push.formula)} at {pos[0]}:{list(pos[1])} has the wrong sign", path
                )
            bridge = self.supply.take(allowed, path)
            joined = self.push.cut_with(chain(current, steps), bridge)
            self.created.append(self.push.measure(original, bridge, self.calculus.depth_of))
            _, back = undisplay(joined.conclusion, steps, self.calculus.signature)
            current = chain(joined, back)
        if current.conclusion != target:
            raise CutEliminationError(
                f"patched witness concludes {print_sequent(current.conclusion)}, wanted {print_sequent(target)}", path
            )
        return current


def rebuild_witness(
    witness: Derivation,
    aim: Sequent,
    bridge: Derivation,
    calculus: Calculus,
    allowed: Optional[FrozenSet[str]] = None,
) -> Derivation:
    """
    Witness of `aim`, the substituted version of `witness`'s conclusion, with
    every new cut taking `bridge` as one premise. `bridge` concludes A |- Y
    for substituted succedent occurrences and Y |- A for precedent ones.
    """
    if witness.conclusion == aim:
        return witness
    b = bridge.conclusion
    if isinstance(b.ante, FormulaLeaf) and not isinstance(b.succ, FormulaLeaf):
        push = Push(b.ante.formula, b.succ, succedent=True)
    elif isinstance(b.succ, FormulaLeaf) and not isinstance(b.ante, FormulaLeaf):
        push = Push(b.succ.formula, b.ante, succedent=False)
    else:
        # both sides are formulas: the side that changed decides
        succ_changed = structure_diff(witness.conclusion.succ, aim.succ) != []
        push = Push(b.ante.formula, b.succ, True) if succ_changed else Push(b.succ.formula, b.ante, False)
    supply = BridgeSupply(bridge, set(), ParamAllocator())
    return WitnessBuilder(calculus, push, supply).rebuild_witness(witness, "root", aim, allowed)
