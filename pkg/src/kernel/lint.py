"""
Structural conditions on rules (C1 to C8) and the freshness scans on
contract rules.

Every check returns diagnostics instead of raising, so a whole calculus can
be reported in one pass.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Set

from dto import RuleKind
from signature import Signature
from syntax import Formula, FormulaMeta, print_formula, walk
from .rules import InceptionRule
from .structures import (
    FormulaLeaf, Sequent, positions, sequent_metavars, sort_errors,
)

logger = logging.getLogger(__name__)

CONDITIONS = ("C1", "C2", "C3", "C4", "C5", "C6/C7", "fresh-aims", "contract-conclusions")


@dataclass
class LintReport:
    rule: str
    problems: Dict[str, List[str]] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    def add(self, condition: str, message: str) -> None:
        self.problems.setdefault(condition, []).append(message)

    def passed(self, condition: str) -> bool:
        return not self.problems.get(condition)

    @property
    def ok(self) -> bool:
        return not any(self.problems.values())


def _formulas(seq: Sequent) -> List[Formula]:
    found = []
    for side in (seq.ante, seq.succ):
        for _, sub in positions(side):
            if isinstance(sub, FormulaLeaf):
                found.append(sub.formula)
    return found


def _subformulas(formulas: Iterable[Formula]) -> Set[Formula]:
    return {node for f in formulas for node in walk(f)}


def conclusion_metavariables(rule: InceptionRule) -> Set[str]:
    return {mv.name for mv in sequent_metavars(rule.conclusion)}


def check_subformula(rule: InceptionRule, report: LintReport) -> None:
    if rule.kind is RuleKind.CUT:
        report.notes.append("C1 does not apply to cut")
        return
    allowed = _subformulas(_formulas(rule.conclusion))
    for i, premise in enumerate(rule.premises):
        for f in _formulas(premise):
            if f not in allowed:
                report.add("C1", f"premise {i}: {print_formula(f)} is not a subformula of the conclusion")


def check_sorts_shared(rule: InceptionRule, report: LintReport) -> None:
    """C2 and C4: one sort per metavariable across every sequent of the rule."""
    seen: Dict[str, object] = {}
    sequents = [rule.conclusion, *rule.premises, *(c.aim for c in rule.contracts)]
    for seq in sequents:
        for mv in sequent_metavars(seq):
            first = seen.setdefault(mv.name, mv.sort)
            if first is not mv.sort:
                report.add("C2", f"{mv.name} changes sort between premise and conclusion")


def check_linearity(rule: InceptionRule, report: LintReport) -> None:
    counts = Counter(mv.name for mv in sequent_metavars(rule.conclusion))
    for name, n in sorted(counts.items()):
        if n > 1:
            report.add("C3", f"{name} occurs {n} times in the conclusion")


def check_positions(rule: InceptionRule, sig: Signature, report: LintReport) -> None:
    sequents = [("conclusion", rule.conclusion)]
    sequents += [(f"premise {i}", p) for i, p in enumerate(rule.premises)]
    sequents += [(f"contract {i} aim", c.aim) for i, c in enumerate(rule.contracts)]
    for label, seq in sequents:
        for problem in sort_errors(seq, sig):
            report.add("C4", f"{label}: {problem}")


def check_principal(rule: InceptionRule, report: LintReport) -> None:
    for side_name, side in (("antecedent", rule.conclusion.ante), ("succedent", rule.conclusion.succ)):
        for path, sub in positions(side):
            if isinstance(sub, FormulaLeaf) and path:
                report.add("C5", f"formula {print_formula(sub.formula)} is nested inside the {side_name}")


def check_substitution(rule: InceptionRule, report: LintReport) -> None:
    """
    Parameters in the conclusion must be metavariables so that the rule is
    closed under substituting structures for them.
    """
    if rule.contracts:
        report.notes.append("C6/C7 modified: contract witnesses are rebuilt under substitution")
        return
    for side in (rule.conclusion.ante, rule.conclusion.succ):
        if isinstance(side, FormulaLeaf):
            continue
        for _, sub in positions(side):
            if isinstance(sub, FormulaLeaf) and not isinstance(sub.formula, FormulaMeta):
                report.add("C6/C7", f"concrete formula {print_formula(sub.formula)} in parameter position")


def check_contracts(rule: InceptionRule, report: LintReport) -> None:
    """
    Aims mention only the rule's conclusion metavariables and the contract's
    uninstantiable ones; contract rules at any depth never conclude with the
    enclosing rule's conclusion metavariables.
    """
    own = conclusion_metavariables(rule)
    for i, contract in enumerate(rule.contracts):
        allowed = own | {v.name for v in contract.uninstantiable}
        for mv in sequent_metavars(contract.aim):
            if mv.name not in allowed:
                report.add("fresh-aims", f"contract {i} aim mentions {mv.name}")
        for inner in contract.rules:
            for nested in inner.closure():
                clash = own & conclusion_metavariables(nested)
                if clash:
                    report.add(
                        "contract-conclusions",
                        f"contract rule {nested.name} concludes with {', '.join(sorted(clash))}",
                    )


def lint_rule(rule: InceptionRule, sig: Signature) -> LintReport:
    report = LintReport(rule.name)
    check_subformula(rule, report)
    check_sorts_shared(rule, report)
    check_linearity(rule, report)
    check_positions(rule, sig, report)
    check_principal(rule, report)
    check_substitution(rule, report)
    check_contracts(rule, report)
    return report


def lint_closure(rule: InceptionRule, sig: Signature) -> List[LintReport]:
    """Reports for the rule and every contract rule below it."""
    return [lint_rule(r, sig) for r in rule.closure()]


@dataclass
class CalculusLint:
    reports: List[LintReport] = field(default_factory=list)
    # C8: connectives lacking a matching pair of introduction rules
    missing_introductions: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.missing_introductions and all(r.ok for r in self.reports)


def lint_calculus(rules: Iterable[InceptionRule], sig: Signature) -> CalculusLint:
    rules = list(rules)
    result = CalculusLint()
    for rule in rules:
        result.reports.extend(lint_closure(rule, sig))
    names = {r.name for r in rules}
    for spec in sig.connectives:
        for side in ("L", "R"):
            if f"{spec.name}_{side}" not in names:
                result.missing_introductions.append(f"{spec.name}_{side}")
    failing = [r.rule for r in result.reports if not r.ok]
    logger.info(
        "[kernel] lint: %d rule(s), %d failing, %d missing introduction(s)",
        len(result.reports), len(failing), len(result.missing_introductions),
    )
    return result
