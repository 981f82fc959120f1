"""
The base display calculus of a closed signature: identity, cut, lattice
rules, introduction rules for every connective of the residual closure and
the display postulates.
"""
import logging
from typing import Dict, List, Tuple

from dto import Family, Polarity, RuleKind, Sort
from errors import KernelError
from signature import ConnectiveSpec, Signature
from syntax import And, Bot, Conn, FormulaMeta, Or, Top
from .display import postulate_name
from .rules import InceptionRule
from .structures import FormulaLeaf, MetaVar, Sequent, StructConn

logger = logging.getLogger(__name__)

ID = "Id"
CUT = "Cut"


def _leaf(name: str, atoms_only: bool = False) -> FormulaLeaf:
    return FormulaLeaf(FormulaMeta(name, atoms_only))


def _rule(name, premises, conclusion, kind) -> InceptionRule:
    return InceptionRule(name=name, premises=tuple(premises), contracts=(), conclusion=conclusion, kind=kind)


def _arg_sort(spec: ConnectiveSpec, k: int) -> Sort:
    base = Sort.of(spec.family)
    return base if spec.polarity(k) is Polarity.ONE else base.flip()


def identity_and_cut() -> List[InceptionRule]:
    p = _leaf("P", atoms_only=True)
    x, y, a = MetaVar("X", Sort.F), MetaVar("Y", Sort.G), _leaf("A")
    return [
        _rule(ID, [], Sequent(p, p), RuleKind.IDENTITY),
        _rule(CUT, [Sequent(x, a), Sequent(a, y)], Sequent(x, y), RuleKind.CUT),
    ]


def lattice_rules() -> List[InceptionRule]:
    a, b = FormulaMeta("A"), FormulaMeta("B")
    x, y = MetaVar("X", Sort.F), MetaVar("Y", Sort.G)
    la, lb = FormulaLeaf(a), FormulaLeaf(b)
    conj, disj = FormulaLeaf(And(a, b)), FormulaLeaf(Or(a, b))
    k = RuleKind.LOGICAL
    return [
        _rule("and_L1", [Sequent(la, y)], Sequent(conj, y), k),
        _rule("and_L2", [Sequent(lb, y)], Sequent(conj, y), k),
        _rule("and_R", [Sequent(x, la), Sequent(x, lb)], Sequent(x, conj), k),
        _rule("or_L", [Sequent(la, y), Sequent(lb, y)], Sequent(disj, y), k),
        _rule("or_R1", [Sequent(x, la)], Sequent(x, disj), k),
        _rule("or_R2", [Sequent(x, lb)], Sequent(x, disj), k),
        _rule("top_R", [], Sequent(x, FormulaLeaf(Top())), k),
        _rule("bot_L", [], Sequent(FormulaLeaf(Bot()), y), k),
    ]


def connective_rules(spec: ConnectiveSpec) -> List[InceptionRule]:
    """Left and right introduction of one connective; 0-ary ones reduce to axioms."""
    n = spec.arity
    formulas = tuple(FormulaMeta(f"A{i}") for i in range(1, n + 1))
    metas = tuple(MetaVar(f"X{i}", _arg_sort(spec, i)) for i in range(1, n + 1))
    principal = FormulaLeaf(Conn(spec.name, formulas))
    proxy_formulas = StructConn(spec.name, spec.family, tuple(FormulaLeaf(a) for a in formulas))
    proxy = StructConn(spec.name, spec.family, metas)
    k = RuleKind.LOGICAL

    def premise(i: int) -> Sequent:
        leaf = FormulaLeaf(formulas[i])
        monotone = spec.polarity(i + 1) is Polarity.ONE
        if spec.family is Family.F:
            return Sequent(metas[i], leaf) if monotone else Sequent(leaf, metas[i])
        return Sequent(leaf, metas[i]) if monotone else Sequent(metas[i], leaf)

    if spec.family is Family.F:
        ctx = MetaVar("W", Sort.G)
        return [
            _rule(f"{spec.name}_L", [Sequent(proxy_formulas, ctx)], Sequent(principal, ctx), k),
            _rule(f"{spec.name}_R", [premise(i) for i in range(n)], Sequent(proxy, principal), k),
        ]
    ctx = MetaVar("W", Sort.F)
    return [
        _rule(f"{spec.name}_R", [Sequent(ctx, proxy_formulas)], Sequent(ctx, principal), k),
        _rule(f"{spec.name}_L", [premise(i) for i in range(n)], Sequent(principal, proxy), k),
    ]


def display_postulates(spec: ConnectiveSpec, sig: Signature) -> List[InceptionRule]:
    rules = []
    metas = [MetaVar(f"X{i}", _arg_sort(spec, i)) for i in range(1, spec.arity + 1)]
    for k in range(1, spec.arity + 1):
        residual = sig.get(sig.residual(spec.name, k))
        if spec.family is Family.F:
            ctx = MetaVar("W", Sort.G)
            premise = Sequent(StructConn(spec.name, spec.family, tuple(metas)), ctx)
        else:
            ctx = MetaVar("W", Sort.F)
            premise = Sequent(ctx, StructConn(spec.name, spec.family, tuple(metas)))
        args = list(metas)
        args[k - 1] = ctx
        moved = StructConn(residual.name, residual.family, tuple(args))
        child = metas[k - 1]
        conclusion = Sequent(child, moved) if child.sort is Sort.F else Sequent(moved, child)
        rules.append(_rule(postulate_name(spec.name, k), [premise], conclusion, RuleKind.DISPLAY))
    return rules


def base_rules(sig: Signature) -> Tuple[InceptionRule, ...]:
    if not sig.closed:
        raise KernelError(f"Signature '{sig.name}' must be closed under residuals")
    rules = identity_and_cut() + lattice_rules()
    for spec in sig.connectives:
        rules += connective_rules(spec)
    for spec in sig.connectives:
        rules += display_postulates(spec, sig)
    logger.info("[kernel] base calculus for '%s': %d rules", sig.name, len(rules))
    return tuple(rules)


def rule_table(rules) -> Dict[str, InceptionRule]:
    table: Dict[str, InceptionRule] = {}
    for rule in rules:
        if rule.name in table:
            raise KernelError(f"Duplicate rule name '{rule.name}'")
        table[rule.name] = rule
    return table


def is_left_principal(rule: InceptionRule) -> bool:
    """True when the rule introduces a formula as its whole succedent."""
    return isinstance(rule.conclusion.succ, FormulaLeaf)


def is_right_principal(rule: InceptionRule) -> bool:
    return isinstance(rule.conclusion.ante, FormulaLeaf)
