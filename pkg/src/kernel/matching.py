"""
Syntactic matching of rule schemas against concrete sequents, and
instantiation of schemas under a substitution.

Matching never displays: a structure only matches a schema that has the same
shape, which keeps the most general match unique.
"""
import logging
from typing import Optional

from errors import InstantiationError, MatchError
from syntax import (
    And, Atom, Conn, Formula, FormulaMeta, Or, children, map_leaves, print_formula,
)
from .rules import (
    InceptionRule, Obligation, ParamAllocator, RuleInstance, Substitution, scope_of,
)
from .structures import (
    FormulaLeaf, MetaVar, Param, Sequent, Structure, StructConn, intrinsic_sort, print_structure,
)

logger = logging.getLogger(__name__)


def _match_formula(pattern: Formula, target: Formula, sigma: Substitution) -> bool:
    if isinstance(pattern, FormulaMeta):
        bound = sigma.get(pattern.name)
        if bound is not None:
            return bound == target
        if pattern.atoms_only and not isinstance(target, Atom):
            return False
        sigma[pattern.name] = target
        return True
    if type(pattern) is not type(target):
        return False
    if isinstance(pattern, Conn) and (pattern.name != target.name or len(pattern.args) != len(target.args)):
        return False
    if isinstance(pattern, (And, Or, Conn)):
        return all(_match_formula(p, t, sigma) for p, t in zip(children(pattern), children(target)))
    return pattern == target


def _match_structure(pattern: Structure, target: Structure, sigma: Substitution) -> bool:
    if isinstance(pattern, MetaVar):
        bound = sigma.get(pattern.name)
        if bound is not None:
            return bound == target
        actual = intrinsic_sort(target)
        if actual is not None and actual is not pattern.sort:
            return False
        sigma[pattern.name] = target
        return True
    if isinstance(pattern, FormulaLeaf):
        return isinstance(target, FormulaLeaf) and _match_formula(pattern.formula, target.formula, sigma)
    if isinstance(pattern, StructConn):
        return (
            isinstance(target, StructConn)
            and pattern.name == target.name
            and pattern.family is target.family
            and len(pattern.args) == len(target.args)
            and all(_match_structure(p, t, sigma) for p, t in zip(pattern.args, target.args))
        )
    return pattern == target


def match_sequent(pattern: Sequent, target: Sequent, sigma: Optional[Substitution] = None) -> Optional[Substitution]:
    """Extend `sigma` so that `pattern` instantiates to `target`, or None."""
    extended = dict(sigma or {})
    if _match_structure(pattern.ante, target.ante, extended) and _match_structure(pattern.succ, target.succ, extended):
        return extended
    return None


def match_conclusion(rule: InceptionRule, seq: Sequent, sigma: Optional[Substitution] = None) -> Optional[Substitution]:
    return match_sequent(rule.conclusion, seq, sigma)


def instantiate_formula(pattern: Formula, sigma: Substitution) -> Formula:
    def leaf(f: Formula) -> Formula:
        if isinstance(f, FormulaMeta):
            if f.name not in sigma:
                raise InstantiationError(f"No binding for formula metavariable {f.name}")
            return sigma[f.name]
        return f

    return map_leaves(pattern, leaf)


def instantiate_structure(pattern: Structure, sigma: Substitution) -> Structure:
    if isinstance(pattern, MetaVar):
        if pattern.name not in sigma:
            raise InstantiationError(f"No binding for metavariable {pattern.name}")
        return sigma[pattern.name]
    if isinstance(pattern, FormulaLeaf):
        return FormulaLeaf(instantiate_formula(pattern.formula, sigma))
    if isinstance(pattern, StructConn):
        return StructConn(pattern.name, pattern.family, tuple(instantiate_structure(a, sigma) for a in pattern.args))
    return pattern


def instantiate_sequent(pattern: Sequent, sigma: Substitution) -> Sequent:
    return Sequent(instantiate_structure(pattern.ante, sigma), instantiate_structure(pattern.succ, sigma))


def describe_binding(value) -> str:
    if isinstance(value, (FormulaLeaf, StructConn, Param, MetaVar)):
        return print_structure(value)
    return print_formula(value)


def instantiate(
    rule: InceptionRule,
    sigma: Substitution,
    allocator: Optional[ParamAllocator] = None,
    origin: str = "root",
    inherited_origins: Optional[dict] = None,
) -> RuleInstance:
    """
    Expected premises and contract obligations of `rule` under `sigma`.

    Uninstantiable contract variables already bound in `sigma` must be
    parameters not used elsewhere; unbound ones get fresh parameters.
    """
    allocator = allocator or ParamAllocator()
    premises = [instantiate_sequent(p, sigma) for p in rule.premises]
    obligations = []
    for contract in rule.contracts:
        local = dict(sigma)
        allocated = {}
        for var in contract.uninstantiable:
            value = local.get(var.name)
            if value is None:
                value = allocator.fresh(var.name, var.sort)
                logger.debug("[kernel] %s: allocated #%s for %s", rule.name, value.ident, var.name)
            elif not isinstance(value, Param):
                raise InstantiationError(
                    f"Uninstantiable variable {var.name} of {rule.name} instantiated with {describe_binding(value)}"
                )
            elif value.sort is not var.sort:
                raise InstantiationError(f"Parameter #{value.ident} has the wrong sort for {var.name}")
            else:
                allocator.claim(value)
            local[var.name] = value
            allocated[var.name] = value
        origins = {name: (inherited_origins or {}).get(name, origin) for name in local}
        obligations.append(Obligation(
            contract=contract,
            aim=instantiate_sequent(contract.aim, local),
            scope=scope_of(contract.rules, local, origins),
            params=allocated,
        ))
    return RuleInstance(rule=rule, substitution=dict(sigma), premises=premises, obligations=obligations)


def require_match(rule: InceptionRule, seq: Sequent, sigma: Optional[Substitution] = None) -> Substitution:
    found = match_conclusion(rule, seq, sigma)
    if found is None:
        raise MatchError(f"{rule.name} does not conclude {print_structure(seq.ante)} |- {print_structure(seq.succ)}")
    return found
