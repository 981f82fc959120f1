"""
Substituting structures for congruent formula occurrences in rule applications.

An application is a rule together with the bindings it was applied under.
Replacing the occurrences of a formula A addressed in the conclusion by a
structure Y rebinds the metavariables those occurrences instantiate; the
premises, the contract aims and the contract rules then follow the new
bindings. Contract rules keep their own variables and the uninstantiable
ones, so `applied_rule` returns them as schemas.
"""
import logging
from typing import Dict, Iterable, List, Optional, Tuple

from errors import CutEliminationError, KernelError
from kernel import (
    Contract, FormulaLeaf, InceptionRule, MetaVar, Position, Sequent, Structure, StructConn, Substitution,
    instantiate_sequent, intrinsic_sort, position_sort, print_structure, replace_sub,
)
from signature import Signature
from syntax import FormulaMeta, map_leaves

logger = logging.getLogger(__name__)


def metavar_prefix(schema: Structure, path: Tuple[int, ...]) -> Optional[Tuple[MetaVar, Tuple[int, ...]]]:
    """
    Metavariable of `schema` whose instance contains `path`, with the path
    inside that instance; None when `path` addresses a formula of the schema.
    """
    s = schema
    for i, k in enumerate(path):
        if isinstance(s, MetaVar):
            return s, path[i:]
        if not isinstance(s, StructConn) or k >= len(s.args):
            raise CutEliminationError(f"path {list(path)} leaves the schema {print_structure(schema)}")
        s = s.args[k]
    if isinstance(s, MetaVar):
        return s, ()
    if isinstance(s, FormulaLeaf):
        return None
    raise CutEliminationError(f"path {list(path)} addresses a structural connective of {print_structure(schema)}")


def substituted_bindings(
    rule: InceptionRule, sigma: Substitution, positions: Iterable[Position], replacement: Structure
) -> Substitution:
    """Bindings under which `rule` concludes its old conclusion with `replacement` at `positions`."""
    updated = dict(sigma)
    for side, path in positions:
        found = metavar_prefix(rule.conclusion.side(side), path)
        if found is None:
            raise CutEliminationError(f"{rule.name} introduces the formula at {side}:{list(path)}; it is not a parameter")
        var, rest = found
        if var.name not in updated:
            raise CutEliminationError(f"{rule.name}: metavariable {var.name} is unbound")
        updated[var.name] = replace_sub(updated[var.name], rest, replacement)
    return updated


# ────────────────────────────────────────────────────────────────────────────
# Applied rules
# ────────────────────────────────────────────────────────────────────────────

def _partial_structure(s: Structure, sigma: Substitution) -> Structure:
    if isinstance(s, MetaVar):
        return sigma.get(s.name, s)
    if isinstance(s, FormulaLeaf):
        return FormulaLeaf(map_leaves(
            s.formula, lambda f: sigma.get(f.name, f) if isinstance(f, FormulaMeta) else f
        ))
    if isinstance(s, StructConn):
        return StructConn(s.name, s.family, tuple(_partial_structure(a, sigma) for a in s.args))
    return s


def _partial(seq: Sequent, sigma: Substitution) -> Sequent:
    return Sequent(_partial_structure(seq.ante, sigma), _partial_structure(seq.succ, sigma))


def _uninstantiable(rule: InceptionRule) -> set:
    return {v.name for r in rule.closure() for c in r.contracts for v in c.uninstantiable}


def applied_rule(rule: InceptionRule, sigma: Substitution, suffix: str = "") -> InceptionRule:
    """`rule` with its bound metavariables replaced, contract rules at any depth included."""
    kept = _uninstantiable(rule)
    bound = {name: value for name, value in sigma.items() if name not in kept}

    def go(r: InceptionRule) -> InceptionRule:
        contracts = tuple(
            Contract(aim=_partial(c.aim, bound), rules=tuple(go(inner) for inner in c.rules), uninstantiable=c.uninstantiable)
            for c in r.contracts
        )
        return InceptionRule(
            name=f"{r.name}{suffix}",
            premises=tuple(_partial(p, bound) for p in r.premises),
            contracts=contracts,
            conclusion=_partial(r.conclusion, bound),
            kind=r.kind,
        )

    return go(rule)


def substitute_application(
    rule: InceptionRule,
    sigma: Substitution,
    positions: List[Position],
    replacement: Structure,
    sig: Signature,
) -> InceptionRule:
    """
    The application of `rule` under `sigma` with `replacement` substituted for
    the formula occurrences at `positions` of its conclusion, and for every
    occurrence congruent to them in premises, aims and contract rules.
    """
    try:
        conclusion = instantiate_sequent(rule.conclusion, sigma)
    except KernelError as e:
        raise CutEliminationError(f"{rule.name}: {e}") from e
    wanted = intrinsic_sort(replacement)
    for pos in positions:
        actual = position_sort(conclusion, pos, sig)
        if wanted is not None and wanted is not actual:
            raise CutEliminationError(
                f"{print_structure(replacement)} has sort {wanted.value} but position {pos[0]}:{list(pos[1])} "
                f"of {rule.name} wants {actual.value}"
            )
    updated = substituted_bindings(rule, sigma, positions, replacement)
    logger.debug("[cutelim] %s: substituted %s at %d position(s)", rule.name, print_structure(replacement), len(positions))
    return applied_rule(rule, updated, suffix=f"[{print_structure(replacement)}]")


def contract_conclusions(rule: InceptionRule) -> Dict[str, Sequent]:
    """Conclusions of the contract rules at any depth, keyed by rule name without substitution suffix."""
    found: Dict[str, Sequent] = {}
    for r in list(rule.closure())[1:]:
        found[r.name.split("[", 1)[0]] = r.conclusion
    return found
