"""
Unraveling to polarity-safe shape.

An inequality is safe when both signed trees consist of Skeleton nodes only
and every nominal occurs positively, every conominal negatively. An unsafe
inequality is first split along Skeleton Δ-adjoints; otherwise each
offending side is cut at its PIA roots and variable leaves, and the
inequality is replaced by a nested clause quantifying the new variables.
"""
import logging
from dataclasses import replace
from typing import List, Optional, Tuple

from dto import AlbaStep, NodeClass, Sign
from signature import Signature
from syntax import (
    Conominal, Formula, Inequality, Nominal, SignedNode, print_inequality, sign_tree, skeleton_region,
    split_step,
)
from .approximation import cut_spine
from .clause import Clause
from .state import AlbaState

logger = logging.getLogger(__name__)


def side_offends(tree: SignedNode) -> bool:
    for node in tree.walk():
        if node.children and not node.node_class.is_skeleton:
            return True
        if isinstance(node.formula, Nominal) and node.sign is Sign.MINUS:
            return True
        if isinstance(node.formula, Conominal) and node.sign is Sign.PLUS:
            return True
    return False


def inequality_safe(ineq: Inequality, sig: Signature) -> bool:
    return not any(side_offends(tree) for tree in sign_tree(ineq, sig))


def is_polarity_safe(clause: Clause, sig: Signature) -> bool:
    """Every inequality is a Skeleton inequality with nominals positive and conominals negative."""
    return all(inequality_safe(i, sig) for i in clause.inequalities())


def _has_skeleton_delta(ineq: Inequality, sig: Signature) -> bool:
    return any(
        node.node_class is NodeClass.DELTA_ADJOINT
        for tree in sign_tree(ineq, sig)
        for node in skeleton_region(tree)
    )


def nest(ineq: Inequality, level: int, state: AlbaState, sig: Signature) -> Clause:
    """Clause equivalent to `ineq` whose offending sides are cut behind fresh variables."""
    cuts: List[Inequality] = []
    fresh: List[Formula] = []
    lhs_tree, rhs_tree = sign_tree(ineq, sig)
    lhs = cut_spine(lhs_tree, state, cuts, fresh, level) if side_offends(lhs_tree) else ineq.lhs
    rhs = cut_spine(rhs_tree, state, cuts, fresh, level) if side_offends(rhs_tree) else ineq.rhs
    return Clause(
        nominals=tuple(v.name for v in fresh if isinstance(v, Nominal)),
        conominals=tuple(v.name for v in fresh if isinstance(v, Conominal)),
        antecedent_ineqs=tuple(cuts),
        antecedent_clauses=(),
        consequent=Inequality(lhs, rhs),
    )


_Block = Tuple[List[Inequality], List[Clause], str]


def _unravel_block(
    ineqs: List[Inequality], clauses: List[Clause], level: int, state: AlbaState, sig: Signature
) -> Optional[_Block]:
    for idx, ineq in enumerate(ineqs):
        needs_split = _has_skeleton_delta(ineq, sig)
        if inequality_safe(ineq, sig) and not needs_split:
            continue
        rest = ineqs[:idx] + ineqs[idx + 1:]
        if needs_split:
            parts = split_step(ineq, sig) or [ineq]
            return ineqs[:idx] + parts + ineqs[idx + 1:], clauses, f"split {print_inequality(ineq)}"
        nested = nest(ineq, level + 1, state, sig)
        return rest, clauses + [nested], f"nested {print_inequality(ineq)} at depth {level + 1}"
    for ci, sub in enumerate(clauses):
        found = _unravel_block(list(sub.antecedent_ineqs), list(sub.antecedent_clauses), level + 1, state, sig)
        if found is not None:
            new_ineqs, new_clauses, detail = found
            updated = replace(sub, antecedent_ineqs=tuple(new_ineqs), antecedent_clauses=tuple(new_clauses))
            return ineqs, clauses[:ci] + [updated] + clauses[ci + 1:], detail
    return None


def unravel_once(state: AlbaState, sig: Signature) -> bool:
    found = _unravel_block(state.inequalities, state.clauses, 0, state, sig)
    if found is None:
        return False
    state.inequalities, state.clauses, detail = found
    state.record(AlbaStep.UNRAVEL, detail)
    return True


def unravel_step(state: AlbaState, sig: Signature) -> AlbaState:
    """Rewrite the outermost, leftmost unsafe antecedent; a safe state is returned unchanged."""
    unravel_once(state, sig)
    return state
