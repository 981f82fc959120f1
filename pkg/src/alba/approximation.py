import logging
from typing import List

from dto import AlbaStep, Sign
from errors import AlbaError, NotInductiveError
from signature import Signature
from syntax import (
    Conominal, Formula, Inequality, InductiveCertificate, Nominal, SignedNode, inequality_atoms,
    is_definite, print_inequality, rebuild, sign_tree,
)
from .state import AlbaState

logger = logging.getLogger(__name__)


def cut_spine(
    node: SignedNode, state: AlbaState, cuts: List[Inequality], fresh: List[Formula], level: int = 0
) -> Formula:
    """
    Copy the Skeleton spine of `node`, replacing every maximal PIA subtree and
    every variable leaf by a fresh nominal (positive position, `v <= sub`) or
    conominal (negative position, `sub <= v`). Constants stay in place.

    The new variables are appended to `fresh` in allocation order. A cut leaf
    may itself be a nominal or conominal bound further out, so callers
    quantify `fresh` and never the sides of `cuts`.
    """
    if node.node_class.is_skeleton:
        return rebuild(node.formula, tuple(cut_spine(c, state, cuts, fresh, level) for c in node.children))
    if not node.node_class.is_pia and not node.is_variable:
        return node.formula
    if node.sign is Sign.PLUS:
        var: Formula = Nominal(state.fresh("i", level))
        cuts.append(Inequality(var, node.formula))
    else:
        var = Conominal(state.fresh("m", level))
        cuts.append(Inequality(node.formula, var))
    fresh.append(var)
    return var


def first_approximation(ineq: Inequality, cert: InductiveCertificate, sig: Signature) -> AlbaState:
    """
    Introduce nominals below the positive lhs and conominals above the
    negative rhs, cutting at the PIA roots of both Skeleta; the goal becomes
    the pure Skeleton inequality between them.
    """
    if cert is None:
        raise NotInductiveError(f"{print_inequality(ineq)} is not inductive")
    if not is_definite(ineq, sig):
        raise AlbaError(f"First approximation needs a definite inequality, got {print_inequality(ineq)}")
    epsilon = dict(cert.epsilon)
    state = AlbaState(epsilon={p: epsilon[p] for p in inequality_atoms(ineq)})
    cuts: List[Inequality] = []
    fresh: List[Formula] = []
    lhs_tree, rhs_tree = sign_tree(ineq, sig)
    lhs = cut_spine(lhs_tree, state, cuts, fresh)
    rhs = cut_spine(rhs_tree, state, cuts, fresh)
    state.nominals.extend(v.name for v in fresh if isinstance(v, Nominal))
    state.conominals.extend(v.name for v in fresh if isinstance(v, Conominal))
    state.inequalities = cuts
    state.goal = Inequality(lhs, rhs)
    state.record(AlbaStep.FIRST_APPROX, f"{len(state.nominals)} nominal(s), {len(state.conominals)} conominal(s)")
    return state
