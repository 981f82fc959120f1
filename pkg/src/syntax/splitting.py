"""
Splitting inequalities along the Δ-adjoints of their Skeleton.

Skeleton operators are join-preserving in their monotone coordinates (meet
to join in antitone ones) on the positive side, and dually on the negative
side, so a Δ-adjoint below an SLR node can be pulled up to the root, where
`a | b <= c` and `a <= b & c` split into two inequalities.
"""
from typing import List, Optional, Tuple

from dto import NodeClass, Sign
from signature import Signature
from .formulas import And, Formula, Inequality, Or, children, replace_at
from .signed import SignedNode, sign_tree, skeleton_region


def split_root(ineq: Inequality) -> Optional[Tuple[Inequality, Inequality]]:
    if isinstance(ineq.lhs, Or):
        return Inequality(ineq.lhs.left, ineq.rhs), Inequality(ineq.lhs.right, ineq.rhs)
    if isinstance(ineq.rhs, And):
        return Inequality(ineq.lhs, ineq.rhs.left), Inequality(ineq.lhs, ineq.rhs.right)
    return None


def _distribute(tree: SignedNode) -> Optional[Formula]:
    """Pull the first Δ-adjoint sitting under an SLR node one level up."""
    for node in skeleton_region(tree):
        if node.node_class is not NodeClass.SLR:
            continue
        for k, child in enumerate(node.children):
            if child.node_class is not NodeClass.DELTA_ADJOINT:
                continue
            parts = children(child.formula)
            lifted = [
                replace_at(node.formula, (k,), part) for part in parts
            ]
            joined = Or(*lifted) if node.sign is Sign.PLUS else And(*lifted)
            return replace_at(tree.formula, node.path, joined)
    return None


def distribute_once(ineq: Inequality, sig: Signature) -> Optional[Inequality]:
    """One distribution step on the left side, else the right; None when neither applies."""
    lhs_tree, rhs_tree = sign_tree(ineq, sig)
    lhs = _distribute(lhs_tree)
    if lhs is not None:
        return Inequality(lhs, ineq.rhs)
    rhs = _distribute(rhs_tree)
    if rhs is not None:
        return Inequality(ineq.lhs, rhs)
    return None


def split_step(ineq: Inequality, sig: Signature) -> Optional[List[Inequality]]:
    """Root split if possible, else one distribution; None at the fixpoint."""
    halves = split_root(ineq)
    if halves is not None:
        return list(halves)
    moved = distribute_once(ineq, sig)
    return None if moved is None else [moved]


def split_definite(ineq: Inequality, sig: Signature) -> List[Inequality]:
    """
    Equivalent list of definite inequalities, obtained by exhaustive
    distribution and root splitting. The order of the parts follows the
    left-to-right order of the disjuncts / conjuncts.
    """
    done: List[Inequality] = []
    pending = [ineq]
    while pending:
        current = pending.pop(0)
        step = split_step(current, sig)
        if step is None:
            done.append(current)
        else:
            pending = step + pending
    return done
