"""
(Ω, ε)-inductive inequalities and the certificate search.

A branch ending in a variable leaf +p (ε(p) = 1) or -p (ε(p) = ∂) is
ε-critical. An inequality is inductive when every critical branch is good and,
at every SRR node on it, each sibling subtree contains only non-critical
leaves whose variables are Ω-below the critical variable.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Set, Tuple

from dto import NodeClass, Polarity, Sign
from signature import Signature
from .formulas import Inequality, inequality_atoms
from .signed import (
    SignedNode,
    branches,
    depth_of_trail,
    is_definite,
    is_good,
    sign_tree,
)

logger = logging.getLogger(__name__)

Epsilon = Dict[str, Polarity]
Omega = Set[Tuple[str, str]]


@dataclass(frozen=True)
class BranchDepth:
    side: str
    path: Tuple[int, ...]
    variable: str
    depth: int


@dataclass(frozen=True)
class InductiveCertificate:
    epsilon: Tuple[Tuple[str, Polarity], ...]
    omega: Tuple[Tuple[str, str], ...]
    per_branch: Tuple[BranchDepth, ...]
    depth: int
    analytic: bool
    definite: bool

    def eps(self, variable: str) -> Polarity:
        return dict(self.epsilon)[variable]

    def elimination_order(self, variables: Iterable[str]) -> List[str]:
        """Linear extension of Ω; among minimal candidates the first in `variables` goes first."""
        pending = list(variables)
        below = {v: {a for a, b in self.omega if b == v and a in pending} for v in pending}
        order: List[str] = []
        while pending:
            ready = next(v for v in pending if not below[v] - set(order))
            order.append(ready)
            pending.remove(ready)
        return order


def is_critical(leaf: SignedNode, epsilon: Epsilon) -> bool:
    eps = epsilon.get(leaf.formula.name)
    if eps is None:
        return False
    return (leaf.sign is Sign.PLUS) == (eps is Polarity.ONE)


def _leaf_variables(node: SignedNode) -> List[SignedNode]:
    return [n for n in node.walk() if n.is_variable]


def required_order(
    trees: Tuple[SignedNode, SignedNode], epsilon: Epsilon
) -> Optional[Omega]:
    """
    Ω-edges the SRR side conditions demand under `epsilon`, or None when some
    critical branch is not good or an SRR sibling contains a critical leaf.
    """
    edges: Omega = set()
    for tree in trees:
        for trail in branches(tree):
            leaf = trail[-1]
            if not is_critical(leaf, epsilon):
                continue
            if not is_good(trail):
                return None
            critical_var = leaf.formula.name
            for node, nxt in zip(trail, trail[1:]):
                if node.node_class is not NodeClass.SRR:
                    continue
                on_branch = nxt.path[-1]
                for i, sibling in enumerate(node.children):
                    if i == on_branch:
                        continue
                    for other in _leaf_variables(sibling):
                        if is_critical(other, epsilon):
                            return None
                        edges.add((other.formula.name, critical_var))
    return edges


def transitive_closure(edges: Omega) -> Omega:
    closure = set(edges)
    while True:
        extra = {(a, d) for a, b in closure for c, d in closure if b == c} - closure
        if not extra:
            return closure
        closure |= extra


def _is_strict_order(omega: Omega) -> bool:
    return all(a != b for a, b in omega) and transitive_closure(omega) == omega


def check_inductive(ineq: Inequality, epsilon: Epsilon, omega: Omega, sig: Signature) -> bool:
    """True iff both signed trees are (Ω, ε)-inductive."""
    if not _is_strict_order(set(omega)):
        return False
    edges = required_order(sign_tree(ineq, sig), epsilon)
    return edges is not None and edges <= set(omega)


def _branch_depths(trees: Tuple[SignedNode, SignedNode]) -> List[BranchDepth]:
    depths = []
    for side, tree in zip(("lhs", "rhs"), trees):
        for trail in branches(tree):
            leaf = trail[-1]
            depths.append(BranchDepth(side, leaf.path, leaf.formula.name, depth_of_trail(trail)))
    return depths


def inequality_depth(ineq: Inequality, sig: Signature) -> int:
    return max((b.depth for b in _branch_depths(sign_tree(ineq, sig))), default=0)


def _certificate(
    ineq: Inequality, sig: Signature, epsilon: Epsilon, trees: Tuple[SignedNode, SignedNode]
) -> Optional[InductiveCertificate]:
    edges = required_order(trees, epsilon)
    if edges is None:
        return None
    omega = transitive_closure(edges)
    if any(a == b for a, b in omega):
        return None
    per_branch = _branch_depths(trees)
    depth = max((b.depth for b in per_branch), default=0)
    return InductiveCertificate(
        epsilon=tuple(epsilon.items()),
        omega=tuple(sorted(omega)),
        per_branch=tuple(per_branch),
        depth=depth,
        analytic=depth == 0,
        definite=is_definite(ineq, sig),
    )


def certificate_for(ineq: Inequality, epsilon: Epsilon, sig: Signature) -> Optional[InductiveCertificate]:
    """The certificate for a fixed ε, or None when no Ω makes the inequality (Ω, ε)-inductive."""
    missing = set(inequality_atoms(ineq)) - set(epsilon)
    if missing:
        raise ValueError(f"epsilon leaves {', '.join(sorted(missing))} unassigned")
    ordered = {name: epsilon[name] for name in inequality_atoms(ineq)}
    return _certificate(ineq, sig, ordered, sign_tree(ineq, sig))


def find_inductive_certificate(ineq: Inequality, sig: Signature) -> Optional[InductiveCertificate]:
    """
    Enumerate ε in binary order (1 before ∂, variables in first-occurrence
    order, the first variable most significant) and return the first ε whose
    minimal Ω is a strict order.
    """
    trees = sign_tree(ineq, sig)
    names = inequality_atoms(ineq)
    for choice in itertools.product((Polarity.ONE, Polarity.DUAL), repeat=len(names)):
        cert = _certificate(ineq, sig, dict(zip(names, choice)), trees)
        if cert is None:
            continue
        logger.info(
            "[syntax] inductive: epsilon=%s omega=%s depth=%d",
            {k: v.value for k, v in cert.epsilon}, list(cert.omega), cert.depth,
        )
        return cert
    logger.info("[syntax] no (omega, epsilon) makes the inequality inductive")
    return None
