"""
Signed generation trees and the Skeleton / PIA node classification.

Signs propagate unchanged through the lattice connectives and flip through
antitone coordinates. Node classes:

    +  : Δ-adjoint for ∨; SLR for f ∈ F; SRA for ∧, unary g; SRR for g (n ≥ 2)
    -  : Δ-adjoint for ∧; SLR for g ∈ G; SRA for ∨, unary f; SRR for f (n ≥ 2)
"""
from dataclasses import dataclass
from typing import Iterator, List, Tuple

from dto import Family, NodeClass, Sign
from signature import Signature
from .formulas import And, Conn, Formula, Inequality, Or, VARIABLE_TYPES, children

Path = Tuple[int, ...]


@dataclass(frozen=True)
class SignedNode:
    formula: Formula
    sign: Sign
    node_class: NodeClass
    children: Tuple["SignedNode", ...]
    path: Path = ()

    @property
    def is_variable(self) -> bool:
        return isinstance(self.formula, VARIABLE_TYPES)

    def walk(self) -> Iterator["SignedNode"]:
        yield self
        for child in self.children:
            yield from child.walk()

    def at(self, path: Path) -> "SignedNode":
        node = self
        for i in path:
            node = node.children[i]
        return node


def classify(f: Formula, sign: Sign, sig: Signature) -> NodeClass:
    plus = sign is Sign.PLUS
    if isinstance(f, Or):
        return NodeClass.DELTA_ADJOINT if plus else NodeClass.SRA
    if isinstance(f, And):
        return NodeClass.SRA if plus else NodeClass.DELTA_ADJOINT
    if isinstance(f, Conn) and f.args:
        spec = sig.get(f.name)
        own_side = (spec.family is Family.F) == plus
        if own_side:
            return NodeClass.SLR
        return NodeClass.SRA if spec.arity == 1 else NodeClass.SRR
    return NodeClass.LEAF


def child_signs(f: Formula, sign: Sign, sig: Signature) -> List[Sign]:
    if isinstance(f, Conn) and f.args:
        spec = sig.get(f.name)
        return [sign.under(eps) for eps in spec.order_type]
    return [sign for _ in children(f)]


def sign_formula(f: Formula, sign: Sign, sig: Signature, path: Path = ()) -> SignedNode:
    kids = tuple(
        sign_formula(c, s, sig, path + (i,))
        for i, (c, s) in enumerate(zip(children(f), child_signs(f, sign, sig)))
    )
    return SignedNode(f, sign, classify(f, sign, sig), kids, path)


def sign_tree(ineq: Inequality, sig: Signature) -> Tuple[SignedNode, SignedNode]:
    """The positive tree of the left-hand side and the negative tree of the right-hand side."""
    return sign_formula(ineq.lhs, Sign.PLUS, sig), sign_formula(ineq.rhs, Sign.MINUS, sig)


def flip_tree(node: SignedNode, sig: Signature) -> SignedNode:
    return sign_formula(node.formula, node.sign.flip(), sig, node.path)


def branches(root: SignedNode) -> List[List[SignedNode]]:
    """Every root-to-variable-leaf path, leaves last, in left-to-right order."""
    found: List[List[SignedNode]] = []

    def descend(node: SignedNode, trail: List[SignedNode]) -> None:
        trail = trail + [node]
        if node.is_variable:
            found.append(trail)
        for child in node.children:
            descend(child, trail)

    descend(root, [])
    return found


def _segments(trail: List[SignedNode]) -> List[bool]:
    """Skeleton (True) / PIA (False) flags of the inner nodes of a branch."""
    return [n.node_class.is_skeleton for n in trail[:-1]]


def depth_of_trail(trail: List[SignedNode]) -> int:
    depth = 0
    seen_pia = False
    previous_skeleton = False
    for skeleton in _segments(trail):
        if skeleton:
            if seen_pia and not previous_skeleton:
                depth += 1
        else:
            seen_pia = True
        previous_skeleton = skeleton
    return depth


def branch_depth(root: SignedNode, leaf: Path) -> int:
    """
    Number of Skeleton segments that lie below a PIA segment on the branch to
    `leaf`. Good (Skeleton-then-PIA) branches have depth 0.
    """
    trail = [root]
    node = root
    for i in leaf:
        node = node.children[i]
        trail.append(node)
    return depth_of_trail(trail)


def is_good(trail: List[SignedNode]) -> bool:
    flags = _segments(trail)
    first_pia = next((i for i, s in enumerate(flags) if not s), len(flags))
    return all(not s for s in flags[first_pia:])


def skeleton_region(root: SignedNode) -> Iterator[SignedNode]:
    """Nodes reachable from the root through Skeleton nodes only (the Skeleton proper)."""
    if not root.node_class.is_skeleton:
        return
    yield root
    for child in root.children:
        yield from skeleton_region(child)


def is_definite(ineq: Inequality, sig: Signature) -> bool:
    return not any(
        node.node_class is NodeClass.DELTA_ADJOINT
        for tree in sign_tree(ineq, sig)
        for node in skeleton_region(tree)
    )
