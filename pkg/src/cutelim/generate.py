"""Derivations with inserted cuts, for the cut-elimination property corpus."""
import logging
from typing import List, Sequence

import numpy as np

from checker import Calculus, Derivation, node_at, replace_node, walk
from dto import Family
from errors import CutEliminationError
from kernel import CUT, ID, FormulaLeaf, Sequent, StructConn
from signature import Signature
from syntax import And, Atom, Bot, Conn, Formula, Or, Top, print_formula
from .witness import cut

logger = logging.getLogger(__name__)


def idexp(formula: Formula, sig: Signature) -> Derivation:
    """Cut-free derivation of A |- A from identities on atoms."""
    leaf = FormulaLeaf(formula)
    goal = Sequent(leaf, leaf)
    if isinstance(formula, Atom):
        return Derivation(ID, goal)
    if isinstance(formula, Top):
        return Derivation("top_R", goal)
    if isinstance(formula, Bot):
        return Derivation("bot_L", goal)
    if isinstance(formula, And):
        a, b = FormulaLeaf(formula.left), FormulaLeaf(formula.right)
        left = Derivation("and_L1", Sequent(leaf, a), (idexp(formula.left, sig),))
        right = Derivation("and_L2", Sequent(leaf, b), (idexp(formula.right, sig),))
        return Derivation("and_R", goal, (left, right))
    if isinstance(formula, Or):
        a, b = FormulaLeaf(formula.left), FormulaLeaf(formula.right)
        left = Derivation("or_R1", Sequent(a, leaf), (idexp(formula.left, sig),))
        right = Derivation("or_R2", Sequent(b, leaf), (idexp(formula.right, sig),))
        return Derivation("or_L", goal, (left, right))
    if isinstance(formula, Conn):
        spec = sig.get(formula.name)
        args = tuple(idexp(a, sig) for a in formula.args)
        proxy = StructConn(spec.name, spec.family, tuple(FormulaLeaf(a) for a in formula.args))
        if spec.family is Family.F:
            inner = Derivation(f"{spec.name}_R", Sequent(proxy, leaf), args)
            return Derivation(f"{spec.name}_L", goal, (inner,))
        inner = Derivation(f"{spec.name}_L", Sequent(leaf, proxy), args)
        return Derivation(f"{spec.name}_R", goal, (inner,))
    raise CutEliminationError(f"no identity expansion for {print_formula(formula)}")


def cut_sites(d: Derivation) -> List[str]:
    """Paths of non-cut nodes with a side that is a single formula."""
    return [
        path for path, node, _ in walk(d)
        if node.rule != CUT
        and (isinstance(node.conclusion.succ, FormulaLeaf) or isinstance(node.conclusion.ante, FormulaLeaf))
    ]


def insert_random_cut(d: Derivation, calculus: Calculus, rng: np.random.Generator) -> Derivation:
    """
    Cut one randomly chosen node against the identity expansion of one of its
    formula sides; the endsequent is unchanged.
    """
    sites = cut_sites(d)
    if not sites:
        raise CutEliminationError("no node with a formula side to cut on")
    path = sites[int(rng.integers(len(sites)))]
    node = node_at(d, path)
    sides = [side for side in (0, 1) if isinstance(node.conclusion.side(side), FormulaLeaf)]
    side = sides[int(rng.integers(len(sides)))]
    formula = node.conclusion.side(side).formula
    expansion = idexp(formula, calculus.signature)
    joined = cut(node, expansion) if side == 1 else cut(expansion, node)
    logger.debug("[cutelim] inserted a cut on %s at %s", print_formula(formula), path)
    return replace_node(d, path, joined)


def generate_cut_corpus(
    derivations: Sequence[Derivation],
    calculus: Calculus,
    count: int,
    seed: int,
    max_cuts: int = 2,
) -> List[Derivation]:
    """
    `count` derivations with between one and `max_cuts` inserted cuts, cycling
    over `derivations`. Item i depends only on (seed, i).
    """
    if not derivations:
        return []
    corpus = []
    for i in range(count):
        rng = np.random.default_rng([seed, i])
        d = derivations[i % len(derivations)]
        for _ in range(int(rng.integers(1, max_cuts + 1))):
            d = insert_random_cut(d, calculus, rng)
        corpus.append(d)
    logger.info("[cutelim] generated %d derivation(s) with cuts (seed %d)", len(corpus), seed)
    return corpus
