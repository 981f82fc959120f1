"""
Principal reductions: both cut premises end with the introduction of the cut
formula, so the cut is replaced by cuts on its immediate subformulas.
"""
import logging
from typing import List, Tuple

from checker import Calculus, Derivation
from dto import Family
from errors import CutEliminationError, DisplayError
from kernel import FormulaLeaf, display, print_sequent, undisplay
from syntax import And, Conn, Formula, Or, print_formula
from .measure import CutMeasure, cut_measure
from .witness import chain, cut

logger = logging.getLogger(__name__)

_LATTICE = {
    ("and_R", "and_L1"): (0, 0),
    ("and_R", "and_L2"): (1, 0),
    ("or_R1", "or_L"): (0, 0),
    ("or_R2", "or_L"): (0, 1),
}


def _through_coordinates(
    tau: Derivation, side: int, parts: List[Derivation], calculus: Calculus
) -> Tuple[Derivation, List[Tuple[Derivation, Formula]]]:
    """
    Cut each argument of the structural connective heading `side` of `tau`
    against the matching part: display it, cut, undisplay.
    """
    sig = calculus.signature
    current = tau
    pairs = []
    for i, part in enumerate(parts):
        try:
            shown, steps = display(current.conclusion, (side, (i,)), sig)
        except DisplayError as e:
            raise CutEliminationError(str(e)) from e
        shown_node = chain(current, steps)
        if isinstance(shown.ante, FormulaLeaf) and part.conclusion.succ == shown.ante:
            joined = cut(part, shown_node)
            pairs.append((part, shown.ante.formula))
        elif isinstance(shown.succ, FormulaLeaf) and part.conclusion.ante == shown.succ:
            joined = cut(shown_node, part)
            pairs.append((part, shown.succ.formula))
        else:
            raise CutEliminationError(
                f"premise {print_sequent(part.conclusion)} does not fit {print_sequent(shown)}"
            )
        _, back = undisplay(joined.conclusion, steps, sig)
        current = chain(joined, back)
    return current, pairs


def reduce_principal(node: Derivation, calculus: Calculus) -> Tuple[Derivation, List[CutMeasure]]:
    """
    Replace a cut whose premises both introduce the cut formula. Returns the
    new subderivation and the measures of the cuts it creates, each taken
    against the two subderivations the new cut combines.
    """
    left, right = node.premises
    formula = left.conclusion.succ.formula if isinstance(left.conclusion.succ, FormulaLeaf) else None
    if formula is None or right.conclusion.ante != left.conclusion.succ:
        raise CutEliminationError(f"{node.rule} node is not a cut on a formula")
    key = (left.rule, right.rule)
    depth_of = calculus.depth_of
    if isinstance(formula, (And, Or)):
        if key not in _LATTICE:
            raise CutEliminationError(f"{left.rule} / {right.rule} are not matching introductions of {print_formula(formula)}")
        i, j = _LATTICE[key]
        a, b = left.premises[i], right.premises[j]
        result = cut(a, b)
        measures = [cut_measure(a, b, a.conclusion.succ.formula, depth_of)]
    elif isinstance(formula, Conn):
        spec = calculus.signature.get(formula.name)
        if key != (f"{formula.name}_R", f"{formula.name}_L"):
            raise CutEliminationError(f"{left.rule} / {right.rule} are not matching introductions of {print_formula(formula)}")
        if spec.family is Family.F:
            tau, parts, side = right.premises[0], list(left.premises), 0
        else:
            tau, parts, side = left.premises[0], list(right.premises), 1
        result, pairs = _through_coordinates(tau, side, parts, calculus)
        measures = [cut_measure(part, tau, sub, depth_of) for part, sub in pairs]
    else:
        raise CutEliminationError(f"no principal reduction for {print_formula(formula)}")
    if result.conclusion != node.conclusion:
        raise CutEliminationError(
            f"principal reduction concluded {print_sequent(result.conclusion)}, not {print_sequent(node.conclusion)}"
        )
    logger.debug("[cutelim] principal reduction on %s: %d new cut(s)", print_formula(formula), len(measures))
    return result, measures
