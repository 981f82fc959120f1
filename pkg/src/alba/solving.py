"""
Residuation-based solving of constraints and Ackermann elimination.

For an occurrence of p in an inequality, its sign is read off the signed
trees (+lhs, -rhs). With ε(p) = 1 the critical occurrences are the negative
ones and p is eliminated through lower bounds `t <= p`; with ε(p) = ∂ they
are the positive ones and the bounds are upper bounds `p <= t`.
"""
import logging
from typing import List, Tuple

from dto import AlbaStep, Family, Polarity, Sign
from errors import AlbaError
from signature import Signature
from syntax import (
    And, Atom, Bot, Conn, Formula, Inequality, Or, Top, big_join, big_meet, occurs, print_inequality,
    sign_tree, substitute,
)
from .state import AlbaState

logger = logging.getLogger(__name__)


def critical_sign(eps: Polarity) -> Sign:
    return Sign.MINUS if eps is Polarity.ONE else Sign.PLUS


def occurrence_signs(ineq: Inequality, p: str, sig: Signature) -> List[Sign]:
    target = Atom(p)
    return [
        node.sign
        for tree in sign_tree(ineq, sig)
        for node in tree.walk()
        if node.formula == target
    ]


def has_critical(ineq: Inequality, p: str, eps: Polarity, sig: Signature) -> bool:
    return critical_sign(eps) in occurrence_signs(ineq, p, sig)


def is_bound(ineq: Inequality, p: str, eps: Polarity) -> bool:
    """`t <= p` (ε=1) or `p <= t` (ε=∂) with p not occurring in t."""
    atom = Atom(p)
    if eps is Polarity.ONE:
        return ineq.rhs == atom and not occurs(atom, ineq.lhs)
    return ineq.lhs == atom and not occurs(atom, ineq.rhs)


def _critical_in(f: Formula, sign: Sign, p: str, eps: Polarity, sig: Signature) -> bool:
    ineq = Inequality(f, Atom("_")) if sign is Sign.PLUS else Inequality(Atom("_"), f)
    return has_critical(ineq, p, eps, sig)


def _residuate(ineq: Inequality, p: str, eps: Polarity, sig: Signature) -> Tuple[List[Inequality], List[Inequality]]:
    atom = Atom(p)
    on_left = _critical_in(ineq.lhs, Sign.PLUS, p, eps, sig)
    on_right = _critical_in(ineq.rhs, Sign.MINUS, p, eps, sig)
    if on_left and on_right:
        raise AlbaError(f"Critical occurrences of {p} on both sides of {print_inequality(ineq)}")
    if not (on_left or on_right):
        return [], [ineq]
    if is_bound(ineq, p, eps):
        return [ineq], []
    term, other = (ineq.lhs, ineq.rhs) if on_left else (ineq.rhs, ineq.lhs)
    if term == atom:
        raise AlbaError(f"{p} occurs on both sides of {print_inequality(ineq)}")

    if on_left and isinstance(term, Or):
        parts = [Inequality(term.left, other), Inequality(term.right, other)]
    elif on_right and isinstance(term, And):
        parts = [Inequality(other, term.left), Inequality(other, term.right)]
    elif isinstance(term, Conn) and term.args:
        parts = [_residuate_connective(term, other, on_left, p, eps, sig)]
    else:
        raise AlbaError(f"Cannot display {p} in {print_inequality(ineq)}")

    bounds: List[Inequality] = []
    sides: List[Inequality] = []
    for part in parts:
        b, s = _residuate(part, p, eps, sig)
        bounds += b
        sides += s
    return bounds, sides


def _residuate_connective(
    term: Conn, other: Formula, on_left: bool, p: str, eps: Polarity, sig: Signature
) -> Inequality:
    spec = sig.get(term.name)
    wanted = Family.F if on_left else Family.G
    if spec.family is not wanted:
        raise AlbaError(
            f"Cannot residuate {spec.family.value}-connective '{term.name}' on the "
            f"{'left' if on_left else 'right'} to reach {p}"
        )
    sign = Sign.PLUS if on_left else Sign.MINUS
    hits = [
        k for k, arg in enumerate(term.args, start=1)
        if _critical_in(arg, sign.under(spec.polarity(k)), p, eps, sig)
    ]
    if len(hits) != 1:
        raise AlbaError(f"Cannot display {p}: it is critical in {len(hits)} arguments of '{term.name}'")
    k = hits[0]
    residual = sig.residual(term.name, k)
    args = list(term.args)
    inner = args[k - 1]
    args[k - 1] = other
    solved = Conn(residual, tuple(args))
    monotone = spec.polarity(k) is Polarity.ONE
    # f(..a..) <= b  iff  a <= f#(..b..) (ε=1) / f#(..b..) <= a (ε=∂); dually for g on the right
    if on_left:
        return Inequality(inner, solved) if monotone else Inequality(solved, inner)
    return Inequality(solved, inner) if monotone else Inequality(inner, solved)


def solve_constraint(
    ineq: Inequality, p: str, eps: Polarity, sig: Signature
) -> Tuple[List[Inequality], List[Inequality]]:
    """
    Residuate `ineq` until every critical occurrence of p stands alone.
    Returns the resulting bounds on p and the side constraints split off
    through `&` on the right or `|` on the left.
    """
    return _residuate(ineq, p, eps, sig)


def solve_for_variable(ineq: Inequality, p: str, eps: Polarity, sig: Signature) -> Inequality:
    bounds, sides = solve_constraint(ineq, p, eps, sig)
    if len(bounds) != 1 or sides:
        raise AlbaError(f"{print_inequality(ineq)} does not solve to a single bound on {p}")
    return bounds[0]


def solve_all(state: AlbaState, p: str, sig: Signature) -> AlbaState:
    """Replace every inequality with a critical, unsolved occurrence of p by its bounds and side constraints."""
    eps = state.epsilon[p]
    rewritten: List[Inequality] = []
    solved = 0
    for ineq in state.inequalities:
        if has_critical(ineq, p, eps, sig) and not is_bound(ineq, p, eps):
            bounds, sides = solve_constraint(ineq, p, eps, sig)
            rewritten += bounds + sides
            solved += 1
        else:
            rewritten.append(ineq)
    state.inequalities = rewritten
    if solved:
        state.record(AlbaStep.SOLVE, f"solved {solved} constraint(s) for {p}")
    return state


def trivially_true(ineq: Inequality) -> bool:
    return isinstance(ineq.lhs, Bot) or isinstance(ineq.rhs, Top)


def ackermann_eliminate(state: AlbaState, p: str, sig: Signature) -> AlbaState:
    """
    Substitute the join (ε=1) or meet (ε=∂) of the bounds on p everywhere
    else and drop the bounds. An empty set of bounds substitutes ⊥ / ⊤;
    antecedents that become `⊥ <= t` or `t <= ⊤` are dropped.
    """
    eps = state.epsilon[p]
    atom = Atom(p)
    bounds: List[Formula] = []
    rest: List[Inequality] = []
    for ineq in state.inequalities:
        if is_bound(ineq, p, eps):
            bounds.append(ineq.lhs if eps is Polarity.ONE else ineq.rhs)
            continue
        signs = occurrence_signs(ineq, p, sig)
        if critical_sign(eps) in signs:
            raise AlbaError(f"Unsolved constraint on {p}: {print_inequality(ineq)}", state.trace)
        rest.append(ineq)
    if critical_sign(eps) in occurrence_signs(state.goal, p, sig):
        raise AlbaError(f"Polarity violation: {p} occurs critically in the goal", state.trace)
    for c in state.clauses:
        if any(occurs(atom, side) for i in c.inequalities() for side in (i.lhs, i.rhs)):
            raise AlbaError(f"Polarity violation: {p} occurs inside a nested clause", state.trace)

    value = big_join(bounds) if eps is Polarity.ONE else big_meet(bounds)
    mapping = {atom: value}
    substituted = [Inequality(substitute(i.lhs, mapping), substitute(i.rhs, mapping)) for i in rest]
    state.inequalities = [i for i in substituted if not trivially_true(i)]
    dropped = len(substituted) - len(state.inequalities)
    state.goal = Inequality(substitute(state.goal.lhs, mapping), substitute(state.goal.rhs, mapping))
    del state.epsilon[p]
    detail = f"eliminated {p} with {len(bounds)} bound(s)"
    if dropped:
        detail += f", dropped {dropped} trivial antecedent(s)"
    state.record(AlbaStep.ACKERMANN, detail)
    logger.info("[alba] eliminated %s via ackermann (%d bound(s))", p, len(bounds))
    return state

