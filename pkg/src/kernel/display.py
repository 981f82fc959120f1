"""
Display postulates.

Every structural connective h and coordinate k give one invertible rule
`dp.h.k` that moves the k-th argument of h to its own side of the turnstile
and puts the residual of h in coordinate k on the other side, holding the
structure that was there. The inverse of `dp.h.k` is `dp.h'.k` with h' that
residual, since residuation is an involution per coordinate.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from dto import Sort
from errors import DisplayError, SignatureError
from signature import Signature
from .structures import (
    ANTE, SUCC, STRUCT_BOT, STRUCT_TOP, Position, Sequent, StructConn, child_sort, print_sequent,
)

logger = logging.getLogger(__name__)

# breadth-first search depth for the `display` macro of derivation files
MAX_DISPLAY_CHAIN = 12


def postulate_name(connective: str, k: int) -> str:
    """Name of the postulate displaying the 1-based coordinate k of `connective`."""
    return f"dp.{connective}.{k}"


@dataclass(frozen=True)
class DisplayStep:
    rule: str
    # side holding the residual in `result`, where the inverse postulate applies
    residual_side: int
    k: int
    result: Sequent


def apply_postulate(seq: Sequent, side: int, k: int, sig: Signature) -> Tuple[Sequent, DisplayStep]:
    """Display the 0-based argument k of the structural connective heading `side`."""
    head = seq.side(side)
    if not isinstance(head, StructConn) or head.name in (STRUCT_TOP, STRUCT_BOT):
        raise DisplayError(f"No structural connective to display through in {print_sequent(seq)}")
    if k >= len(head.args):
        raise DisplayError(f"'{head.name}' has no argument {k}")
    try:
        residual = sig.get(sig.residual(head.name, k + 1))
    except SignatureError as e:
        raise DisplayError(str(e)) from e
    other = seq.side(1 - side)
    args = list(head.args)
    child = args[k]
    args[k] = other
    moved = StructConn(residual.name, residual.family, tuple(args))
    if child_sort(sig, head, k) is Sort.F:
        result, residual_side = Sequent(child, moved), SUCC
    else:
        result, residual_side = Sequent(moved, child), ANTE
    return result, DisplayStep(postulate_name(head.name, k + 1), residual_side, k, result)


def display(seq: Sequent, pos: Position, sig: Signature) -> Tuple[Sequent, List[DisplayStep]]:
    """Isolate the substructure at `pos` as a whole side; returns the sequent and the postulates applied."""
    side, path = pos
    if side not in (ANTE, SUCC):
        raise DisplayError(f"Invalid side {side}")
    trace: List[DisplayStep] = []
    current = seq
    for k in path:
        current, step = apply_postulate(current, side, k, sig)
        trace.append(step)
        side = ANTE if step.residual_side == SUCC else SUCC
    return current, trace


def undisplay(seq: Sequent, trace: List[DisplayStep], sig: Signature) -> Tuple[Sequent, List[DisplayStep]]:
    """Replay the inverses of `trace` backwards, starting from `seq`."""
    steps: List[DisplayStep] = []
    current = seq
    for step in reversed(trace):
        current, back = apply_postulate(current, step.residual_side, step.k, sig)
        steps.append(back)
    return current, steps


def display_neighbours(seq: Sequent, sig: Signature) -> List[DisplayStep]:
    found = []
    for side in (ANTE, SUCC):
        head = seq.side(side)
        if not isinstance(head, StructConn) or head.name in (STRUCT_TOP, STRUCT_BOT):
            continue
        for k in range(len(head.args)):
            try:
                found.append(apply_postulate(seq, side, k, sig)[1])
            except DisplayError:
                continue
    return found


def display_path(start: Sequent, goal: Sequent, sig: Signature, limit: int = MAX_DISPLAY_CHAIN) -> Optional[List[DisplayStep]]:
    """Shortest chain of postulates turning `start` into `goal`, breadth first."""
    if start == goal:
        return []
    parents: Dict[Sequent, Tuple[Optional[Sequent], Optional[DisplayStep]]] = {start: (None, None)}
    frontier = deque([(start, 0)])
    while frontier:
        seq, dist = frontier.popleft()
        if dist >= limit:
            continue
        for step in display_neighbours(seq, sig):
            if step.result in parents:
                continue
            parents[step.result] = (seq, step)
            if step.result == goal:
                chain = []
                cursor = goal
                while parents[cursor][1] is not None:
                    prev, st = parents[cursor]
                    chain.append(st)
                    cursor = prev
                chain.reverse()
                return chain
            frontier.append((step.result, dist + 1))
    logger.debug("[kernel] no display chain from %s to %s", print_sequent(start), print_sequent(goal))
    return None
