import logging
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from errors import AlbaError, NotInductiveError
from signature import Signature
from syntax import (
    Atom, Conominal, Inequality, InductiveCertificate, Nominal, find_inductive_certificate, inequality_atoms,
    print_inequality, split_definite, walk,
)
from .approximation import first_approximation
from .clause import Clause, shadowed_bindings
from .solving import ackermann_eliminate, solve_all
from .state import AlbaState, TraceRecord
from .unravel import is_polarity_safe, unravel_once

logger = logging.getLogger(__name__)

# upper bound on unravel rewrites per component
_MAX_UNRAVEL_STEPS = 500


@dataclass
class ComponentRun:
    inequality: Inequality
    clause: Clause
    trace: List[TraceRecord] = field(default_factory=list)


@dataclass
class AlbaRun:
    axiom: Inequality
    certificate: InductiveCertificate
    components: List[ComponentRun] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def clauses(self) -> List[Clause]:
        return [c.clause for c in self.components]

    @property
    def clause(self) -> Clause:
        if len(self.components) != 1:
            raise AlbaError(f"Axiom splits into {len(self.components)} definite components")
        return self.components[0].clause

    @property
    def trace(self) -> List[TraceRecord]:
        return [record for c in self.components for record in c.trace]


def _eliminate(state: AlbaState, cert: InductiveCertificate, sig: Signature) -> None:
    for p in cert.elimination_order(list(state.epsilon)):
        solve_all(state, p, sig)
        ackermann_eliminate(state, p, sig)


def _unravel(state: AlbaState, sig: Signature) -> None:
    for _ in range(_MAX_UNRAVEL_STEPS):
        if not unravel_once(state, sig):
            return
    raise AlbaError(f"Unraveling did not terminate within {_MAX_UNRAVEL_STEPS} steps", state.trace)


def _check_output(clause: Clause, state: AlbaState, sig: Signature) -> None:
    leftover = {
        leaf.name
        for ineq in clause.inequalities()
        for side in (ineq.lhs, ineq.rhs)
        for leaf in walk(side)
        if isinstance(leaf, Atom)
    }
    if leftover:
        raise AlbaError(f"Propositional variable(s) {sorted(leftover)} survived elimination", state.trace)
    if not is_polarity_safe(clause, sig):
        raise AlbaError("Output clause is not polarity-safe", state.trace)
    shadowed = shadowed_bindings(clause)
    if shadowed:
        raise AlbaError(f"Nested clause(s) rebind {shadowed}", state.trace)
    # extractor variables: each sits once in the goal
    goal = [
        leaf.name
        for side in (clause.consequent.lhs, clause.consequent.rhs)
        for leaf in walk(side)
        if isinstance(leaf, (Nominal, Conominal))
    ]
    repeated = [name for name in clause.bound if goal.count(name) != 1]
    if repeated:
        raise AlbaError(f"{repeated} do not occur exactly once in the goal", state.trace)


def run_component(ineq: Inequality, cert: InductiveCertificate, sig: Signature) -> ComponentRun:
    state = first_approximation(ineq, cert, sig)
    _eliminate(state, cert, sig)
    _unravel(state, sig)
    clause = state.as_clause()
    _check_output(clause, state, sig)
    return ComponentRun(ineq, clause, state.trace)


def run_alba(
    ineq: Inequality, sig: Signature, cert: Optional[InductiveCertificate] = None
) -> AlbaRun:
    """
    Certificate search, definite splitting and, per component, first
    approximation, solving with Ackermann elimination in Ω-order, and
    unraveling to a polarity-safe clause.
    """
    timings: Dict[str, float] = {}
    t0 = time.perf_counter()
    cert = cert or find_inductive_certificate(ineq, sig)
    timings["certificate_s"] = time.perf_counter() - t0
    if cert is None:
        raise NotInductiveError(f"{print_inequality(ineq)} is not (Ω, ε)-inductive for any Ω, ε")

    t0 = time.perf_counter()
    parts = split_definite(ineq, sig)
    timings["split_s"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    components = [run_component(part, cert, sig) for part in parts]
    timings["alba_s"] = time.perf_counter() - t0

    run = AlbaRun(ineq, cert, components, timings)
    logger.info(
        "[alba] %s: %d component(s), atoms %s, depth %s, %.3fs",
        print_inequality(ineq), len(components), inequality_atoms(ineq),
        [c.clause.depth() for c in components], sum(timings.values()),
    )
    return run
