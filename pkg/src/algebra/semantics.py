"""
Brute-force truth of formulas, inequalities and quantified clauses.

Valuations are enumerated as broadcast index grids: every variable in scope
owns one axis, so a whole quantifier block is decided by one vectorized
evaluation followed by `all()` over its axes.
"""
import logging
from typing import Dict, List, Mapping, Optional, Union

import numpy as np

import config
from alba.clause import Clause, free_variables, inequality_variables
from errors import AlgebraError, OracleBudgetError
from syntax import And, Bot, Conn, Formula, Inequality, Or, Top
from syntax.formulas import VARIABLE_TYPES
from .model import FiniteLEAlgebra

logger = logging.getLogger(__name__)

Value = Union[int, np.ndarray]


def _eval(f: Formula, alg: FiniteLEAlgebra, env: Mapping[str, Value]) -> Value:
    if isinstance(f, VARIABLE_TYPES):
        try:
            return env[f.name]
        except KeyError:
            raise AlgebraError(f"Valuation does not map variable '{f.name}'") from None
    if isinstance(f, Top):
        return alg.top
    if isinstance(f, Bot):
        return alg.bot
    if isinstance(f, And):
        return alg.meet[_eval(f.left, alg, env), _eval(f.right, alg, env)]
    if isinstance(f, Or):
        return alg.join[_eval(f.left, alg, env), _eval(f.right, alg, env)]
    if isinstance(f, Conn):
        args = tuple(_eval(a, alg, env) for a in f.args)
        return alg.table(f.name)[args]
    raise AlgebraError(f"Cannot evaluate {f!r}")


def evaluate(f: Formula, alg: FiniteLEAlgebra, valuation: Mapping[str, int]) -> int:
    return int(_eval(f, alg, valuation))


def holds(ineq: Inequality, alg: FiniteLEAlgebra, env: Mapping[str, Value]) -> Value:
    return alg.leq[_eval(ineq.lhs, alg, env), _eval(ineq.rhs, alg, env)]


def check_budget(alg: FiniteLEAlgebra, n_vars: int) -> None:
    evaluations = alg.size ** n_vars
    if evaluations > config.ORACLE_BUDGET:
        raise OracleBudgetError(
            f"{alg.size}^{n_vars} = {evaluations} valuations exceed the oracle budget of {config.ORACLE_BUDGET}"
        )


def _grid_env(names: List[str], n: int) -> Dict[str, np.ndarray]:
    grids = np.indices((n,) * len(names))
    return {name: grids[i] for i, name in enumerate(names)}


def axiom_valid(ineq: Inequality, alg: FiniteLEAlgebra) -> bool:
    names = [v.name for v in inequality_variables(ineq)]
    check_budget(alg, len(names))
    return bool(np.all(holds(ineq, alg, _grid_env(names, alg.size))))


def counterexample(ineq: Inequality, alg: FiniteLEAlgebra) -> Optional[Dict[str, int]]:
    """The first falsifying valuation in row-major order, if any."""
    names = [v.name for v in inequality_variables(ineq)]
    check_budget(alg, len(names))
    truth = np.broadcast_to(holds(ineq, alg, _grid_env(names, alg.size)), (alg.size,) * len(names))
    bad = np.argwhere(~truth)
    if len(bad) == 0:
        return None
    return {name: int(v) for name, v in zip(names, bad[0])}


# ────────────────────────────────────────────────────────────────────────────
# Clauses
# ────────────────────────────────────────────────────────────────────────────

def _width(clause: Clause) -> int:
    return len(clause.bound) + max((_width(c) for c in clause.antecedent_clauses), default=0)


def _clause_holds(clause: Clause, alg: FiniteLEAlgebra, env: Dict[str, Value], batch: int) -> np.ndarray:
    n = alg.size
    q = len(clause.bound)
    inner: Dict[str, Value] = {
        name: np.asarray(v)[(...,) + (None,) * q] if np.ndim(v) else v for name, v in env.items()
    }
    grids = np.indices((n,) * q)
    for i, name in enumerate(clause.bound):
        inner[name] = grids[i].reshape((1,) * batch + (n,) * q)
    # every axis belongs to one quantified variable, so all axes have extent n
    shape = (n,) * (batch + q)
    antecedent = np.ones(shape, dtype=bool)
    for ineq in clause.antecedent_ineqs:
        antecedent &= np.broadcast_to(holds(ineq, alg, inner), shape)
    for sub in clause.antecedent_clauses:
        antecedent &= np.broadcast_to(_clause_holds(sub, alg, inner, batch + q), shape)
    body = ~antecedent | np.broadcast_to(holds(clause.consequent, alg, inner), shape)
    return body.all(axis=tuple(range(batch, batch + q))) if q else body


def clause_valid(clause: Clause, alg: FiniteLEAlgebra) -> bool:
    """Truth of the clause with its free variables universally quantified; bound variables range over all elements."""
    free = [v.name for v in free_variables(clause)]
    check_budget(alg, len(free) + _width(clause))
    env: Dict[str, Value] = dict(_grid_env(free, alg.size))
    return bool(np.all(_clause_holds(clause, alg, env, len(free))))
