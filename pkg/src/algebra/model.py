import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional

import numpy as np

from dto import Family, Polarity
from errors import AlgebraError
from signature import Signature
from .lattice import Lattice, lattice_from_order, random_lattice
from .operators import closure_tables, random_operator, residuation_pairs

logger = logging.getLogger(__name__)

MAX_SUPPORTED_SIZE = 6


@dataclass(eq=False)
class FiniteLEAlgebra:
    """A finite lattice with one table per connective of a closed signature."""
    signature: Signature
    lattice: Lattice
    tables: Dict[str, np.ndarray] = field(default_factory=dict)
    label: str = ""

    @property
    def size(self) -> int:
        return self.lattice.size

    @property
    def leq(self) -> np.ndarray:
        return self.lattice.leq

    @property
    def join(self) -> np.ndarray:
        return self.lattice.join

    @property
    def meet(self) -> np.ndarray:
        return self.lattice.meet

    @property
    def top(self) -> int:
        return self.lattice.top

    @property
    def bot(self) -> int:
        return self.lattice.bot

    def table(self, name: str) -> np.ndarray:
        try:
            return self.tables[name]
        except KeyError:
            raise AlgebraError(f"Algebra '{self.label}' has no table for connective '{name}'") from None


def build_algebra(
    sig: Signature,
    leq: np.ndarray,
    primitive_tables: Dict[str, np.ndarray],
    label: str = "",
) -> FiniteLEAlgebra:
    """Algebra from an order matrix and primitive tables; residual tables are derived."""
    lattice = lattice_from_order(leq)
    return FiniteLEAlgebra(sig, lattice, closure_tables(sig, lattice, primitive_tables), label)


def random_algebra(sig: Signature, max_size: int, rng: np.random.Generator, label: str = "") -> FiniteLEAlgebra:
    lattice = random_lattice(max_size, rng)
    primitive = {spec.name: random_operator(spec, lattice, rng) for spec in sig.primitives}
    return FiniteLEAlgebra(sig, lattice, closure_tables(sig, lattice, primitive), label)


def enumerate_algebras(
    sig: Signature, max_size: int, seed: int, count: int, start: int = 0
) -> Iterator[FiniteLEAlgebra]:
    """
    Random algebras number `start` .. `start + count - 1` of size 2..max_size.
    Algebra i is drawn from its own generator seeded with (seed, i), so any
    slice of the stream can be produced independently.
    """
    if not 2 <= max_size <= MAX_SUPPORTED_SIZE:
        raise AlgebraError(f"max_size must lie in 2..{MAX_SUPPORTED_SIZE}, got {max_size}")
    for i in range(start, start + count):
        rng = np.random.default_rng([seed, i])
        yield random_algebra(sig, max_size, rng, label=f"seed{seed}#{i}")


# ────────────────────────────────────────────────────────────────────────────
# Validation
# ────────────────────────────────────────────────────────────────────────────

def _lattice_problems(lat: Lattice) -> List[str]:
    problems = []
    n = lat.size
    a, b, c = np.indices((n, n, n))
    upper = lat.leq[a, c] & lat.leq[b, c]
    if not (upper == lat.leq[lat.join[a, b], c]).all():
        problems.append("join table is not the least upper bound")
    lower = lat.leq[c, a] & lat.leq[c, b]
    if not (lower == lat.leq[c, lat.meet[a, b]]).all():
        problems.append("meet table is not the greatest lower bound")
    if not lat.leq[lat.bot, :].all() or not lat.leq[:, lat.top].all():
        problems.append("bounds are not bottom/top")
    return problems


def _operator_problems(alg: FiniteLEAlgebra, name: str) -> List[str]:
    spec = alg.signature.get(name)
    table = alg.table(name)
    n = alg.size
    problems = []
    is_f = spec.family is Family.F
    for i, eps in enumerate(spec.order_type):
        grids = list(np.indices((n,) * (spec.arity + 1)))
        x, y = grids[i], grids[spec.arity]
        # ε-join in coordinate i is the join for ε=1 and the meet for ε=∂ (dually for G)
        use_join = (eps is Polarity.ONE) == is_f
        combined = alg.join[x, y] if use_join else alg.meet[x, y]
        args = grids[:spec.arity]
        left = table[tuple(args[:i] + [combined] + args[i + 1:])]
        first = table[tuple(args)]
        second = table[tuple(args[:i] + [y] + args[i + 1:])]
        right = alg.join[first, second] if is_f else alg.meet[first, second]
        if not (left == right).all():
            problems.append(f"{name} does not preserve {'joins' if is_f else 'meets'} in coordinate {i + 1}")
        unit_arg = alg.bot if use_join else alg.top
        slot = tuple(args[:i] + [np.full_like(x, unit_arg)] + args[i + 1:])
        if not (table[slot] == (alg.bot if is_f else alg.top)).all():
            problems.append(f"{name} is not normal in coordinate {i + 1}")
    return problems


def _residuation_problems(alg: FiniteLEAlgebra, h: str, k: int, r: str) -> List[str]:
    spec = alg.signature.get(h)
    n = alg.size
    parent_below, a_below = residuation_pairs(spec, k)
    grids = list(np.indices((n,) * (spec.arity + 1)))
    args, b = grids[:spec.arity], grids[spec.arity]
    a = args[k - 1]
    h_val = alg.table(h)[tuple(args)]
    r_val = alg.table(r)[tuple(args[:k - 1] + [b] + args[k:])]
    lhs = alg.leq[h_val, b] if parent_below else alg.leq[b, h_val]
    rhs = alg.leq[a, r_val] if a_below else alg.leq[r_val, a]
    if not (lhs == rhs).all():
        return [f"{r} is not the residual of {h} in coordinate {k}"]
    return []


def validate_algebra(alg: FiniteLEAlgebra) -> List[str]:
    """Lattice, operator, normality and residuation laws by full enumeration; empty when valid."""
    problems = _lattice_problems(alg.lattice)
    for spec in alg.signature.primitives:
        if spec.name not in alg.tables:
            problems.append(f"missing table for {spec.name}")
            continue
        problems.extend(_operator_problems(alg, spec.name))
    for h, k, r in alg.signature.links:
        if h in alg.tables and r in alg.tables:
            problems.extend(_residuation_problems(alg, h, k, r))
    if problems:
        logger.warning("[algebra] %s failed %d check(s)", alg.label or "algebra", len(problems))
    return problems


def find_algebra(
    sig: Signature,
    max_size: int,
    seed: int,
    predicate,
    limit: int = 500,
) -> Optional[FiniteLEAlgebra]:
    """First algebra of the seeded stream satisfying `predicate`."""
    for alg in enumerate_algebras(sig, max_size, seed, limit):
        if predicate(alg):
            return alg
    return None
