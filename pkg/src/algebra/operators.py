"""
Normal operator tables and their residuals.

An F-operator is a join of elementary maps e(a) = y if a_i ≰^{ε_i} x_i for
every coordinate i, else ⊥. Each elementary map sends ε-joins to joins and
ε-bottom to ⊥ in every coordinate, hence so does their join; G-operators are
the order dual.
"""
from typing import Dict, Tuple

import numpy as np

from dto import Family, Polarity
from errors import AlgebraError
from signature import ConnectiveSpec, Signature
from .lattice import Lattice


def _avoid_mask(spec: ConnectiveSpec, lat: Lattice, pivots: np.ndarray) -> np.ndarray:
    n = lat.size
    grids = np.indices((n,) * spec.arity)
    mask = np.ones((n,) * spec.arity, dtype=bool)
    for i, eps in enumerate(spec.order_type):
        a, x = grids[i], pivots[i]
        # F avoids the down-set of x in monotone slots; G avoids the up-set
        below = lat.leq[a, x] if (eps is Polarity.ONE) == (spec.family is Family.F) else lat.leq[x, a]
        mask &= ~below
    return mask


def random_operator(spec: ConnectiveSpec, lat: Lattice, rng: np.random.Generator, max_generators: int = 3) -> np.ndarray:
    n = lat.size
    is_f = spec.family is Family.F
    unit = lat.bot if is_f else lat.top
    combine = lat.join if is_f else lat.meet
    table = np.full((n,) * spec.arity, unit, dtype=np.int64)
    for _ in range(int(rng.integers(0, max_generators + 1))):
        pivots = rng.integers(n, size=spec.arity)
        value = int(rng.integers(n))
        elementary = np.where(_avoid_mask(spec, lat, pivots), value, unit)
        table = np.asarray(combine[table, elementary], dtype=np.int64)
    return table


def residual_table(parent: ConnectiveSpec, table: np.ndarray, k: int, lat: Lattice) -> np.ndarray:
    """
    Table of the residual of `parent` in coordinate k, computed as the
    join / meet of the solution set of the residuation law. The residual
    keeps the parent's argument order with the bound in slot k.
    """
    n = lat.size
    eps = parent.polarity(k)
    is_f = parent.family is Family.F
    take_join = eps is Polarity.ONE if is_f else eps is Polarity.DUAL
    out = np.empty((n,) * parent.arity, dtype=np.int64)
    for idx in np.ndindex(*out.shape):
        b = idx[k - 1]
        cut_index = tuple(np.arange(n) if j == k - 1 else idx[j] for j in range(parent.arity))
        values = table[cut_index]
        solutions = np.flatnonzero(lat.leq[values, b] if is_f else lat.leq[b, values])
        out[idx] = lat.join_all(solutions) if take_join else lat.meet_all(solutions)
    return out


def closure_tables(sig: Signature, lat: Lattice, primitive_tables: Dict[str, np.ndarray]) -> Dict[str, np.ndarray]:
    """Extend primitive tables to every member of the closed signature along its residual links."""
    tables = {name: np.asarray(t, dtype=np.int64) for name, t in primitive_tables.items()}
    missing = [c.name for c in sig.primitives if c.name not in tables]
    if missing:
        raise AlgebraError(f"Missing table(s) for primitive connective(s): {', '.join(missing)}")
    changed = True
    while changed:
        changed = False
        for h, k, r in sig.links:
            if h in tables and r not in tables:
                tables[r] = residual_table(sig.get(h), tables[h], k, lat)
                changed = True
    return tables


def residuation_pairs(spec: ConnectiveSpec, k: int) -> Tuple[bool, bool]:
    """
    (parent side, residual side) flags of the residuation law: the parent
    value is compared as `h(..a..) <= b` when the first flag is set (else
    `b <= h(..a..)`), and the bound as `a <= r(..b..)` when the second is
    set (else `r(..b..) <= a`).
    """
    is_f = spec.family is Family.F
    eps = spec.polarity(k)
    a_below = eps is Polarity.ONE if is_f else eps is Polarity.DUAL
    return is_f, a_below
