"""
Finite lattices as boolean order matrices.

Random lattices are Dedekind-MacNeille completions of random posets: every
cut A = L(U(A)) of the poset becomes an element, ordered by inclusion.
"""
import logging
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, List, Tuple

import numpy as np

from errors import AlgebraError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Lattice:
    leq: np.ndarray   # (n, n) bool, leq[a, b] iff a <= b
    join: np.ndarray  # (n, n) element indices
    meet: np.ndarray
    top: int
    bot: int

    @property
    def size(self) -> int:
        return int(self.leq.shape[0])

    def join_all(self, elements: Iterable[int]) -> int:
        return int(reduce(lambda a, b: self.join[a, b], elements, self.bot))

    def meet_all(self, elements: Iterable[int]) -> int:
        return int(reduce(lambda a, b: self.meet[a, b], elements, self.top))


def transitive_closure(leq: np.ndarray) -> np.ndarray:
    closed = leq.copy()
    for m in range(closed.shape[0]):
        closed |= closed[:, m:m + 1] & closed[m:m + 1, :]
    return closed


def _bound(candidates: np.ndarray, leq: np.ndarray, least: bool) -> int:
    """The least (greatest) member of `candidates`, or -1 when there is none."""
    idx = np.flatnonzero(candidates)
    for c in idx:
        if (leq[c, idx] if least else leq[idx, c]).all():
            return int(c)
    return -1


def lattice_from_order(leq: np.ndarray) -> Lattice:
    """Derive join/meet tables from an order matrix; raises if it is not a bounded lattice."""
    leq = np.asarray(leq, dtype=bool)
    n = leq.shape[0]
    if n == 0 or leq.shape != (n, n):
        raise AlgebraError("Order matrix must be square and non-empty")
    if not np.diag(leq).all():
        raise AlgebraError("Order is not reflexive")
    if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
        raise AlgebraError("Order is not antisymmetric")
    if (transitive_closure(leq) != leq).any():
        raise AlgebraError("Order is not transitive")
    join = np.empty((n, n), dtype=np.int64)
    meet = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            join[a, b] = _bound(leq[a, :] & leq[b, :], leq, least=True)
            meet[a, b] = _bound(leq[:, a] & leq[:, b], leq, least=False)
    if (join < 0).any() or (meet < 0).any():
        raise AlgebraError("Order is not a lattice: some pair lacks a join or meet")
    bot = _bound(np.ones(n, dtype=bool), leq, least=True)
    top = _bound(np.ones(n, dtype=bool), leq, least=False)
    return Lattice(leq=leq, join=join, meet=meet, top=top, bot=bot)


def chain(n: int) -> Lattice:
    idx = np.arange(n)
    return lattice_from_order(idx[:, None] <= idx[None, :])


def random_poset(k: int, rng: np.random.Generator, density: float = 0.4) -> np.ndarray:
    """Random order on k points; edges only go forward in index order so the result is acyclic."""
    edges = np.triu(rng.random((k, k)) < density, 1)
    return transitive_closure(edges | np.eye(k, dtype=bool))


def macneille_cuts(poset: np.ndarray) -> List[Tuple[bool, ...]]:
    k = poset.shape[0]
    cuts = set()
    for bits in range(2 ** k):
        subset = np.array([(bits >> i) & 1 == 1 for i in range(k)], dtype=bool)
        upper = poset[subset, :].all(axis=0)
        lower = poset[:, upper].all(axis=1)
        cuts.add(tuple(bool(x) for x in lower))
    return sorted(cuts, key=lambda c: (sum(c), c))


def macneille_completion(poset: np.ndarray) -> Lattice:
    cuts = np.array(macneille_cuts(poset), dtype=bool)
    # cut_i is a subset of cut_j
    leq = ~(cuts[:, None, :] & ~cuts[None, :, :]).any(axis=2)
    return lattice_from_order(leq)


def random_lattice(max_size: int, rng: np.random.Generator, max_tries: int = 1000) -> Lattice:
    """Completion of a random poset with 2 <= size <= max_size."""
    for _ in range(max_tries):
        k = int(rng.integers(1, max_size + 1))
        lattice = macneille_completion(random_poset(k, rng))
        if 2 <= lattice.size <= max_size:
            return lattice
    raise AlgebraError(f"No lattice of size <= {max_size} found in {max_tries} tries")
