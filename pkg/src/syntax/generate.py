"""Seeded random formulas for round-trip and oracle properties."""
from typing import List, Optional, Sequence

import numpy as np

from signature import Signature
from .formulas import And, Atom, Bot, Conn, Formula, Inequality, Or, Top


def random_formula(
    sig: Signature,
    rng: np.random.Generator,
    depth: int = 3,
    atom_names: Sequence[str] = ("p", "q", "r"),
    connectives: Optional[List[str]] = None,
) -> Formula:
    """
    Random well-typed formula of height at most `depth`. Only primitive
    connectives are used unless `connectives` names others.
    """
    names = connectives if connectives is not None else [c.name for c in sig.primitives]
    if depth <= 0 or rng.random() < 0.25:
        roll = rng.random()
        if roll < 0.05:
            return Top()
        if roll < 0.1:
            return Bot()
        return Atom(str(rng.choice(list(atom_names))))
    choices = ["and", "or"] + list(names)
    picked = str(choices[int(rng.integers(len(choices)))])
    if picked == "and":
        return And(random_formula(sig, rng, depth - 1, atom_names, names),
                   random_formula(sig, rng, depth - 1, atom_names, names))
    if picked == "or":
        return Or(random_formula(sig, rng, depth - 1, atom_names, names),
                  random_formula(sig, rng, depth - 1, atom_names, names))
    spec = sig.get(picked)
    return Conn(picked, tuple(
        random_formula(sig, rng, depth - 1, atom_names, names) for _ in range(spec.arity)
    ))


def random_inequality(sig: Signature, rng: np.random.Generator, depth: int = 3) -> Inequality:
    return Inequality(random_formula(sig, rng, depth), random_formula(sig, rng, depth))
