"""
Connective specifications and the (immutable) signature value.

A connective of the residual closure is identified by the primitive it was
derived from together with a slot permutation: slot `i < n` is argument
position `i`, slot `n` is the output. Taking the residual in coordinate `k`
swaps the slot at position `k-1` with the output slot, so `(h#k)#k = h` holds
by construction and a binary primitive closes to exactly six members.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Optional, Tuple

from dto import Family, Polarity
from errors import SignatureError

RESERVED_NAMES = frozenset({"top", "bot", "and", "or", "forall"})


@dataclass(frozen=True)
class ConnectiveSpec:
    name: str
    family: Family
    arity: int
    order_type: Tuple[Polarity, ...]
    # (parent name, 1-based coordinate) for residuals, None for primitives
    residual_of: Optional[Tuple[str, int]] = None

    @property
    def is_primitive(self) -> bool:
        return self.residual_of is None

    def polarity(self, k: int) -> Polarity:
        """Order-type entry of the 1-based coordinate k."""
        return self.order_type[k - 1]


def residual_family(spec: ConnectiveSpec, k: int) -> Family:
    """F-connectives residuate into G in monotone coordinates and stay in F in antitone ones; dually for G."""
    return spec.family.dual() if spec.polarity(k) is Polarity.ONE else spec.family


def residual_order_type(spec: ConnectiveSpec, k: int) -> Tuple[Polarity, ...]:
    pivot = spec.polarity(k)
    return tuple(
        eps if j == k else eps.compose(pivot.flip())
        for j, eps in enumerate(spec.order_type, start=1)
    )


def default_residual_name(spec: ConnectiveSpec, k: int) -> str:
    kind = "rres" if spec.family is Family.F else "lres"
    return f"{spec.name}.{kind}.{k}"


@dataclass(frozen=True)
class Signature:
    name: str
    connectives: Tuple[ConnectiveSpec, ...]
    # "<parent>.<k>" -> display name for generated residuals
    aliases: Tuple[Tuple[str, str], ...] = ()
    # (connective, k, residual) for every coordinate of every member; set by closure
    links: Tuple[Tuple[str, int, str], ...] = ()
    closed: bool = False

    @cached_property
    def by_name(self) -> Dict[str, ConnectiveSpec]:
        return {c.name: c for c in self.connectives}

    @cached_property
    def _residuals(self) -> Dict[Tuple[str, int], str]:
        return {(h, k): r for h, k, r in self.links}

    @cached_property
    def alias_map(self) -> Dict[str, str]:
        return dict(self.aliases)

    def __contains__(self, name: str) -> bool:
        return name in self.by_name

    def get(self, name: str) -> ConnectiveSpec:
        try:
            return self.by_name[name]
        except KeyError:
            raise SignatureError(f"Unknown connective '{name}' in signature '{self.name}'") from None

    def family(self, name: str) -> Family:
        return self.get(name).family

    def residual(self, name: str, k: int) -> str:
        """Name of the residual of `name` in the 1-based coordinate k."""
        try:
            return self._residuals[(name, k)]
        except KeyError:
            raise SignatureError(
                f"No residual recorded for '{name}' in coordinate {k}; close the signature first"
            ) from None

    @property
    def primitives(self) -> Tuple[ConnectiveSpec, ...]:
        return tuple(c for c in self.connectives if c.is_primitive)

    def of_family(self, family: Family) -> Tuple[ConnectiveSpec, ...]:
        return tuple(c for c in self.connectives if c.family is family)

