"""
Rule schemas: structural rules with plain premises and contract premises.

A contract `[aim]^R_X` asks for a derivation of `aim` from the base calculus
plus the contract rules R, with the metavariables X read as fresh parameters.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterator, List, Tuple, Union

from dto import RuleKind
from errors import InstantiationError
from syntax import Formula
from .structures import MetaVar, Param, Sequent, Structure, print_sequent, sequent_metavars

Binding = Union[Structure, Formula]
Substitution = Dict[str, Binding]


@dataclass(frozen=True)
class Contract:
    aim: Sequent
    rules: Tuple["InceptionRule", ...]
    uninstantiable: Tuple[MetaVar, ...]

    @cached_property
    def depth(self) -> int:
        return 1 + max(r.depth for r in self.rules) if self.rules else 0


@dataclass(frozen=True)
class InceptionRule:
    name: str
    premises: Tuple[Sequent, ...]
    contracts: Tuple[Contract, ...]
    conclusion: Sequent
    kind: RuleKind = RuleKind.STRUCTURAL

    @cached_property
    def depth(self) -> int:
        return max((c.depth for c in self.contracts), default=0)

    def metavariables(self) -> List[MetaVar]:
        """Metavariables of the conclusion, premises and aims, first occurrence order."""
        found: Dict[str, MetaVar] = {}
        sequents = [self.conclusion, *self.premises, *(c.aim for c in self.contracts)]
        for seq in sequents:
            for mv in sequent_metavars(seq):
                found.setdefault(mv.name, mv)
        return list(found.values())

    def closure(self) -> Iterator["InceptionRule"]:
        """The rule followed by every contract rule at any depth, pre-order."""
        yield self
        for contract in self.contracts:
            for rule in contract.rules:
                yield from rule.closure()

    def render(self) -> str:
        tops = [print_sequent(p) for p in self.premises]
        for c in self.contracts:
            names = ", ".join(r.name for r in c.rules)
            xs = ", ".join(v.name for v in c.uninstantiable)
            tops.append(f"[{print_sequent(c.aim)}]^{{{names}}}_{{{xs}}}")
        top = "    ".join(tops) if tops else ""
        bottom = print_sequent(self.conclusion)
        width = max(len(top), len(bottom))
        return f"{top.center(width)}\n{'-' * width} {self.name}\n{bottom.center(width)}"


def rule_depth(rule: InceptionRule) -> int:
    return rule.depth


@dataclass(frozen=True)
class ScopedRule:
    """A rule as visible at one point of a derivation, with bindings inherited from enclosing applications."""
    rule: InceptionRule
    inherited: Tuple[Tuple[str, Binding], ...] = ()
    # inherited metavariable -> path of the application that bound it
    origins: Tuple[Tuple[str, str], ...] = ()

    @property
    def name(self) -> str:
        return self.rule.name

    def bindings(self) -> Substitution:
        return dict(self.inherited)

    def origin_map(self) -> Dict[str, str]:
        return dict(self.origins)


RuleEnv = Dict[str, ScopedRule]


def scope_of(rules, inherited: Substitution = None, origins: Dict[str, str] = None) -> RuleEnv:
    inherited_items = tuple(sorted((inherited or {}).items()))
    origin_items = tuple(sorted((origins or {}).items()))
    return {r.name: ScopedRule(r, inherited_items, origin_items) for r in rules}


class ParamAllocator:
    """Hands out parameters unique across one whole derivation."""

    def __init__(self, used=(), reserved=()):
        self.used = set(used)
        # idents that may still be claimed but are never handed out fresh
        self.reserved = set(reserved)
        self._counter = 0

    def fresh(self, base: str, sort) -> Param:
        while True:
            self._counter += 1
            ident = f"{base}{self._counter}"
            if ident not in self.used and ident not in self.reserved:
                self.used.add(ident)
                return Param(ident, sort)

    def claim(self, param: Param) -> None:
        if param.ident in self.used:
            raise InstantiationError(f"Parameter #{param.ident} is already used by another contract")
        self.used.add(param.ident)


@dataclass
class Obligation:
    contract: Contract
    aim: Sequent
    scope: RuleEnv
    params: Dict[str, Param] = field(default_factory=dict)


@dataclass
class RuleInstance:
    rule: InceptionRule
    substitution: Substitution
    premises: List[Sequent] = field(default_factory=list)
    obligations: List[Obligation] = field(default_factory=list)
