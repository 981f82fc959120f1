"""
Comparison of generated rules against reference rules up to renaming of
metavariables and rule names and reordering of premises, contracts and
contract rules.
"""
import itertools
from typing import Dict, List

from kernel import Contract, InceptionRule, MetaVar, Sequent, map_metavars, print_sequent, sequent_metavars


def _map(seq: Sequent, mapping: Dict[str, MetaVar]) -> Sequent:
    return Sequent(map_metavars(seq.ante, mapping), map_metavars(seq.succ, mapping))


def _erased(seq: Sequent) -> str:
    names = {mv.name: MetaVar(f"_{mv.sort.value}", mv.sort) for mv in sequent_metavars(seq)}
    return print_sequent(_map(seq, names))


def rule_shape(rule: InceptionRule) -> str:
    """Name-free fingerprint used to order siblings before numbering."""
    premises = sorted(_erased(p) for p in rule.premises)
    contracts = sorted(contract_shape(c) for c in rule.contracts)
    return f"{{{'; '.join(premises)} | {'; '.join(contracts)} => {_erased(rule.conclusion)}}}"


def contract_shape(contract: Contract) -> str:
    rules = sorted(rule_shape(r) for r in contract.rules)
    return f"[{_erased(contract.aim)}]^{{{', '.join(rules)}}}_{len(contract.uninstantiable)}"


def normal_rule(rule: InceptionRule) -> InceptionRule:
    """Metavariables numbered by first occurrence, conclusion first; names positional."""
    counter = itertools.count()
    env: Dict[str, MetaVar] = {}

    def number(seqs: List[Sequent]) -> None:
        for seq in seqs:
            for mv in sequent_metavars(seq):
                if mv.name not in env:
                    env[mv.name] = MetaVar(f"M{next(counter)}", mv.sort)

    def visit(r: InceptionRule, name: str) -> InceptionRule:
        premises = sorted(r.premises, key=_erased)
        contracts = sorted(r.contracts, key=contract_shape)
        number([r.conclusion, *premises, *(c.aim for c in contracts)])
        fixed = []
        for k, c in enumerate(contracts):
            for v in c.uninstantiable:
                if v.name not in env:
                    env[v.name] = MetaVar(f"M{next(counter)}", v.sort)
            rules = [visit(sub, f"{name}.c{k}.r{j}") for j, sub in enumerate(sorted(c.rules, key=rule_shape))]
            fixed.append(Contract(
                aim=_map(c.aim, env),
                rules=tuple(rules),
                uninstantiable=tuple(sorted((env[v.name] for v in c.uninstantiable), key=lambda m: m.name)),
            ))
        return InceptionRule(
            name=name,
            premises=tuple(sorted((_map(p, env) for p in premises), key=print_sequent)),
            contracts=tuple(fixed),
            conclusion=_map(r.conclusion, env),
            kind=r.kind,
        )

    return visit(rule, "R")


def rules_match(a: InceptionRule, b: InceptionRule) -> bool:
    return normal_rule(a) == normal_rule(b)


def rule_differences(expected: List[InceptionRule], actual: List[InceptionRule]) -> List[str]:
    """Human-readable mismatches between two rule lists, compared pairwise in order."""
    problems = []
    if len(expected) != len(actual):
        problems.append(f"expected {len(expected)} rule(s), got {len(actual)}")
    for want, got in zip(expected, actual):
        if not rules_match(want, got):
            problems.append(
                f"{got.name} does not match {want.name}:\n"
                f"{normal_rule(got).render()}\nvs\n{normal_rule(want).render()}"
            )
        elif want.depth != got.depth:
            problems.append(f"{got.name}: depth {got.depth}, expected {want.depth}")
    return problems
