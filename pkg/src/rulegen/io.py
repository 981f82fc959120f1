"""
Rules documents.

    {"signature": "fusion_box",
     "groups": [{"axiom": "o(box(o(dia(p), p)), dia(p)) <= p",
                 "rules": [{"name": "R", "depth": 1, "kind": "inception",
                            "premises": ["Y |- Z"],
                            "contracts": [{"aim": "X |- !box(N)", "uninstantiable": ["N"],
                                           "rules": [...]}],
                            "conclusion": "^o(X, ^dia(Y)) |- Z"}],
                 "mapping": [{"scope": "R", "variable": "i0", "metavariable": "X", "sort": "F"}]}]}

Contract rules are stored inline, so a rules file is self-contained.
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List

from dto import RuleKind, Sort
from errors import KernelError, RuleGenerationError
from kernel import Contract, InceptionRule, MetaVar, parse_sequent, print_sequent, sequent_metavars
from schema_validation import validate_document
from signature import Signature
from .translate import MappingEntry, RuleGroup, Translation

logger = logging.getLogger(__name__)


# ────────────────────────────────────────────────────────────────────────────
# Writing
# ────────────────────────────────────────────────────────────────────────────

def rule_to_json(rule: InceptionRule) -> Dict[str, Any]:
    return {
        "name": rule.name,
        "depth": rule.depth,
        "kind": rule.kind.value,
        "premises": [print_sequent(p) for p in rule.premises],
        "contracts": [
            {
                "aim": print_sequent(c.aim),
                "uninstantiable": [v.name for v in c.uninstantiable],
                "rules": [rule_to_json(r) for r in c.rules],
            }
            for c in rule.contracts
        ],
        "conclusion": print_sequent(rule.conclusion),
    }


def rules_to_json(groups: List[RuleGroup], sig: Signature) -> Dict[str, Any]:
    return {
        "signature": sig.name,
        "groups": [
            {
                "axiom": group.axiom,
                "rules": [rule_to_json(t.rule) for t in group.translations],
                "mapping": [
                    {"scope": e.scope, "variable": e.variable, "metavariable": e.metavariable, "sort": e.sort.value}
                    for t in group.translations for e in t.mapping
                ],
            }
            for group in groups
        ],
    }


def write_rules(groups: List[RuleGroup], sig: Signature, path: str | Path) -> None:
    Path(path).write_text(json.dumps(rules_to_json(groups, sig), indent=2, ensure_ascii=False) + "\n")


# ────────────────────────────────────────────────────────────────────────────
# Reading
# ────────────────────────────────────────────────────────────────────────────

def _sequent(text: str, sig: Signature, where: str):
    try:
        return parse_sequent(text, sig)
    except KernelError as e:
        raise RuleGenerationError(f"{where}: {e}") from e


def _uninstantiable(names: List[str], aim, rules: List[InceptionRule], where: str) -> List[MetaVar]:
    sorts = {mv.name: mv.sort for mv in sequent_metavars(aim)}
    for rule in rules:
        for nested in rule.closure():
            for mv in nested.metavariables():
                sorts.setdefault(mv.name, mv.sort)
    missing = [n for n in names if n not in sorts]
    if missing:
        raise RuleGenerationError(f"{where}: uninstantiable {', '.join(missing)} occur nowhere in the contract")
    return [MetaVar(n, sorts[n]) for n in names]


def rule_from_json(doc: Dict[str, Any], sig: Signature) -> InceptionRule:
    name = doc["name"]
    premises = tuple(_sequent(p, sig, f"{name} premise {i}") for i, p in enumerate(doc.get("premises", [])))
    contracts = []
    for k, entry in enumerate(doc.get("contracts", [])):
        where = f"{name} contract {k}"
        aim = _sequent(entry["aim"], sig, where)
        rules = [rule_from_json(r, sig) for r in entry.get("rules", [])]
        xs = _uninstantiable(entry.get("uninstantiable", []), aim, rules, where)
        contracts.append(Contract(aim=aim, rules=tuple(rules), uninstantiable=tuple(xs)))
    conclusion = _sequent(doc["conclusion"], sig, f"{name} conclusion")
    rule = InceptionRule(name, premises, tuple(contracts), conclusion)
    kind = RuleKind(doc["kind"]) if "kind" in doc else (RuleKind.INCEPTION if rule.depth else RuleKind.STRUCTURAL)
    rule = InceptionRule(name, premises, tuple(contracts), conclusion, kind)
    if "depth" in doc and doc["depth"] != rule.depth:
        raise RuleGenerationError(f"{name}: declared depth {doc['depth']}, computed {rule.depth}")
    return rule


def rules_from_json(doc: Dict[str, Any], sig: Signature) -> List[RuleGroup]:
    validate_document(doc, "rules.schema.json", RuleGenerationError)
    groups = []
    for entry in doc["groups"]:
        mapping = [
            MappingEntry(m["scope"], m["variable"], m["metavariable"], Sort(m["sort"]))
            for m in entry.get("mapping", [])
        ]
        group = RuleGroup(entry["axiom"])
        for r in entry["rules"]:
            rule = rule_from_json(r, sig)
            own = [m for m in mapping if m.scope == rule.name or m.scope.startswith(f"{rule.name}.")]
            group.translations.append(Translation(rule, own))
        groups.append(group)
    return groups


def load_rules(path: str | Path, sig: Signature) -> List[RuleGroup]:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise RuleGenerationError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from e
    groups = rules_from_json(doc, sig)
    logger.info("[rulegen] loaded %d rule(s) from %s", sum(len(g.translations) for g in groups), path)
    return groups


def flatten(groups: List[RuleGroup]) -> List[InceptionRule]:
    return [rule for group in groups for rule in group.rules]
