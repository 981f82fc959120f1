"""
Inception display calculi: a closed signature, its base calculus and the
rules generated from the calculus's axioms.

    {"name": "two_axiom", "signature": "../signatures/dia_o_box.json",
     "rules": ["../rules/two_axiom_analytic.rules.json", "../rules/fusion_box.rules.json"]}

Paths are relative to the calculus file.
"""
import json
import logging
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from errors import DerivationFormatError
from kernel import InceptionRule, RuleEnv, base_rules, rule_table, scope_of
from rulegen import RuleGroup, flatten, load_rules
from schema_validation import validate_document
from signature import Signature, load_signature

logger = logging.getLogger(__name__)


@dataclass
class Calculus:
    name: str
    signature: Signature
    groups: List[RuleGroup] = field(default_factory=list)

    @cached_property
    def base(self) -> Tuple[InceptionRule, ...]:
        return base_rules(self.signature)

    @cached_property
    def rules(self) -> Tuple[InceptionRule, ...]:
        """Generated rules, without their contract rules."""
        return tuple(flatten(self.groups))

    @cached_property
    def table(self) -> Dict[str, InceptionRule]:
        """Every rule by name, contract rules at any depth included."""
        closure = [r for rule in self.rules for r in rule.closure()]
        return rule_table(list(self.base) + closure)

    def lookup(self, name: str) -> Optional[InceptionRule]:
        return self.table.get(name)

    def depth_of(self, name: str) -> Optional[int]:
        rule = self.table.get(name)
        return rule.depth if rule else None

    @cached_property
    def analytic(self) -> Tuple[InceptionRule, ...]:
        return tuple(r for r in self.rules if r.depth == 0)

    def top_env(self) -> RuleEnv:
        return scope_of(list(self.base) + list(self.rules))

    def dream_env(self, contract_scope: RuleEnv) -> RuleEnv:
        """Base calculus, depth-0 generated rules and the contract's own rules."""
        env = scope_of(list(self.base) + list(self.analytic))
        env.update(contract_scope)
        return env


def build_calculus(name: str, sig: Signature, groups: List[RuleGroup]) -> Calculus:
    calc = Calculus(name, sig, list(groups))
    # fail early on clashing names
    _ = calc.table
    logger.info(
        "[checker] calculus '%s': %d base rule(s), %d generated rule(s)", name, len(calc.base), len(calc.rules)
    )
    return calc


def load_calculus(path: str | Path) -> Calculus:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise DerivationFormatError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from e
    validate_document(doc, "calculus.schema.json", DerivationFormatError)
    sig = load_signature(path.parent / doc["signature"])
    groups: List[RuleGroup] = []
    for ref in doc.get("rules", []):
        groups += load_rules(path.parent / ref, sig)
    return build_calculus(doc.get("name", path.stem), sig, groups)
