"""
Derivation documents.

    {"calculus": "../calculi/fusion_box.calculus.json",
     "root": {"rule": "R0", "conclusion": "^o(box(o(dia(p), p)), ^dia(p)) |- p",
              "premises": [{"rule": "Id", "conclusion": "p |- p"}],
              "dreams": [{"rule": "box_L", "conclusion": "box(o(dia(p), p)) |- !box(#N1)", ...}]}}

A node with rule `display` and one premise stands for the shortest chain of
display postulates from the premise's conclusion to its own; the reader
expands it, so checked trees only ever hold real rule applications.
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from dto import Sort
from errors import DerivationFormatError, FormulaSyntaxError, KernelError
from kernel import (
    Binding, FormulaLeaf, InceptionRule, MetaVar, Param, describe_binding, display_path, parse_sequent,
    parse_structure, print_sequent,
)
from schema_validation import validate_document
from syntax import FormulaMeta, parse_formula, walk as walk_formula
from .calculus import Calculus, load_calculus
from .derivation import Derivation, dream_path, premise_path

logger = logging.getLogger(__name__)

DISPLAY_MACRO = "display"


# ────────────────────────────────────────────────────────────────────────────
# Reading
# ────────────────────────────────────────────────────────────────────────────

def _variable_kinds(rule: InceptionRule) -> Dict[str, Optional[Sort]]:
    """Sort of every structure metavariable of the rule; formula metavariables map to None."""
    kinds: Dict[str, Optional[Sort]] = {}
    sequents = [rule.conclusion, *rule.premises, *(c.aim for c in rule.contracts)]
    for seq in sequents:
        for side in (seq.ante, seq.succ):
            _collect(side, kinds)
    for c in rule.contracts:
        for v in c.uninstantiable:
            kinds.setdefault(v.name, v.sort)
    return kinds


def _collect(s, kinds: Dict[str, Optional[Sort]]) -> None:
    if isinstance(s, MetaVar):
        kinds.setdefault(s.name, s.sort)
    elif isinstance(s, FormulaLeaf):
        for f in walk_formula(s.formula):
            if isinstance(f, FormulaMeta):
                kinds.setdefault(f.name, None)
    else:
        for a in getattr(s, "args", ()):
            _collect(a, kinds)


def _binding(name: str, text: str, rule: Optional[InceptionRule], calc: Calculus, where: str) -> Binding:
    kinds = _variable_kinds(rule) if rule else {}
    if name not in kinds:
        raise DerivationFormatError(f"{where}: rule {rule.name if rule else '?'} has no variable {name}")
    sort = kinds[name]
    try:
        if sort is None:
            return parse_formula(text, calc.signature)
        if text.startswith("#"):
            return Param(text[1:], sort)
        return parse_structure(text, calc.signature, sort)
    except (FormulaSyntaxError, KernelError) as e:
        raise DerivationFormatError(f"{where}: binding {name}: {e}") from e


def _node(doc: Dict[str, Any], calc: Calculus, path: str) -> Derivation:
    rule_name = doc["rule"]
    try:
        conclusion = parse_sequent(doc["conclusion"], calc.signature)
    except (FormulaSyntaxError, KernelError) as e:
        raise DerivationFormatError(f"{path}: {e}") from e
    premises = tuple(_node(c, calc, premise_path(path, i)) for i, c in enumerate(doc.get("premises", [])))
    dreams = tuple(_node(c, calc, dream_path(path, k)) for k, c in enumerate(doc.get("dreams", [])))
    if rule_name == DISPLAY_MACRO:
        return _expand_display(conclusion, premises, dreams, calc, path)
    rule = calc.lookup(rule_name)
    bindings: Tuple[Tuple[str, Binding], ...] = tuple(
        (name, _binding(name, text, rule, calc, path)) for name, text in sorted(doc.get("bindings", {}).items())
    )
    return Derivation(rule_name, conclusion, premises, dreams, bindings)


def _expand_display(conclusion, premises, dreams, calc: Calculus, path: str) -> Derivation:
    if len(premises) != 1 or dreams:
        raise DerivationFormatError(f"{path}: a display step takes exactly one premise and no dreams")
    node = premises[0]
    chain = display_path(node.conclusion, conclusion, calc.signature)
    if chain is None:
        raise DerivationFormatError(
            f"{path}: {print_sequent(conclusion)} is not display-equivalent to {print_sequent(node.conclusion)}"
        )
    for step in chain:
        node = Derivation(step.rule, step.result, (node,))
    logger.debug("[checker][path=%s] display macro expanded to %d postulate(s)", path, len(chain))
    return node


def derivation_from_json(doc: Dict[str, Any], calc: Calculus) -> Derivation:
    validate_document(doc, "derivation.schema.json", DerivationFormatError)
    return _node(doc["root"], calc, "root")


def load_derivation(path: str | Path, calc: Optional[Calculus] = None) -> Tuple[Derivation, Calculus]:
    """Read a derivation; without `calc` the calculus named in the file is loaded, relative to it."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise DerivationFormatError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from e
    if calc is None:
        ref = doc.get("calculus")
        if not ref:
            raise DerivationFormatError(f"{path}: no calculus given")
        calc = load_calculus(path.parent / ref)
    d = derivation_from_json(doc, calc)
    logger.info("[checker] loaded derivation %s (%s)", path, print_sequent(d.conclusion))
    return d, calc


# ────────────────────────────────────────────────────────────────────────────
# Writing
# ────────────────────────────────────────────────────────────────────────────

def derivation_to_json(d: Derivation) -> Dict[str, Any]:
    node: Dict[str, Any] = {"rule": d.rule, "conclusion": print_sequent(d.conclusion)}
    if d.bindings:
        node["bindings"] = {name: describe_binding(value) for name, value in d.bindings}
    if d.premises:
        node["premises"] = [derivation_to_json(c) for c in d.premises]
    if d.dreams:
        node["dreams"] = [derivation_to_json(c) for c in d.dreams]
    return node


def write_derivation(d: Derivation, path: str | Path, calculus_ref: Optional[str] = None) -> None:
    doc: Dict[str, Any] = {"root": derivation_to_json(d)}
    if calculus_ref:
        doc = {"calculus": calculus_ref, **doc}
    Path(path).write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")


def render_derivation(d: Derivation, indent: int = 0, label: str = "") -> str:
    """Indented tree, conclusion first; dreams are marked with brackets."""
    pad = "  " * indent
    lines = [f"{pad}{label}{print_sequent(d.conclusion)}    ({d.rule})"]
    for child in d.premises:
        lines.append(render_derivation(child, indent + 1))
    for k, dream in enumerate(d.dreams):
        lines.append(render_derivation(dream, indent + 1, f"[dream {k}] "))
    return "\n".join(lines)
