import json
import logging
from pathlib import Path
from typing import Any, Dict

from dto import Family, Polarity
from errors import SignatureError
from schema_validation import validate_document
from .closure import close_under_residuals
from .connectives import ConnectiveSpec, Signature

logger = logging.getLogger(__name__)


def signature_from_json(doc: Dict[str, Any]) -> Signature:
    validate_document(doc, "signature.schema.json", SignatureError)
    connectives = []
    for entry in doc["connectives"]:
        residual_of = entry.get("residual_of")
        connectives.append(ConnectiveSpec(
            name=entry["name"],
            family=Family(entry["family"]),
            arity=entry["arity"],
            order_type=tuple(Polarity.from_json(e) for e in entry["order_type"]),
            residual_of=(residual_of[0], residual_of[1]) if residual_of else None,
        ))
    return Signature(
        name=doc.get("name", "signature"),
        connectives=tuple(connectives),
        aliases=tuple(sorted(doc.get("aliases", {}).items())),
    )


def signature_to_json(sig: Signature) -> Dict[str, Any]:
    entries = []
    for spec in sig.connectives:
        entry: Dict[str, Any] = {
            "name": spec.name,
            "family": spec.family.value,
            "arity": spec.arity,
            "order_type": [p.to_json() for p in spec.order_type],
        }
        if spec.residual_of is not None:
            entry["residual_of"] = [spec.residual_of[0], spec.residual_of[1]]
        entries.append(entry)
    doc: Dict[str, Any] = {"name": sig.name, "connectives": entries}
    if sig.aliases:
        doc["aliases"] = dict(sig.aliases)
    return doc


def load_signature(path: str | Path, close: bool = True) -> Signature:
    """Read a signature file; by default the residual closure is returned."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise SignatureError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from e
    sig = signature_from_json(doc)
    logger.info("[signature] loaded '%s' from %s (%d connectives)", sig.name, path, len(sig.connectives))
    return close_under_residuals(sig) if close else sig


def write_signature(sig: Signature, path: str | Path) -> None:
    Path(path).write_text(json.dumps(signature_to_json(sig), indent=2, ensure_ascii=False) + "\n")
