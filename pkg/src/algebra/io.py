import json
import logging
from pathlib import Path
from typing import Any, Dict

import numpy as np

from errors import AlgebraError
from schema_validation import validate_document
from signature import Signature
from .model import FiniteLEAlgebra, build_algebra, validate_algebra

logger = logging.getLogger(__name__)


def algebra_to_json(alg: FiniteLEAlgebra, primitives_only: bool = True) -> Dict[str, Any]:
    """Order rows as bit strings; tables flattened row-major."""
    names = [c.name for c in alg.signature.primitives] if primitives_only else sorted(alg.tables)
    return {
        "signature": alg.signature.name,
        "size": alg.size,
        "leq": ["".join("1" if bit else "0" for bit in row) for row in alg.leq],
        "tables": {name: [int(v) for v in alg.table(name).reshape(-1)] for name in names},
    }


def algebra_from_json(doc: Dict[str, Any], sig: Signature) -> FiniteLEAlgebra:
    validate_document(doc, "algebra.schema.json", AlgebraError)
    n = doc["size"]
    rows = doc["leq"]
    if len(rows) != n or any(len(row) != n for row in rows):
        raise AlgebraError(f"leq must be {n} rows of {n} bits")
    leq = np.array([[ch == "1" for ch in row] for row in rows], dtype=bool)
    primitive = {}
    for spec in sig.primitives:
        flat = doc["tables"].get(spec.name)
        if flat is None:
            raise AlgebraError(f"Missing table for connective '{spec.name}'")
        if len(flat) != n ** spec.arity or any(not 0 <= v < n for v in flat):
            raise AlgebraError(f"Table for '{spec.name}' must list {n ** spec.arity} elements in 0..{n - 1}")
        primitive[spec.name] = np.array(flat, dtype=np.int64).reshape((n,) * spec.arity)
    alg = build_algebra(sig, leq, primitive, label=doc.get("label", sig.name))
    problems = validate_algebra(alg)
    if problems:
        raise AlgebraError("Not an LE-algebra: " + "; ".join(problems))
    return alg


def load_algebra(path: str | Path, sig: Signature) -> FiniteLEAlgebra:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise AlgebraError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from e
    alg = algebra_from_json(doc, sig)
    logger.info("[algebra] loaded %d-element algebra from %s", alg.size, path)
    return alg


def write_algebra(alg: FiniteLEAlgebra, path: str | Path) -> None:
    Path(path).write_text(json.dumps(algebra_to_json(alg), indent=2) + "\n")
