"""
JSON Schema validation for every file format the toolchain reads.

Validators are compiled once per schema file; a violation is re-raised as the
caller's domain error carrying the JSON path of the offending value.
"""
import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Type

import jsonschema

import config

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _validator(schema_name: str):
    schema_path = Path(config.SCHEMA_ROOT) / schema_name
    schema = json.loads(schema_path.read_text())
    validator_cls = jsonschema.validators.validator_for(schema)
    validator_cls.check_schema(schema)
    return validator_cls(schema)


def validate_document(data: Dict[str, Any], schema_name: str, error_cls: Type[Exception]) -> None:
    """Validate `data` against `schema/v1/<schema_name>`, raising `error_cls` on the first violation."""
    try:
        validator = _validator(schema_name)
    except FileNotFoundError:
        logger.warning("[schema] %s not found under %s. Skipping validation.", schema_name, config.SCHEMA_ROOT)
        return
    try:
        validator.validate(data)
    except jsonschema.ValidationError as e:
        where = "/".join(str(p) for p in e.absolute_path) or "<root>"
        logger.error("[schema] %s: %s at %s", schema_name, e.message, where)
        raise error_cls(f"{schema_name} validation failed at {where}: {e.message}") from e
