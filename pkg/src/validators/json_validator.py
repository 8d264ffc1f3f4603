"""
JSON schema validation for structure, link and link table files.
"""
import json
from pathlib import Path
from typing import Any, Dict, List, Optional

import structlog
from jsonschema import Draft7Validator, ValidationError

from src.errors import StructureFileError

logger = structlog.get_logger()

SCHEMA_DIR = Path(__file__).parent / "schemas"
KINDS = ("birack", "shadow", "module", "link", "link_table", "expected")


class JSONValidator:
    """Validates one kind of input document against its bundled Draft 7 schema."""

    def __init__(self, kind: str, schema_path: Optional[str] = None):
        if kind not in KINDS:
            raise ValueError(f"unknown document kind {kind!r}")
        self.kind = kind
        self.schema = self._load_schema(schema_path or SCHEMA_DIR / f"{kind}.schema.json")
        self.validator = Draft7Validator(self.schema)

    def _load_schema(self, schema_path) -> Dict[str, Any]:
        with open(schema_path, "r") as f:
            schema = json.load(f)
        logger.debug("schema loaded", kind=self.kind, path=str(schema_path))
        return schema

    def validate_output(self, data: Any) -> Dict[str, Any]:
        """Validate a parsed document; returns valid/errors/warnings like a report."""
        errors = [self._format_validation_error(e) for e in
                  sorted(self.validator.iter_errors(data), key=lambda e: list(e.absolute_path))]
        warnings = self._check_warnings(data) if not errors else []
        if errors:
            logger.warning("document validation failed", kind=self.kind, errors=len(errors))
        return {"valid": not errors, "errors": errors, "warnings": warnings}

    def require(self, data: Any, path: Optional[str] = None) -> Any:
        """Return `data` unchanged or raise StructureFileError with the first problem."""
        result = self.validate_output(data)
        if not result["valid"]:
            raise StructureFileError(path, result["errors"][0])
        for w in result["warnings"]:
            logger.warning("document warning", kind=self.kind, path=path, warning=w)
        return data

    def _format_validation_error(self, error: ValidationError) -> str:
        path = " -> ".join(str(p) for p in error.absolute_path)
        if path:
            return f"Error at {path}: {error.message}"
        return f"Error: {error.message}"

    def _check_warnings(self, data: Dict[str, Any]) -> List[str]:
        """Non-fatal oddities that still parse."""
        warnings = []
        if self.kind == "module":
            seen = [block["A"] for block in data["blocks"]]
            if seen != sorted(seen):
                warnings.append("module blocks are not listed in order of A")
        if self.kind in ("link", "link_table"):
            entries = data["links"] if self.kind == "link_table" else [data]
            for entry in entries:
                pd = entry.get("pd")
                if pd is not None and "crossings" in entry and len(pd) != entry["crossings"]:
                    warnings.append(f"{entry.get('name', '<link>')}: {len(pd)} PD tuples for "
                                    f"{entry['crossings']} crossings")
        return warnings


def load_json(path: str) -> Any:
    try:
        with open(path, "r") as f:
            return json.load(f)
    except OSError as e:
        raise StructureFileError(path, e.strerror or str(e))
    except json.JSONDecodeError as e:
        raise StructureFileError(path, f"invalid JSON: {e.msg} at line {e.lineno}")
