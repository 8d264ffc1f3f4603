# src/loaders/structure_files.py
"""Reading and writing birack, shadow, module and link JSON files.

File problems (missing, unparsable, schema or shape mismatch) raise
StructureFileError; axiom failures of well-formed files propagate as
AxiomViolation from the verifiers.
"""
from __future__ import annotations
from typing import Any, Dict, Optional

from pydantic import ValidationError

from src.algebra.biracks import birack_from_tables, shadow_from_table
from src.diagrams.pd import diagram_from_pd
from src.errors import StructureFileError
from src.models import Birack, LinkDiagram, Shadow, ShadowModuleStructure
from src.validators.json_validator import JSONValidator, load_json


def birack_from_json(data: Any, path: Optional[str] = None) -> Birack:
    JSONValidator("birack").require(data, path)
    n = data["n"]
    for key in ("U", "L"):
        if len(data[key]) != n or any(len(row) != n for row in data[key]):
            raise StructureFileError(path, f"{key} must be {n}x{n}")
    return birack_from_tables(data["U"], data["L"])


def shadow_from_json(data: Any, b: Birack, path: Optional[str] = None) -> Shadow:
    JSONValidator("shadow").require(data, path)
    m = data["m"]
    if len(data["action"]) != m or any(len(row) != b.n for row in data["action"]):
        raise StructureFileError(path, f"action must be {m}x{b.n}")
    return shadow_from_table(b, data["action"])


def module_from_json(data: Any, path: Optional[str] = None) -> ShadowModuleStructure:
    JSONValidator("module").require(data, path)
    blocks = sorted(data["blocks"], key=lambda blk: blk["A"])
    if [blk["A"] for blk in blocks] != list(range(1, len(blocks) + 1)):
        raise StructureFileError(path, "blocks must cover A = 1..m exactly once")
    try:
        return ShadowModuleStructure(
            ring=data["ring"],
            T=tuple(_table(blk["T"]) for blk in blocks),
            S=tuple(_table(blk["S"]) for blk in blocks),
            R=tuple(_table(blk["R"]) for blk in blocks),
        )
    except ValidationError as e:
        raise StructureFileError(path, e.errors()[0]["msg"])


def _table(rows):
    return tuple(tuple(row) for row in rows)


def module_to_json(ms: ShadowModuleStructure) -> Dict[str, Any]:
    return {
        "kind": "module",
        "ring": ms.ring,
        "blocks": [
            {"A": A + 1, "T": [list(r) for r in ms.T[A]], "S": [list(r) for r in ms.S[A]],
             "R": [list(r) for r in ms.R[A]]}
            for A in range(ms.m)
        ],
    }


def link_from_json(data: Any, path: Optional[str] = None) -> LinkDiagram:
    JSONValidator("link").require(data, path)
    d = diagram_from_pd(data["pd"], data.get("name"))
    expected = data.get("components")
    if expected is not None and expected != len(d.components):
        raise StructureFileError(path, f"declared {expected} components, PD code has {len(d.components)}")
    return d


def load_birack(path: str) -> Birack:
    return birack_from_json(load_json(path), path)


def load_shadow(path: str, b: Birack) -> Shadow:
    return shadow_from_json(load_json(path), b, path)


def load_module(path: str) -> ShadowModuleStructure:
    return module_from_json(load_json(path), path)


def load_link_file(path: str) -> LinkDiagram:
    return link_from_json(load_json(path), path)


def load_expected(path: str) -> Dict[str, str]:
    """Expected invariant values by link name, written like `4u^5 + 2u^25`; spaces are dropped."""
    data = JSONValidator("expected").require(load_json(path), path)
    return {name: "".join(text.split()) for name, text in data["values"].items()}
