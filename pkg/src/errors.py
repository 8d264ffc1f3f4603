# src/errors.py
from __future__ import annotations
from typing import Any, Optional, Tuple


class ShadowInvarError(Exception):
    """Base class for every recoverable error raised by the package."""


class AxiomViolation(ShadowInvarError):
    """A birack or shadow table breaks one of its axioms.

    `axiom` is a short id ("bijective", "sideways", "diagonal", "ybe",
    "action-invertible", "shadow-i", "shadow-ii", ...) and `witness` is the
    first failing tuple in lexicographic order, 1-based.
    """

    def __init__(self, axiom: str, witness: Tuple[int, ...], detail: str = ""):
        self.axiom = axiom
        self.witness = tuple(witness)
        self.detail = detail
        msg = f"axiom {axiom} violated at {self.witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class PreconditionFailed(ShadowInvarError):
    pass


class NotAUnit(ShadowInvarError):
    def __init__(self, index: Tuple[Any, ...], value: int, modulus: int):
        self.index = tuple(index)
        self.value = value
        self.modulus = modulus
        super().__init__(f"{index[0]}{tuple(index[1:])} = {value} is not a unit mod {modulus}")


class MalformedPD(ShadowInvarError):
    pass


class NonOrientable(ShadowInvarError):
    pass


class NonPlanar(ShadowInvarError):
    pass


class StructureFileError(ShadowInvarError):
    def __init__(self, path: Optional[str], reason: str):
        self.path = path
        self.reason = reason
        super().__init__(f"{path or '<input>'}: {reason}")


class UnknownLink(ShadowInvarError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown link {name!r}")


class PropagationInconsistency(AssertionError):
    """Region labels disagreed while pushing a shadow label across semiarcs.

    Cannot happen for verified structures; raised as an assertion.
    """
