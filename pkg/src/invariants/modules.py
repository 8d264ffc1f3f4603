# src/invariants/modules.py
"""Fundamental Z[X,S]-modules of labelings and the shadow module invariants."""
from __future__ import annotations
import re
from collections import Counter
from typing import Dict, Iterable, List

import structlog

from src.algebra.zn import count_homogeneous_solutions
from src.diagrams.moves import writhe_targets
from src.errors import PreconditionFailed
from src.invariants.labelings import enumerate_shadow_labelings
from src.models import (
    Birack,
    GeneratorIndex,
    IntMatrix,
    InvariantValue,
    LinkDiagram,
    Monomial,
    PresentationMatrix,
    Shadow,
    ShadowLabeling,
    ShadowModuleStructure,
)

logger = structlog.get_logger()

_TERM = re.compile(r"^(\d+)(?:u(?:\^(\d+))?)?$")


def presentation_matrix(f: ShadowLabeling) -> PresentationMatrix:
    """Two rows per crossing, one bead column per semiarc.

    With beads (a, b, c, d) on the positively read (x, y, B_1, B_2) semiarcs
    and A the label of the region between the inbound under and outbound over
    semiarcs, the rows are t b + s a - c and r a - d.
    """
    d = f.diagram
    columns = tuple(s.id for s in d.semiarcs)
    col = {sid: i for i, sid in enumerate(columns)}
    rows: List[tuple] = []
    for c in d.crossings:
        a, b, cc, dd = c.reading
        x, y = f.semiarc_labels[a], f.semiarc_labels[b]
        A = f.region_labels[c.bead_face]
        t, s, r = (GeneratorIndex(kind=k, A=A, x=x, y=y) for k in "tsr")
        first: List[List[Monomial]] = [[] for _ in columns]
        second: List[List[Monomial]] = [[] for _ in columns]
        first[col[b]].append(Monomial(coeff=1, factors=(t,)))
        first[col[a]].append(Monomial(coeff=1, factors=(s,)))
        first[col[cc]].append(Monomial(coeff=-1))
        second[col[a]].append(Monomial(coeff=1, factors=(r,)))
        second[col[dd]].append(Monomial(coeff=-1))
        rows.append(tuple(tuple(entry) for entry in first))
        rows.append(tuple(tuple(entry) for entry in second))
    return PresentationMatrix(columns=columns, entries=tuple(rows))


def specialize(pm: PresentationMatrix, ms: ShadowModuleStructure) -> IntMatrix:
    def value(entry: Iterable[Monomial]) -> int:
        total = 0
        for mono in entry:
            term = mono.coeff
            for g in mono.factors:
                term *= ms.value(g)
            total += term
        return total % ms.ring

    return IntMatrix(rows=pm.rows, cols=pm.cols,
                     entries=tuple(tuple(value(e) for e in row) for row in pm.entries))


def count_module_homs(pm: PresentationMatrix, ms: ShadowModuleStructure) -> int:
    """|Hom(Z_{X,S}[f], M)| as the number of bead vectors killed by pm over Z_k."""
    return count_homogeneous_solutions(specialize(pm, ms), ms.ring)


def invariant_from_counts(counts: Iterable[int]) -> InvariantValue:
    multiset = tuple(sorted(counts))
    return InvariantValue(multiset=multiset, polynomial=dict(sorted(Counter(multiset).items())))


def shadow_module_invariant(
    d: LinkDiagram, b: Birack, sh: Shadow, ms: ShadowModuleStructure
) -> InvariantValue:
    if ms.m != sh.m or ms.n != b.n or sh.n != b.n:
        raise PreconditionFailed("birack, shadow and module structure do not match in size")
    counts = []
    for _, dw in writhe_targets(d, b.rank):
        for f in enumerate_shadow_labelings(dw, b, sh):
            counts.append(count_module_homs(presentation_matrix(f), ms))
    value = invariant_from_counts(counts)
    logger.debug("shadow module invariant", name=d.name, value=value.to_text())
    return value


def parse_polynomial(text: str) -> Dict[int, int]:
    """Inverse of InvariantValue.to_text: "4u^3 + 4u^27" -> {3: 4, 27: 4}."""
    text = text.strip()
    if text == "0":
        return {}
    poly: Dict[int, int] = {}
    for term in text.split(" + "):
        match = _TERM.match(term.strip())
        if not match:
            raise ValueError(f"cannot parse polynomial term {term!r}")
        coeff, exp = int(match.group(1)), match.group(2)
        if "u" not in term:
            power = 0
        else:
            power = int(exp) if exp is not None else 1
        poly[power] = poly.get(power, 0) + coeff
    return poly
