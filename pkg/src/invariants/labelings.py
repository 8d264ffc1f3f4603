# src/invariants/labelings.py
"""Birack and shadow labelings of diagrams and the counting invariants."""
from __future__ import annotations
from collections import deque
from typing import Dict, List, Optional

import structlog

from src.diagrams.moves import writhe_targets
from src.errors import PropagationInconsistency
from src.models import Birack, LinkDiagram, Shadow, ShadowLabeling, WritheVector

logger = structlog.get_logger()

Labels = Dict[int, int]


def _propagate(d: LinkDiagram, b: Birack, labels: Dict[int, int]) -> bool:
    """Fill in every label forced by B, B^{-1} or the sideways map (0-based labels).

    Returns False on a contradiction.
    """

    def put(sid: int, value: int) -> Optional[bool]:
        current = labels.get(sid)
        if current is None:
            labels[sid] = value
            return True
        return None if current == value else False

    changed = True
    while changed:
        changed = False
        for c in d.crossings:
            # positive reading: out_under = B_1(x, y), out_over = B_2(x, y)
            sx, sy, s1, s2 = c.reading
            x, y, u, v = (labels.get(s) for s in c.reading)
            implied = []
            if x is not None and y is not None:
                implied = [(s1, b.b1[x][y]), (s2, b.b2[x][y])]
            elif u is not None and v is not None:
                px, py = b.inverse[u][v]
                implied = [(sx, px), (sy, py)]
            elif u is not None and x is not None:
                pv, py = b.sideways[u][x]
                implied = [(s2, pv), (sy, py)]
            for sid, value in implied:
                outcome = put(sid, value)
                if outcome is False:
                    return False
                changed = changed or bool(outcome)
    return True


def enumerate_birack_labelings(d: LinkDiagram, b: Birack) -> List[Labels]:
    """All semiarc labelings satisfying the crossing conditions, 1-based labels."""
    ids = [s.id for s in d.semiarcs]
    found: List[Labels] = []

    def search(labels: Dict[int, int]) -> None:
        if not _propagate(d, b, labels):
            return
        free = next((sid for sid in ids if sid not in labels), None)
        if free is None:
            found.append({sid: labels[sid] + 1 for sid in ids})
            return
        for value in range(b.n):
            branch = dict(labels)
            branch[free] = value
            search(branch)

    search({})
    return found


def _region_labels(d: LinkDiagram, sh: Shadow, arcs: Labels, seed: int) -> Dict[int, int]:
    """Push a shadow label from face 0 across semiarcs: left = right . label."""
    neighbours: Dict[int, list] = {f.id: [] for f in d.faces}
    for s in d.semiarcs:
        x = arcs[s.id] - 1
        neighbours[s.right_face].append((s.left_face, x, True))
        neighbours[s.left_face].append((s.right_face, x, False))
    regions = {0: seed}
    queue = deque([0])
    while queue:
        face = queue.popleft()
        A = regions[face]
        for other, x, forward in neighbours[face]:
            value = sh.act[A][x] if forward else sh.act_inv[A][x]
            if other not in regions:
                regions[other] = value
                queue.append(other)
            elif regions[other] != value:
                raise PropagationInconsistency(
                    f"face {other} reached with shadow labels {regions[other] + 1} and {value + 1}")
    return {face: A + 1 for face, A in sorted(regions.items())}


def diagram_writhe(d: LinkDiagram, N: int) -> WritheVector:
    return WritheVector(residues=tuple(w % N for w in d.self_writhe), modulus=N)


def enumerate_shadow_labelings(d: LinkDiagram, b: Birack, sh: Shadow) -> List[ShadowLabeling]:
    writhe = diagram_writhe(d, b.rank)
    out = []
    for arcs in enumerate_birack_labelings(d, b):
        for A in range(sh.m):
            out.append(ShadowLabeling(
                diagram=d, semiarc_labels=arcs,
                region_labels=_region_labels(d, sh, arcs, A), writhe=writhe,
            ))
    return out


def birack_counting_invariant(d: LinkDiagram, b: Birack) -> int:
    """Sum over a full period of framings of the number of birack labelings."""
    total = sum(len(enumerate_birack_labelings(dw, b)) for _, dw in writhe_targets(d, b.rank))
    logger.debug("birack counting invariant", name=d.name, value=total)
    return total


def shadow_counting_invariant(d: LinkDiagram, b: Birack, sh: Shadow) -> int:
    return sum(len(enumerate_shadow_labelings(dw, b, sh)) for _, dw in writhe_targets(d, b.rank))
