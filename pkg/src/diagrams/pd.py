# src/diagrams/pd.py
"""Oriented link diagrams from PD codes.

X(a,b,c,d) lists the four semiarcs around a crossing counterclockwise,
starting from the inbound understrand a; the understrand runs a -> c. The
crossing is positive when the overstrand runs d -> b and negative when it
runs b -> d.

Corner (j, i) is the quadrant of crossing j between positions i and i+1.
Faces are the orbits of corner tracing: leave corner (j, i) along the
semiarc at position i+1 and land in the corner that follows the other end
of that semiarc.
"""
from __future__ import annotations
from collections import deque
from typing import Deque, Dict, List, Optional, Sequence, Tuple, Union

import structlog

from src.errors import MalformedPD, NonOrientable, NonPlanar
from src.models import Crossing, Face, LinkDiagram, PDCode, Semiarc

logger = structlog.get_logger()

Slot = Tuple[int, int]
PDLike = Union[PDCode, Sequence[Sequence[int]]]


def _as_tuples(pd: PDLike) -> Tuple[Tuple[int, int, int, int], ...]:
    rows = pd.crossings if isinstance(pd, PDCode) else pd
    out = []
    for j, row in enumerate(rows):
        if len(row) != 4:
            raise MalformedPD(f"crossing {j} has {len(row)} entries, expected 4")
        try:
            out.append(tuple(int(v) for v in row))
        except (TypeError, ValueError):
            raise MalformedPD(f"crossing {j} has non-integer entries: {row!r}")
    return tuple(out)


def _occurrences(pd: Sequence[Tuple[int, int, int, int]]) -> Dict[int, List[Slot]]:
    occ: Dict[int, List[Slot]] = {}
    for j, row in enumerate(pd):
        for i, e in enumerate(row):
            occ.setdefault(e, []).append((j, i))
    bad = sorted(e for e, slots in occ.items() if len(slots) != 2)
    if bad:
        raise MalformedPD(f"semiarc {bad[0]} appears {len(occ[bad[0]])} times, expected 2")
    return occ


def _other(occ: Dict[int, List[Slot]], e: int, slot: Slot) -> Slot:
    first, second = occ[e]
    return second if first == slot else first


def _orient(pd: Sequence[Tuple[int, int, int, int]], occ: Dict[int, List[Slot]]) -> List[int]:
    """Crossing signs from the strand directions, propagated along semiarcs."""
    inbound: Dict[Slot, bool] = {}
    queue: Deque[Slot] = deque()

    def assign(slot: Slot, value: bool) -> None:
        current = inbound.get(slot)
        if current is None:
            inbound[slot] = value
            queue.append(slot)
        elif current != value:
            e = pd[slot[0]][slot[1]]
            raise NonOrientable(f"semiarc {e} is both inbound and outbound at crossing {slot[0]}")

    def drain() -> None:
        while queue:
            j, i = queue.popleft()
            value = inbound[(j, i)]
            assign(_other(occ, pd[j][i], (j, i)), not value)
            assign((j, (i + 2) % 4), not value)

    for j in range(len(pd)):
        assign((j, 0), True)
        assign((j, 2), False)
    drain()
    for j, (_, b, _, d) in enumerate(pd):
        if (j, 1) in inbound:
            continue
        # strand with no undercrossing: guess from consecutive numbering
        if b == d + 1 or (d != b + 1 and d > b):
            assign((j, 3), True)
        else:
            assign((j, 1), True)
        logger.debug("orientation seeded", crossing=j)
        drain()
    return [1 if inbound[(j, 3)] else -1 for j in range(len(pd))]


def _build(pd: Sequence[Tuple[int, int, int, int]], signs: Sequence[int], name: Optional[str] = None) -> LinkDiagram:
    pd = tuple(tuple(row) for row in pd)
    if not pd:
        return unknot(name)
    occ = _occurrences(pd)

    heads: Dict[int, Slot] = {}
    tails: Dict[int, Slot] = {}
    for j, s in enumerate(signs):
        ins = (0, 3) if s == 1 else (0, 1)
        for i in range(4):
            target = heads if i in ins else tails
            e = pd[j][i]
            if e in target:
                raise NonOrientable(f"semiarc {e} has two {'heads' if i in ins else 'tails'}")
            target[e] = (j, i)

    successor = {e: pd[j][(i + 2) % 4] for e, (j, i) in heads.items()}
    components: List[Tuple[int, ...]] = []
    component_of: Dict[int, int] = {}
    for e in sorted(occ):
        if e in component_of:
            continue
        cycle, cur = [], e
        while cur not in component_of:
            component_of[cur] = len(components)
            cycle.append(cur)
            cur = successor[cur]
        components.append(tuple(cycle))

    face_of: Dict[Slot, int] = {}
    faces: List[Face] = []
    for j in range(len(pd)):
        for i in range(4):
            if (j, i) in face_of:
                continue
            boundary, cur = [], (j, i)
            while cur not in face_of:
                face_of[cur] = len(faces)
                edge_slot = (cur[0], (cur[1] + 1) % 4)
                e = pd[edge_slot[0]][edge_slot[1]]
                boundary.append(e)
                cur = _other(occ, e, edge_slot)
            faces.append(Face(id=len(faces), boundary=tuple(boundary)))

    V, E, F = len(pd), len(occ), len(faces)
    if V - E + F != 2:
        raise NonPlanar(f"V - E + F = {V} - {E} + {F} != 2")

    semiarcs = []
    for e in sorted(occ):
        j, i = heads[e]
        semiarcs.append(Semiarc(
            id=e, component=component_of[e], successor=successor[e],
            right_face=face_of[(j, i)], left_face=face_of[(j, (i - 1) % 4)],
        ))

    crossings = []
    writhe = [0] * len(components)
    for j, ((a, b, c, d), s) in enumerate(zip(pd, signs)):
        if s == 1:
            over_in, over_out = d, b
            reading = (over_in, a, c, over_out)
            inbound_face, bead_face = face_of[(j, 3)], face_of[(j, 0)]
        else:
            over_in, over_out = b, d
            reading = (over_out, c, a, over_in)
            inbound_face, bead_face = face_of[(j, 0)], face_of[(j, 1)]
        crossings.append(Crossing(
            index=j, pd=(a, b, c, d), sign=s,
            under_in=a, under_out=c, over_in=over_in, over_out=over_out,
            reading=reading, inbound_face=inbound_face, bead_face=bead_face,
        ))
        if component_of[a] == component_of[b]:
            writhe[component_of[a]] += s

    return LinkDiagram(
        name=name, pd=pd, signs=tuple(signs), crossings=tuple(crossings),
        semiarcs=tuple(semiarcs), faces=tuple(faces),
        components=tuple(components), self_writhe=tuple(writhe),
    )


def unknot(name: Optional[str] = None) -> LinkDiagram:
    """The crossingless circle: one semiarc, outside face 0 on its right."""
    return LinkDiagram(
        name=name, pd=(), signs=(), crossings=(),
        semiarcs=(Semiarc(id=1, component=0, successor=1, left_face=1, right_face=0),),
        faces=(Face(id=0, boundary=(1,)), Face(id=1, boundary=(1,))),
        components=((1,),), self_writhe=(0,),
    )


def diagram_from_pd(pd: PDLike, name: Optional[str] = None) -> LinkDiagram:
    rows = _as_tuples(pd)
    if not rows:
        return unknot(name)
    signs = _orient(rows, _occurrences(rows))
    d = _build(rows, signs, name)
    logger.debug("diagram built", name=name, crossings=len(rows),
                 faces=len(d.faces), components=len(d.components))
    return d


def diagram_from_signed_pd(pd: PDLike, signs: Sequence[int], name: Optional[str] = None) -> LinkDiagram:
    """Build with the strand directions fixed by the given crossing signs."""
    rows = _as_tuples(pd)
    if len(signs) != len(rows) or any(s not in (1, -1) for s in signs):
        raise MalformedPD("one sign of +1 or -1 is needed per crossing")
    return _build(rows, tuple(signs), name)


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Switch every crossing; the planar embedding is unchanged."""
    pd, signs = [], []
    for (a, b, c, e), s in zip(d.pd, d.signs):
        if s == 1:
            pd.append((e, a, b, c))
        else:
            pd.append((b, c, e, a))
        signs.append(-s)
    return _build(pd, signs, d.name)


def relabel_along_components(pd: Sequence[Tuple[int, int, int, int]], signs: Sequence[int]) -> List[Tuple[int, int, int, int]]:
    """Renumber semiarcs 1, 2, ... following each component from its lowest id."""
    d = _build(pd, signs)
    mapping: Dict[int, int] = {}
    for cycle in d.components:
        for e in cycle:
            mapping[e] = len(mapping) + 1
    return [tuple(mapping[e] for e in row) for row in pd]


def to_pd(d: LinkDiagram) -> PDCode:
    return PDCode(crossings=d.pd)


def diagram_summary(d: LinkDiagram) -> Dict[str, object]:
    return {
        "name": d.name,
        "crossings": len(d.crossings),
        "semiarcs": len(d.semiarcs),
        "faces": len(d.faces),
        "components": len(d.components),
        "signs": list(d.signs),
        "self_writhe": list(d.self_writhe),
        "pd": [list(row) for row in d.pd],
    }


def max_semiarc(d: LinkDiagram) -> int:
    return max((s.id for s in d.semiarcs), default=0)
