# src/diagrams/moves.py
"""Diagram surgery: framing kinks, Reidemeister II pairs, braid closures and plats."""
from __future__ import annotations
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import structlog

from src.diagrams.pd import diagram_from_signed_pd, max_semiarc, relabel_along_components, unknot
from src.errors import PreconditionFailed
from src.models import LinkDiagram, WritheVector

logger = structlog.get_logger()


def _head_slot(d: LinkDiagram, e: int) -> Tuple[int, int]:
    """(crossing, position) where semiarc e ends."""
    for c in d.crossings:
        for i in ((0, 3) if c.sign == 1 else (0, 1)):
            if c.pd[i] == e:
                return c.index, i
    raise PreconditionFailed(f"semiarc {e} not found")


def _editable(d: LinkDiagram) -> Tuple[List[List[int]], List[int]]:
    return [list(row) for row in d.pd], list(d.signs)


def add_positive_kink(
    d: LinkDiagram, component: int, count: int = 1, semiarc: Optional[int] = None
) -> LinkDiagram:
    """Insert `count` positive kinks on one semiarc of component `component` (0-based).

    The kinks go at the head of `semiarc`, by default the lowest semiarc of the component.
    """
    if not 0 <= component < len(d.components):
        raise PreconditionFailed(f"diagram has no component {component}")
    if count < 0:
        raise PreconditionFailed("kink count must be nonnegative")
    if semiarc is not None and semiarc not in d.components[component]:
        raise PreconditionFailed(f"semiarc {semiarc} is not on component {component}")
    for _ in range(count):
        e = min(d.components[component]) if semiarc is None else semiarc
        if not d.pd:
            pd, signs = [[2, 2, 1, 1]], [1]
        else:
            pd, signs = _editable(d)
            loop, tail = max_semiarc(d) + 1, max_semiarc(d) + 2
            j, i = _head_slot(d, e)
            pd[j][i] = tail
            pd.append([loop, loop, tail, e])
            signs.append(1)
        d = diagram_from_signed_pd(pd, signs, d.name)
    return d


def writhe_targets(d: LinkDiagram, N: int) -> List[Tuple[WritheVector, LinkDiagram]]:
    """One framing-adjusted diagram per w in (Z_N)^c, lexicographic in w."""
    if N < 1:
        raise PreconditionFailed(f"rank must be positive, got {N}")
    targets = []
    for w in product(range(N), repeat=len(d.components)):
        adjusted = d
        for i, (wi, current) in enumerate(zip(w, d.self_writhe)):
            adjusted = add_positive_kink(adjusted, i, (wi - current) % N)
        targets.append((WritheVector(residues=w, modulus=N), adjusted))
    return targets


def add_r2_pair(d: LinkDiagram, over: int, under: int, face: int) -> LinkDiagram:
    """Push semiarc `over` across semiarc `under` through the shared face `face`.

    Both semiarcs are cut in three; the two new crossings have opposite signs.
    """
    if over == under:
        raise PreconditionFailed("the two semiarcs must differ")
    e, f = d.semiarc(over), d.semiarc(under)
    if face not in (e.left_face, e.right_face) or face not in (f.left_face, f.right_face):
        raise PreconditionFailed(f"face {face} does not border both semiarcs {over} and {under}")
    e_fwd = face == e.right_face
    f_fwd = face == f.left_face

    pd, signs = _editable(d)
    top = max_semiarc(d)
    e_mid, e_out, f_mid, f_out = top + 1, top + 2, top + 3, top + 4
    je, ie = _head_slot(d, over)
    jf, i_f = _head_slot(d, under)
    pd[je][ie] = e_out
    pd[jf][i_f] = f_out

    # compass points around each new crossing with f drawn left to right
    # when f_fwd and the finger of e dipping south through it
    north1, north2 = (over, e_out) if e_fwd else (e_out, over)
    west1, east2 = (under, f_out) if f_fwd else (f_out, under)
    first = {"N": north1, "S": e_mid, "W": west1, "E": f_mid}
    second = {"N": north2, "S": e_mid, "W": f_mid, "E": east2}
    order = ("W", "S", "E", "N") if f_fwd else ("E", "N", "W", "S")
    for compass, over_in in ((first, over if e_fwd else e_mid), (second, e_mid if e_fwd else over)):
        row = [compass[k] for k in order]
        pd.append(row)
        signs.append(1 if row[3] == over_in else -1)
    logger.debug("r2 pair inserted", over=over, under=under, face=face)
    return diagram_from_signed_pd(pd, signs, d.name)


def diagram_from_braid(word: Sequence[int], strands: int, name: Optional[str] = None) -> LinkDiagram:
    """Closure of a braid word; i stands for sigma_i and -i for its inverse."""
    if strands < 1:
        raise PreconditionFailed("a braid needs at least one strand")
    if not word:
        if strands == 1:
            return unknot(name)
        raise PreconditionFailed("the closure of a trivial braid on several strands is split")
    cur = list(range(1, strands + 1))
    fresh = strands + 1
    pd: List[List[int]] = []
    signs: List[int] = []
    for g in word:
        i = abs(g)
        if g == 0 or i >= strands:
            raise PreconditionFailed(f"generator {g} out of range for {strands} strands")
        left, right = cur[i - 1], cur[i]
        new_left, new_right = fresh, fresh + 1
        fresh += 2
        if g > 0:
            pd.append([right, new_right, new_left, left])
            signs.append(1)
        else:
            pd.append([left, right, new_right, new_left])
            signs.append(-1)
        # the strand from the left continues on the right and vice versa
        cur[i - 1], cur[i] = new_left, new_right

    closing = {}
    for pos, top in enumerate(cur):
        if top == pos + 1:
            raise PreconditionFailed(f"strand {pos + 1} takes part in no crossing")
        closing[pos + 1] = top
    pd = [[closing.get(e, e) for e in row] for row in pd]
    return diagram_from_signed_pd(relabel_along_components(pd, signs), signs, name)


# corners of a plat crossing, in the cyclic order diagram_from_braid uses:
# 0 upper right, 1 lower right, 2 lower left, 3 upper left
Node = Tuple


def diagram_from_plat(
    word: Sequence[int],
    strands: int,
    caps: Optional[Sequence[Tuple[int, int]]] = None,
    name: Optional[str] = None,
) -> LinkDiagram:
    """Plat closure of a braid word: the same caps join positions above and below it.

    Caps default to (1, 2), (3, 4), ...; they must pair every position once
    and must not cross each other.
    """
    if caps is None:
        if strands < 2 or strands % 2:
            raise PreconditionFailed("a plat needs an even number of strands")
        caps = [(p, p + 1) for p in range(1, strands, 2)]
    if sorted(p for cap in caps for p in cap) != list(range(1, strands + 1)):
        raise PreconditionFailed(f"caps {list(caps)} must pair positions 1..{strands} once each")
    for g in word:
        if g == 0 or abs(g) >= strands:
            raise PreconditionFailed(f"generator {g} out of range for {strands} strands")

    edges: List[Tuple[Node, Node]] = []
    cur: List[Node] = [("top", p) for p in range(strands)]
    for j, g in enumerate(word):
        i = abs(g) - 1
        edges.append((cur[i], ("x", j, 3)))
        edges.append((cur[i + 1], ("x", j, 0)))
        cur[i], cur[i + 1] = ("x", j, 2), ("x", j, 1)
    for p, q in caps:
        edges.append((("top", p - 1), ("top", q - 1)))
        edges.append((cur[p - 1], cur[q - 1]))
    incident: Dict[Node, List[int]] = {}
    for idx, (u, v) in enumerate(edges):
        incident.setdefault(u, []).append(idx)
        incident.setdefault(v, []).append(idx)

    seen_tops = set()

    def walk(corner: Node) -> Node:
        node, idx = corner, incident[corner][0]
        while True:
            u, v = edges[idx]
            node = v if u == node else u
            if node[0] == "x":
                return node
            seen_tops.add(node)
            idx = next(e for e in incident[node] if e != idx)

    label: Dict[Node, int] = {}
    inbound: Dict[Node, bool] = {}
    for j in range(len(word)):
        for k in range(4):
            start = ("x", j, k)
            if start in label:
                continue
            out = start
            while True:
                into = walk(out)
                label[out] = label[into] = len(label) // 2 + 1
                inbound[out], inbound[into] = False, True
                out = ("x", into[1], (into[2] + 2) % 4)
                if out == start:
                    break
    if len(seen_tops) < strands:
        raise PreconditionFailed("the plat has a component without crossings")

    pd: List[List[int]] = []
    signs: List[int] = []
    for j, g in enumerate(word):
        u = next(k for k in ((0, 2) if g > 0 else (1, 3)) if inbound[("x", j, k)])
        pd.append([label[("x", j, (u + r) % 4)] for r in range(4)])
        # positive when the over strand enters just before the under strand
        signs.append(1 if inbound[("x", j, (u + 3) % 4)] else -1)
    return diagram_from_signed_pd(pd, signs, name)


def rational_diagram(coefficients: Sequence[int], name: Optional[str] = None) -> LinkDiagram:
    """Four-plat of the 2-bridge knot or link with Conway notation a_1 a_2 ... a_k."""
    terms = list(coefficients)
    if not terms or any(a < 1 for a in terms):
        raise PreconditionFailed(f"Conway notation {terms} needs positive entries")
    if len(terms) % 2 == 0:
        # a ... b and a ... (b - 1) 1 name the same link
        terms = terms[:-2] + [terms[-2] + 1] if terms[-1] == 1 else terms[:-1] + [terms[-1] - 1, 1]
    word: List[int] = []
    for i, a in enumerate(terms):
        word += [2 if i % 2 == 0 else -1] * a
    return diagram_from_plat(word, 4, name=name)


def pretzel_diagram(twists: Sequence[int], name: Optional[str] = None) -> LinkDiagram:
    """Pretzel link with one column of |p| half twists per entry; the sign picks the handedness."""
    k = len(twists)
    if k < 2 or 0 in twists:
        raise PreconditionFailed(f"pretzel {list(twists)} needs two or more non-zero columns")
    word: List[int] = []
    for i, p in enumerate(twists):
        word += [(2 * i + 1) * (1 if p > 0 else -1)] * abs(p)
    caps = [(2 * i + 2, 2 * i + 3) for i in range(k - 1)] + [(2 * k, 1)]
    return diagram_from_plat(word, 2 * k, caps, name)
