# src/algebra/shadow_algebra.py
"""Relations of the shadow algebra Z[X,S] and Z_k-module structures over it.

A module structure assigns t_{A,x,y}, r_{A,x,y} (units) and s_{A,x,y} in Z_k
to every (A,x,y). The seven relation families come from the labeled
Reidemeister III move (families 1-6) and the N-phone-cord move (family 7).
"""
from __future__ import annotations
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import structlog

from src.algebra.zn import is_unit, power, units
from src.errors import NotAUnit, PreconditionFailed
from src.models import (
    Birack,
    GeneratorIndex,
    Monomial,
    RelationInstance,
    Shadow,
    ShadowModuleStructure,
)

logger = structlog.get_logger()


def _gen(kind: str, A: int, x: int, y: int) -> GeneratorIndex:
    # 0-based in, 1-based out
    return GeneratorIndex(kind=kind, A=A + 1, x=x + 1, y=y + 1)


def _mono(coeff: int, *factors: GeneratorIndex) -> Monomial:
    return Monomial(coeff=coeff, factors=tuple(factors))


def _reidemeister_three(b: Birack, sh: Shadow, A: int, x: int, y: int, z: int) -> List[RelationInstance]:
    up, low, act = b.b1, b.b2, sh.act
    x_y = low[x][y]
    y_z = low[y][z]
    z_y = up[y][z]           # z^y
    y_x = up[x][y]           # y^x
    x_zy = low[x][z_y]       # x_{z^y}
    x_yz = low[x_y][z]       # x_{yz} = (x_y)_z
    z_xy = up[x_y][z]        # z^{x_y}
    Az, Ayz, U = act[A][z], act[A][y_z], act[A][x_yz]

    def g(kind: str, B: int, p: int, q: int) -> GeneratorIndex:
        return _gen(kind, B, p, q)

    params = (A + 1, x + 1, y + 1, z + 1)
    families = [
        (_mono(1, g("r", A, x_zy, y_z), g("r", Ayz, x, z_y)),
         _mono(-1, g("r", A, x_y, z), g("r", Az, x, y))),
        (_mono(1, g("t", A, x_zy, y_z), g("r", A, y, z)),
         _mono(-1, g("r", U, y_x, z_xy), g("t", Az, x, y))),
        (_mono(1, g("s", A, x_zy, y_z), g("r", Ayz, x, z_y)),
         _mono(-1, g("r", U, y_x, z_xy), g("s", Az, x, y))),
        (_mono(1, g("t", Ayz, x, z_y), g("t", A, y, z)),
         _mono(-1, g("t", U, y_x, z_xy), g("t", A, x_y, z))),
        (_mono(1, g("t", Ayz, x, z_y), g("s", A, y, z)),
         _mono(-1, g("s", U, y_x, z_xy), g("t", Az, x, y))),
        (_mono(1, g("s", Ayz, x, z_y)),
         _mono(-1, g("t", U, y_x, z_xy), g("s", A, x_y, z), g("r", Az, x, y)),
         _mono(-1, g("s", U, y_x, z_xy), g("s", Az, x, y))),
    ]
    return [RelationInstance(family=i + 1, params=params, terms=terms) for i, terms in enumerate(families)]


def _phone_cord(b: Birack, sh: Shadow, A: int, x: int) -> RelationInstance:
    cycle = []
    for k in range(b.rank):
        p = power(b.pi, k)(x + 1) - 1
        a = b.alpha(p + 1) - 1
        C = sh.act_inv[A][a]
        cycle.append((_mono(1, _gen("t", C, p, a), _gen("r", C, p, a)), _mono(1, _gen("s", C, p, a))))
    return RelationInstance(family=7, params=(A + 1, x + 1), cycle=tuple(cycle))


def generate_relations(b: Birack, sh: Shadow) -> List[RelationInstance]:
    """Families 1-6 for every (A,x,y,z), then family 7 for every (A,x)."""
    S, X = range(sh.m), range(b.n)
    by_family: List[List[RelationInstance]] = [[] for _ in range(6)]
    for A, x, y, z in product(S, X, X, X):
        for i, rel in enumerate(_reidemeister_three(b, sh, A, x, y, z)):
            by_family[i].append(rel)
    relations = [rel for family in by_family for rel in family]
    relations.extend(_phone_cord(b, sh, A, x) for A, x in product(S, X))
    return relations


def _product(mono: Monomial, ms: ShadowModuleStructure) -> int:
    v = mono.coeff
    for g in mono.factors:
        v *= ms.value(g)
    return v


def evaluate(rel: RelationInstance, ms: ShadowModuleStructure) -> int:
    k = ms.ring
    if rel.family == 7:
        acc = 1
        for factor in rel.cycle:
            acc = acc * sum(_product(m, ms) for m in factor) % k
        return (1 - acc) % k
    return sum(_product(m, ms) for m in rel.terms) % k


def _check_shape(ms: ShadowModuleStructure, b: Birack, sh: Shadow) -> None:
    if ms.m != sh.m or ms.n != b.n:
        raise PreconditionFailed(
            f"module blocks are {ms.m}x({ms.n}x{ms.n}), expected {sh.m}x({b.n}x{b.n})")


def verify_module(
    ms: ShadowModuleStructure, b: Birack, sh: Shadow
) -> Tuple[bool, Optional[RelationInstance]]:
    """(True, None) when every relation vanishes, else (False, first failing instance)."""
    _check_shape(ms, b, sh)
    for A, x in product(range(ms.m), range(ms.n)):
        for kind, fam in (("t", ms.T), ("r", ms.R)):
            for y, v in enumerate(fam[A][x]):
                if not is_unit(v, ms.ring):
                    raise NotAUnit((kind, A + 1, x + 1, y + 1), v, ms.ring)
    for rel in generate_relations(b, sh):
        if evaluate(rel, ms):
            logger.debug("relation failed", family=rel.family, params=rel.params)
            return False, rel
    return True, None


def constant_module(b: Birack, sh: Shadow, k: int) -> ShadowModuleStructure:
    """t = 1, s = 0, r = 1 everywhere."""
    ones = tuple(tuple(tuple(1 for _ in range(b.n)) for _ in range(b.n)) for _ in range(sh.m))
    zeros = tuple(tuple(tuple(0 for _ in range(b.n)) for _ in range(b.n)) for _ in range(sh.m))
    return ShadowModuleStructure(ring=k, T=ones, S=zeros, R=ones)


# ---------------------------------------------------------------- search

_KIND_OFFSET = {"t": 0, "s": 1, "r": 2}


class _CompiledSearch:
    """Relations rewritten over positions of the flattened [T|S|R] matrix.

    Each relation is checked exactly once, when the largest position it
    mentions is assigned, so a depth-first walk in position order with
    ascending values visits solutions in lexicographic order.
    """

    def __init__(self, b: Birack, sh: Shadow, k: int):
        self.m, self.n, self.k = sh.m, b.n, k
        self.size = 3 * sh.m * b.n * b.n
        self.domains: List[Tuple[int, ...]] = []
        unit_values, all_values = tuple(units(k)), tuple(range(k))
        for pos in range(self.size):
            kind = (pos % (3 * self.n)) // self.n
            self.domains.append(all_values if kind == 1 else unit_values)
        self.checks: List[List[Tuple[str, tuple]]] = [[] for _ in range(self.size)]
        for rel in generate_relations(b, sh):
            gens = rel.generators()
            last = max(self.position(g) for g in gens)
            if rel.family == 7:
                body = tuple((self.position(f[0].factors[0]), self.position(f[0].factors[1]),
                              self.position(f[1].factors[0])) for f in rel.cycle)
                self.checks[last].append(("cycle", body))
            else:
                body = tuple((m.coeff, tuple(self.position(g) for g in m.factors)) for m in rel.terms)
                self.checks[last].append(("sum", body))

    def position(self, g: GeneratorIndex) -> int:
        n = self.n
        return (g.A - 1) * 3 * n * n + (g.x - 1) * 3 * n + _KIND_OFFSET[g.kind] * n + (g.y - 1)

    def holds(self, pos: int, values: Sequence[int]) -> bool:
        k = self.k
        for shape, body in self.checks[pos]:
            if shape == "sum":
                total = 0
                for coeff, positions in body:
                    term = coeff
                    for p in positions:
                        term *= values[p]
                    total += term
                if total % k:
                    return False
            else:
                acc = 1
                for pt, pr, ps in body:
                    acc = acc * (values[pt] * values[pr] + values[ps]) % k
                if (1 - acc) % k:
                    return False
        return True

    def walk(self, prefix: Sequence[int] = ()) -> Iterator[Tuple[int, ...]]:
        values = list(prefix) + [0] * (self.size - len(prefix))
        for pos in range(len(prefix)):
            if values[pos] not in self.domains[pos] or not self.holds(pos, values):
                return
        yield from self._walk(len(prefix), values)

    def _walk(self, pos: int, values: List[int]) -> Iterator[Tuple[int, ...]]:
        if pos == self.size:
            yield tuple(values)
            return
        for v in self.domains[pos]:
            values[pos] = v
            if self.holds(pos, values):
                yield from self._walk(pos + 1, values)

    def structure(self, flat: Sequence[int]) -> ShadowModuleStructure:
        n = self.n
        blocks: Dict[str, List[tuple]] = {"t": [], "s": [], "r": []}
        for A in range(self.m):
            rows = [flat[(A * n + x) * 3 * n:(A * n + x + 1) * 3 * n] for x in range(n)]
            for kind, off in _KIND_OFFSET.items():
                blocks[kind].append(tuple(tuple(r[off * n:(off + 1) * n]) for r in rows))
        return ShadowModuleStructure(ring=self.k, T=tuple(blocks["t"]),
                                     S=tuple(blocks["s"]), R=tuple(blocks["r"]))


def compile_search(b: Birack, sh: Shadow, k: int) -> _CompiledSearch:
    if k < 2:
        raise PreconditionFailed(f"ring modulus must be at least 2, got {k}")
    return _CompiledSearch(b, sh, k)


def iter_modules(
    b: Birack, sh: Shadow, k: int, prefix: Sequence[int] = (), limit: Optional[int] = None
) -> Iterator[ShadowModuleStructure]:
    """Structures whose flattened matrix starts with `prefix`, yielded in lexicographic order."""
    compiled = compile_search(b, sh, k)
    for count, flat in enumerate(compiled.walk(prefix), start=1):
        yield compiled.structure(flat)
        if limit is not None and count >= limit:
            return


def search_branch(
    b: Birack, sh: Shadow, k: int, prefix: Sequence[int] = (), limit: Optional[int] = None
) -> List[ShadowModuleStructure]:
    return list(iter_modules(b, sh, k, prefix, limit))


def root_values(k: int) -> List[int]:
    """Values of the first flattened entry t_{1,1,1}; one search branch each."""
    return units(k)


def search_modules(
    b: Birack, sh: Shadow, k: int, limit: Optional[int] = None
) -> List[ShadowModuleStructure]:
    found = search_branch(b, sh, k, limit=limit)
    logger.info("module search finished", ring=k, found=len(found), limit=limit)
    return found


def search_modules_naive(b: Birack, sh: Shadow, k: int) -> List[ShadowModuleStructure]:
    """Every assignment evaluated against every relation; tiny inputs only."""
    compiled = compile_search(b, sh, k)
    relations = generate_relations(b, sh)
    found = []
    for flat in product(*compiled.domains):
        ms = compiled.structure(flat)
        if all(evaluate(rel, ms) == 0 for rel in relations):
            found.append(ms)
    return found
