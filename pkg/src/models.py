# Pydantic models for the shadow module invariant toolkit
from __future__ import annotations
import os
from pydantic import BaseModel, ConfigDict, Field, conint, model_validator
from typing import Dict, List, Literal, Optional, Tuple

Table = Tuple[Tuple[int, ...], ...]


class Frozen(BaseModel):
    model_config = ConfigDict(frozen=True)


# ---------------------------------------------------------------- Z_n algebra

class Residue(Frozen):
    value: int
    modulus: conint(ge=1)

    @model_validator(mode="after")
    def _in_range(self):
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"residue {self.value} outside [0, {self.modulus})")
        return self


class Permutation(Frozen):
    images: Tuple[int, ...]  # 1-based: images[i-1] = p(i)

    @model_validator(mode="after")
    def _bijective(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")
        return self

    def __call__(self, i: int) -> int:
        return self.images[i - 1]


class IntMatrix(Frozen):
    rows: conint(ge=0)
    cols: conint(ge=0)
    entries: Table

    @model_validator(mode="after")
    def _dims(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"entries do not match declared shape {self.rows}x{self.cols}")
        return self

    @classmethod
    def of(cls, entries: List[List[int]], cols: Optional[int] = None) -> "IntMatrix":
        rows = tuple(tuple(int(v) for v in r) for r in entries)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(rows=len(rows), cols=cols, entries=rows)


# ---------------------------------------------------------------- biracks

class Birack(Frozen):
    """A verified finite birack.

    `U` and `L` are the 1-based tables of the block matrix [U|L]; the
    remaining tables are 0-based and derived at construction time.
    """
    n: conint(ge=1)
    U: Table
    L: Table
    b1: Table                                  # b1[x][y] = B_1(x, y)
    b2: Table                                  # b2[x][y] = B_2(x, y)
    inverse: Tuple[Tuple[Tuple[int, int], ...], ...]   # inverse[u][v] = B^{-1}(u, v)
    sideways: Tuple[Tuple[Tuple[int, int], ...], ...]  # sideways[a][b] = S(a, b)
    alpha: Permutation
    pi: Permutation
    rank: conint(ge=1)


class Shadow(Frozen):
    m: conint(ge=1)
    n: conint(ge=1)
    action: Table      # 1-based: action[i][j] = k where A_k = A_i . x_j
    act: Table         # 0-based
    act_inv: Table     # 0-based: act_inv[A][x] = C with C . x = A


# ---------------------------------------------------------------- shadow algebra

class GeneratorIndex(Frozen):
    kind: Literal["t", "s", "r"]
    A: conint(ge=1)
    x: conint(ge=1)
    y: conint(ge=1)

    def __str__(self) -> str:
        return f"{self.kind}_{{{self.A},{self.x},{self.y}}}"


class Monomial(Frozen):
    coeff: int
    factors: Tuple[GeneratorIndex, ...] = ()

    def __str__(self) -> str:
        body = "".join(str(f) for f in self.factors)
        if not body:
            return str(self.coeff)
        if self.coeff == 1:
            return body
        if self.coeff == -1:
            return f"-{body}"
        return f"{self.coeff}{body}"


class RelationInstance(Frozen):
    """One generator of the relation ideal.

    Families 1-6 are the signed sum `terms`; family 7 is
    `1 - prod(sum(c) for c in cycle)`.
    """
    family: conint(ge=1, le=7)
    params: Tuple[int, ...]
    terms: Tuple[Monomial, ...] = ()
    cycle: Tuple[Tuple[Monomial, ...], ...] = ()

    def generators(self) -> Tuple[GeneratorIndex, ...]:
        seen: Dict[GeneratorIndex, None] = {}
        for mono in self.terms:
            for g in mono.factors:
                seen.setdefault(g)
        for factor in self.cycle:
            for mono in factor:
                for g in mono.factors:
                    seen.setdefault(g)
        return tuple(seen)

    def __str__(self) -> str:
        if self.family == 7:
            prod = "".join("(" + " + ".join(str(m) for m in f) + ")" for f in self.cycle)
            return f"1 - {prod}"
        return " + ".join(str(m) for m in self.terms).replace("+ -", "- ")


class ShadowModuleStructure(Frozen):
    ring: conint(ge=2)
    T: Tuple[Table, ...]   # T[A-1][x-1][y-1] = t_{A,x,y}
    S: Tuple[Table, ...]
    R: Tuple[Table, ...]

    @model_validator(mode="after")
    def _shapes(self):
        if not (len(self.T) == len(self.S) == len(self.R)):
            raise ValueError("T, S and R must have one block per shadow element")
        n = len(self.T[0]) if self.T else 0
        for kind, fam in (("T", self.T), ("S", self.S), ("R", self.R)):
            for A, block in enumerate(fam, start=1):
                if len(block) != n or any(len(row) != n for row in block):
                    raise ValueError(f"{kind} block for A={A} must be {n}x{n}")
                for row in block:
                    for v in row:
                        if not 0 <= v < self.ring:
                            raise ValueError(f"entry {v} outside Z_{self.ring}")
        return self

    @property
    def m(self) -> int:
        return len(self.T)

    @property
    def n(self) -> int:
        return len(self.T[0]) if self.T else 0

    def value(self, g: GeneratorIndex) -> int:
        fam = {"t": self.T, "s": self.S, "r": self.R}[g.kind]
        return fam[g.A - 1][g.x - 1][g.y - 1]

    def flattened(self) -> Tuple[int, ...]:
        """Row-major reading of the block matrix [T|S|R], row-block per A."""
        out: List[int] = []
        for a in range(self.m):
            for i in range(self.n):
                out.extend(self.T[a][i])
                out.extend(self.S[a][i])
                out.extend(self.R[a][i])
        return tuple(out)


# ---------------------------------------------------------------- diagrams

class PDCode(Frozen):
    crossings: Tuple[Tuple[int, int, int, int], ...]


class Crossing(Frozen):
    index: int
    pd: Tuple[int, int, int, int]
    sign: Literal[1, -1]
    under_in: int
    under_out: int
    over_in: int
    over_out: int
    # beads (a, b, c, d) in the positive reading:
    # (inbound-over, inbound-under, outbound-under, outbound-over)
    reading: Tuple[int, int, int, int]
    inbound_face: int   # quadrant between the two inbound semiarcs
    bead_face: int      # quadrant between inbound-under and outbound-over (positive reading)


class Semiarc(Frozen):
    id: int
    component: int
    successor: int
    left_face: int
    right_face: int


class Face(Frozen):
    id: int
    boundary: Tuple[int, ...]   # semiarc ids, with repetition when a semiarc borders the face twice


class LinkDiagram(Frozen):
    name: Optional[str] = None
    pd: Tuple[Tuple[int, int, int, int], ...]
    signs: Tuple[int, ...]
    crossings: Tuple[Crossing, ...]
    semiarcs: Tuple[Semiarc, ...]
    faces: Tuple[Face, ...]
    components: Tuple[Tuple[int, ...], ...]
    self_writhe: Tuple[int, ...]

    def semiarc(self, sid: int) -> Semiarc:
        for s in self.semiarcs:
            if s.id == sid:
                return s
        raise KeyError(sid)

    @property
    def writhe(self) -> int:
        return sum(self.signs)


class WritheVector(Frozen):
    residues: Tuple[int, ...]
    modulus: conint(ge=1)

    @model_validator(mode="after")
    def _in_range(self):
        if any(not 0 <= w < self.modulus for w in self.residues):
            raise ValueError(f"writhe residues {self.residues} outside Z_{self.modulus}")
        return self


# ---------------------------------------------------------------- invariants

class ShadowLabeling(Frozen):
    diagram: LinkDiagram
    semiarc_labels: Dict[int, int]   # semiarc id -> birack element (1-based)
    region_labels: Dict[int, int]    # face id -> shadow element (1-based)
    writhe: WritheVector


class PresentationMatrix(Frozen):
    columns: Tuple[int, ...]                          # semiarc id of each column
    entries: Tuple[Tuple[Tuple[Monomial, ...], ...], ...]

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.columns)


class InvariantValue(Frozen):
    multiset: Tuple[int, ...]
    polynomial: Dict[int, int]

    def to_text(self) -> str:
        if not self.polynomial:
            return "0"
        parts = []
        for exp in sorted(self.polynomial):
            coeff = self.polynomial[exp]
            if exp == 0:
                parts.append(str(coeff))
            elif exp == 1:
                parts.append(f"{coeff}u")
            else:
                parts.append(f"{coeff}u^{exp}")
        return " + ".join(parts)

    def to_json(self) -> Dict[str, object]:
        return {
            "multiset": list(self.multiset),
            "polynomial": {str(k): v for k, v in sorted(self.polynomial.items())},
        }


# ---------------------------------------------------------------- CLI

WORKERS_ENV = "SHADOW_INVAR_WORKERS"


class RunConfig(BaseModel):
    subcommand: Literal["check", "rank", "search-modules", "invariant", "table", "diagram", "build-table"]
    check_kind: Optional[Literal["birack", "shadow", "module"]] = None
    birack: Optional[str] = None
    shadow: Optional[str] = None
    module: Optional[str] = None
    ring: Optional[conint(ge=2)] = None
    link: Optional[str] = None
    pd: Optional[str] = None
    format: Literal["text", "json"] = "text"
    limit: Optional[conint(ge=1)] = None
    mirror: bool = False
    max_crossings: conint(ge=0) = 8
    max_link_crossings: Optional[conint(ge=0)] = None
    include_links: bool = False
    extra: List[str] = Field(default_factory=list)
    workers: conint(ge=1) = 1
    output: Optional[str] = None
    expect: Optional[str] = None

    @model_validator(mode="before")
    @classmethod
    def _workers_from_env(cls, data):
        # --workers wins; otherwise the environment, parsed like the flag
        if isinstance(data, dict) and data.get("workers") is None \
                and data.get("subcommand") in ("search-modules", "table"):
            env = (os.environ.get(WORKERS_ENV) or "").strip()
            if env:
                data = {**data, "workers": env}
        return data


class TableRow(BaseModel):
    name: str
    value: InvariantValue
    mirror: bool = False
    matched: Optional[bool] = None              # None when no value was expected
    other_value: Optional[InvariantValue] = None  # the other chirality, kept on a mismatch


class LinkTableEntry(BaseModel):
    """One table row; the diagram comes from at most one of pd, braid, conway or pretzel."""
    name: str
    crossings: conint(ge=0)
    components: conint(ge=1)
    pd: Optional[List[Tuple[int, int, int, int]]] = None
    braid: Optional[List[int]] = None         # closed braid on `strands` strands
    strands: Optional[conint(ge=1)] = None
    conway: Optional[List[conint(ge=1)]] = None   # 2-bridge, as a four-plat
    pretzel: Optional[List[int]] = None

    @model_validator(mode="after")
    def _one_source(self):
        given = [k for k in ("pd", "braid", "conway", "pretzel") if getattr(self, k) is not None]
        if len(given) > 1:
            raise ValueError(f"{self.name}: give only one of {', '.join(given)}")
        if (self.braid is None) != (self.strands is None):
            raise ValueError(f"{self.name}: braid and strands go together")
        return self

    @property
    def is_knot(self) -> bool:
        return self.components == 1

    @property
    def bundled(self) -> bool:
        return any(getattr(self, k) is not None for k in ("pd", "braid", "conway", "pretzel"))
