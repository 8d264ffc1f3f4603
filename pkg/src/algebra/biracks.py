# src/algebra/biracks.py
"""Finite biracks and birack shadows given by operation tables.

All tables exchanged with callers are 1-based, exactly as in the block
matrices M_X = [U|L] and M_{X,S}; the derived tables stored on the models
are 0-based.
"""
from __future__ import annotations
from itertools import product
from typing import Callable, Dict, Iterable, List, Mapping, Sequence, Tuple, Union

import structlog

from src.algebra.zn import is_unit, permutation_order
from src.errors import AxiomViolation, PreconditionFailed
from src.models import Birack, Permutation, Residue, Shadow, Table

logger = structlog.get_logger()

Scalar = Union[int, Residue]


def _table(rows: Sequence[Sequence[int]], nrows: int, ncols: int, bound: int, name: str) -> Table:
    if len(rows) != nrows or any(len(r) != ncols for r in rows):
        raise PreconditionFailed(f"{name} must be {nrows}x{ncols}")
    out = tuple(tuple(int(v) for v in r) for r in rows)
    for i, r in enumerate(out):
        for j, v in enumerate(r):
            if not 1 <= v <= bound:
                raise PreconditionFailed(f"{name}[{i + 1}][{j + 1}] = {v} outside 1..{bound}")
    return out


def _first_collision(values: Iterable[Tuple[Tuple[int, ...], object]]) -> Tuple[int, ...] | None:
    seen = set()
    for key, image in values:
        if image in seen:
            return key
        seen.add(image)
    return None


def _one_based(*xs: int) -> Tuple[int, ...]:
    return tuple(x + 1 for x in xs)


def birack_from_tables(U: Sequence[Sequence[int]], L: Sequence[Sequence[int]]) -> Birack:
    """Verify the birack axioms exhaustively and derive sideways, alpha, pi, N."""
    n = len(L)
    U = _table(U, n, n, n, "U")
    L = _table(L, n, n, n, "L")
    X = range(n)
    # U[i][j] = B_1(x_j, x_i): note the reversed indices
    b1 = tuple(tuple(U[y][x] - 1 for y in X) for x in X)
    b2 = tuple(tuple(L[x][y] - 1 for y in X) for x in X)

    key = _first_collision((_one_based(x, y), (b1[x][y], b2[x][y])) for x, y in product(X, X))
    if key is not None:
        raise AxiomViolation("bijective", key, "B is not injective")
    inverse: List[List[Tuple[int, int]]] = [[(0, 0)] * n for _ in X]
    for x, y in product(X, X):
        inverse[b1[x][y]][b2[x][y]] = (x, y)

    # axiom (i): S(B_1(x,y), x) = (B_2(x,y), y) determines S iff y -> B_1(x,y) is onto for each x
    for x in X:
        key = _first_collision((_one_based(x, y), b1[x][y]) for y in X)
        if key is not None:
            raise AxiomViolation("sideways", key, "y -> B_1(x,y) is not a bijection")
    sideways: List[List[Tuple[int, int]]] = [[(0, 0)] * n for _ in X]
    for x, y in product(X, X):
        sideways[b1[x][y]][x] = (b2[x][y], y)
    key = _first_collision((_one_based(a, b), sideways[a][b]) for a, b in product(X, X))
    if key is not None:
        raise AxiomViolation("sideways", key, "sideways map is not injective")
    sideways_inv: Dict[Tuple[int, int], Tuple[int, int]] = {
        sideways[a][b]: (a, b) for a, b in product(X, X)
    }

    # axiom (ii): diagonal components of S and S^{-1} are bijections
    diagonal = {
        "S1": [sideways[x][x][0] for x in X],
        "S2": [sideways[x][x][1] for x in X],
        "Sinv1": [sideways_inv[(x, x)][0] for x in X],
        "Sinv2": [sideways_inv[(x, x)][1] for x in X],
    }
    for label, images in diagonal.items():
        key = _first_collision((_one_based(x), images[x]) for x in X)
        if key is not None:
            raise AxiomViolation("diagonal", key, f"component {label} of the diagonal map is not a bijection")

    # axiom (iii): set-theoretic Yang-Baxter equation
    for x, y, z in product(X, X, X):
        p, q = b1[x][y], b2[x][y]
        r, s = b1[q][z], b2[q][z]
        lhs = (b1[p][r], b2[p][r], s)
        q2, s2 = b1[y][z], b2[y][z]
        p2, r2 = b1[x][q2], b2[x][q2]
        rhs = (p2, b1[r2][s2], b2[r2][s2])
        if lhs != rhs:
            raise AxiomViolation("ybe", _one_based(x, y, z),
                                 f"{_one_based(*lhs)} != {_one_based(*rhs)}")

    # alpha = (S^{-1} o Delta)_2^{-1},  pi = (S^{-1} o Delta)_1 o alpha
    alpha = [0] * n
    for x in X:
        alpha[diagonal["Sinv2"][x]] = x
    pi = [diagonal["Sinv1"][alpha[x]] for x in X]
    alpha_p = Permutation(images=_one_based(*alpha))
    pi_p = Permutation(images=_one_based(*pi))

    b = Birack(
        n=n, U=U, L=L, b1=b1, b2=b2,
        inverse=tuple(tuple(r) for r in inverse),
        sideways=tuple(tuple(r) for r in sideways),
        alpha=alpha_p, pi=pi_p, rank=permutation_order(pi_p),
    )
    logger.debug("birack verified", n=n, rank=b.rank)
    return b


def kink_maps(b: Birack) -> Tuple[Permutation, Permutation, int]:
    return b.alpha, b.pi, b.rank


def tables_from_maps(n: int, B1: Callable[[int, int], int], B2: Callable[[int, int], int]) -> Tuple[Table, Table]:
    """1-based U, L tables from 1-based component maps."""
    X = range(1, n + 1)
    U = tuple(tuple(B1(j, i) for j in X) for i in X)
    L = tuple(tuple(B2(i, j) for j in X) for i in X)
    return U, L


def biquandle_from_maps(n: int, upper: Callable[[int, int], int], lower: Callable[[int, int], int]) -> Birack:
    """Birack B(x,y) = (upper(x,y), lower(x,y)) on {1..n}."""
    return birack_from_tables(*tables_from_maps(n, upper, lower))


def _scalar(v: Scalar, n: int) -> int:
    if isinstance(v, Residue):
        if v.modulus != n:
            raise PreconditionFailed(f"residue modulus {v.modulus} does not match n={n}")
        return v.value
    return int(v) % n


def tsr_birack(n: int, t: Scalar, s: Scalar, r: Scalar) -> Birack:
    """The (t,s,r)-birack B(x,y) = (ty + sx, rx) on Z_n, element k stored as k+1."""
    t, s, r = (_scalar(v, n) for v in (t, s, r))
    if not is_unit(t, n) or not is_unit(r, n):
        raise PreconditionFailed(f"t={t} and r={r} must be units mod {n}")
    if (s * s - (1 - t * r) * s) % n:
        raise PreconditionFailed(f"s^2 != (1 - tr)s mod {n} for t={t}, s={s}, r={r}")
    return biquandle_from_maps(
        n,
        lambda x, y: (t * (y - 1) + s * (x - 1)) % n + 1,
        lambda x, y: (r * (x - 1)) % n + 1,
    )


def quandle_promotion(triangle_table: Sequence[Sequence[int]]) -> Birack:
    """B(x,y) = (y |> x, x) where triangle_table[i][j] = x_i |> x_j."""
    n = len(triangle_table)
    tri = _table(triangle_table, n, n, n, "triangle table")
    return biquandle_from_maps(n, lambda x, y: tri[y - 1][x - 1], lambda x, y: x)


def shadow_from_table(b: Birack, action: Sequence[Sequence[int]]) -> Shadow:
    m = len(action)
    action = _table(action, m, b.n, m, "action")
    S, X = range(m), range(b.n)
    act = tuple(tuple(action[A][x] - 1 for x in X) for A in S)

    for x in X:
        seen: Dict[int, int] = {}
        for A in S:
            if act[A][x] in seen:
                raise AxiomViolation("action-invertible", _one_based(A, x),
                                     f"A -> A.x_{x + 1} is not a bijection")
            seen[act[A][x]] = A
    act_inv = tuple(tuple(next(C for C in S if act[C][x] == A) for x in X) for A in S)

    # (i): (A . y_x) . x^y = (A . x) . y   with y_x = B_2(y,x), x^y = B_1(y,x)
    for A, x, y in product(S, X, X):
        lhs = act[act[A][b.b2[y][x]]][b.b1[y][x]]
        rhs = act[act[A][x]][y]
        if lhs != rhs:
            raise AxiomViolation("shadow-i", _one_based(A, x, y), f"{lhs + 1} != {rhs + 1}")
    # (ii): A . x = A . pi(x)
    for A, x in product(S, X):
        if act[A][x] != act[A][b.pi(x + 1) - 1]:
            raise AxiomViolation("shadow-ii", _one_based(A, x))

    logger.debug("shadow verified", m=m, n=b.n)
    return Shadow(m=m, n=b.n, action=action, act=act, act_inv=act_inv)


def is_birack_homomorphism(f: Union[Sequence[int], Mapping[int, int]], b: Birack, b2: Birack) -> bool:
    """B' o (f x f) = (f x f) o B, f given 1-based."""
    fmap = ({i + 1: v for i, v in enumerate(f)} if not isinstance(f, Mapping) else dict(f))
    if set(fmap) != set(range(1, b.n + 1)) or any(not 1 <= v <= b2.n for v in fmap.values()):
        return False
    g = [fmap[i + 1] - 1 for i in range(b.n)]
    for x, y in product(range(b.n), repeat=2):
        if (b2.b1[g[x]][g[y]], b2.b2[g[x]][g[y]]) != (g[b.b1[x][y]], g[b.b2[x][y]]):
            return False
    return True


def is_subbirack(b: Birack, Y: Iterable[int]) -> bool:
    members = sorted(set(Y))
    if not members:
        return True
    if any(not 1 <= y <= b.n for y in members):
        return False
    inside = {y - 1 for y in members}
    for x, y in product(inside, inside):
        if b.b1[x][y] not in inside or b.b2[x][y] not in inside:
            return False
    # the restriction must itself pass the axioms
    pos = {y - 1: i + 1 for i, y in enumerate(members)}
    order = [y - 1 for y in members]
    U = [[pos[b.b1[xj][xi]] for xj in order] for xi in order]
    L = [[pos[b.b2[xi][xj]] for xj in order] for xi in order]
    try:
        birack_from_tables(U, L)
    except AxiomViolation:
        return False
    return True
