# src/algebra/zn.py
"""Exact arithmetic over Z_n: residues, permutations, Smith normal form and
counting solutions of homogeneous systems modulo n."""
from __future__ import annotations
from itertools import product
from math import gcd, prod
from typing import List, Tuple

from sympy.combinatorics import Permutation as SymPermutation
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from src.models import IntMatrix, Permutation, Residue


def residue(value: int, modulus: int) -> Residue:
    return Residue(value=value % modulus, modulus=modulus)


def is_unit(a: int, n: int) -> bool:
    return gcd(a % n, n) == 1


def inverse_mod(a: int, n: int) -> int:
    return pow(a % n, -1, n)


def units(n: int) -> List[int]:
    return [a for a in range(n) if is_unit(a, n)]


# ---------------------------------------------------------------- permutations

def _as_sympy(p: Permutation) -> SymPermutation:
    return SymPermutation([i - 1 for i in p.images], size=len(p.images))


def _from_sympy(s: SymPermutation) -> Permutation:
    return Permutation(images=tuple(i + 1 for i in s.array_form))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p after q."""
    # sympy products apply the left factor first
    return _from_sympy(_as_sympy(q) * _as_sympy(p))


def identity(n: int) -> Permutation:
    return Permutation(images=tuple(range(1, n + 1)))


def permutation_order(p: Permutation) -> int:
    """Smallest N >= 1 with p^N = id."""
    return int(_as_sympy(p).order())


def power(p: Permutation, k: int) -> Permutation:
    """p composed with itself k times; negative k gives powers of the inverse."""
    return _from_sympy(_as_sympy(p) ** k)


# ---------------------------------------------------------------- matrices

def reduce_mod(M: IntMatrix, n: int) -> IntMatrix:
    return IntMatrix(rows=M.rows, cols=M.cols,
                     entries=tuple(tuple(v % n for v in row) for row in M.entries))


def smith_normal_form(M: IntMatrix) -> Tuple[int, ...]:
    """Invariant factors d_1 | d_2 | ... | d_r of M, r = rank over Q.

    The zero matrix (and any empty matrix) gives ().
    """
    if M.rows == 0 or M.cols == 0:
        return ()
    dM = DomainMatrix([[ZZ(v) for v in row] for row in M.entries], (M.rows, M.cols), ZZ)
    factors = (abs(int(f)) for f in invariant_factors(dM))
    return tuple(sorted(f for f in factors if f != 0))


def count_homogeneous_solutions(M: IntMatrix, n: int) -> int:
    """|{x in (Z_n)^v : Mx = 0 mod n}| = n^(v-r) * prod gcd(d_i, n)."""
    if n < 2:
        raise ValueError(f"modulus must be at least 2, got {n}")
    diag = smith_normal_form(reduce_mod(M, n))
    return n ** (M.cols - len(diag)) * prod(gcd(d, n) for d in diag)


def rank_mod_p(M: IntMatrix, p: int) -> int:
    """Rank over the prime field Z_p by Gaussian elimination."""
    rows = [[v % p for v in row] for row in M.entries]
    rank, col = 0, 0
    while rank < len(rows) and col < M.cols:
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(v * inv) % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def brute_force_count(M: IntMatrix, n: int) -> int:
    """Enumerates all n^v vectors; only for tiny systems."""
    count = 0
    for x in product(range(n), repeat=M.cols):
        if all(sum(a * b for a, b in zip(row, x)) % n == 0 for row in M.entries):
            count += 1
    return count
