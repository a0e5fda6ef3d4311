"""Exact integer lattice routines: Hermite normal form, kernels, cosets."""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

Vector = Tuple[int, ...]


def _xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        qt, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - qt * x1
        y0, y1 = y1, y0 - qt * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def hermite_form(rows: Sequence[Sequence[int]], track: bool = False):
    """Row-style Hermite normal form by unimodular row operations.

    Returns the nonzero HNF rows (pivots positive, strictly increasing pivot
    columns, entries above a pivot reduced into [0, pivot)).  With
    ``track=True`` also returns (H, U, rank) where U is unimodular and
    U * rows = H including the zero rows at the bottom.
    """
    A = [list(r) for r in rows]
    m = len(A)
    ncols = len(A[0]) if A else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    r = 0
    for c in range(ncols):
        if r == m:
            break
        # gcd-combine every row below r into row r at column c
        for i in range(r + 1, m):
            if A[i][c]:
                g, x, y = _xgcd(A[r][c], A[i][c])
                a, b = A[r][c] // g, A[i][c] // g
                ra, ri = A[r], A[i]
                A[r] = [x * p + y * s for p, s in zip(ra, ri)]
                A[i] = [-b * p + a * s for p, s in zip(ra, ri)]
                ua, ui = U[r], U[i]
                U[r] = [x * p + y * s for p, s in zip(ua, ui)]
                U[i] = [-b * p + a * s for p, s in zip(ua, ui)]
        if A[r][c] == 0:
            continue
        if A[r][c] < 0:
            A[r] = [-v for v in A[r]]
            U[r] = [-v for v in U[r]]
        piv = A[r][c]
        for i in range(r):
            f = A[i][c] // piv
            if f:
                A[i] = [p - f * s for p, s in zip(A[i], A[r])]
                U[i] = [p - f * s for p, s in zip(U[i], U[r])]
        r += 1
    H = [tuple(row) for row in A[:r]]
    if track:
        return [tuple(row) for row in A], [tuple(row) for row in U], r
    return H


def integer_kernel_basis(matrix: Sequence[Sequence[int]]) -> List[Vector]:
    """Basis of {s in Z^m : matrix * s = 0}, saturated by construction.

    Row-reduce the transpose unimodularly; the transforming rows that land
    on zero rows span the integer kernel.
    """
    if not matrix:
        return []
    ncols = len(matrix[0])
    transpose = [[matrix[i][j] for i in range(len(matrix))] for j in range(ncols)]
    _, U, rank = hermite_form(transpose, track=True)
    kernel = [U[i] for i in range(rank, ncols)]
    return hermite_form(kernel) if kernel else []


def lattice_hnf(vectors: Sequence[Sequence[int]]) -> List[Vector]:
    vs = [tuple(v) for v in vectors if any(v)]
    return hermite_form(vs) if vs else []


def same_lattice(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    return lattice_hnf(a) == lattice_hnf(b)


def rank(vectors: Sequence[Sequence[int]]) -> int:
    return len(lattice_hnf(vectors))


def _det(rows: List[List[int]]) -> int:
    M = [[Fraction(x) for x in r] for r in rows]
    k = len(M)
    det = Fraction(1)
    for c in range(k):
        p = next((i for i in range(c, k) if M[i][c]), None)
        if p is None:
            return 0
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        for i in range(c + 1, k):
            f = M[i][c] / M[c][c]
            if f:
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return int(det)


def maximal_minor_gcd(vectors: Sequence[Sequence[int]]) -> int:
    """gcd of the d x d minors of a d x m integer matrix (d independent rows).

    The lattice spanned by the rows is saturated in Z^m exactly when this is 1.
    """
    vs = [list(v) for v in vectors]
    d = len(vs)
    if d == 0:
        return 1
    m = len(vs[0])
    g = 0
    for cols in itertools.combinations(range(m), d):
        g = gcd(g, _det([[v[c] for c in cols] for v in vs]))
        if g == 1:
            return 1
    return g


def in_lattice(basis_hnf: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    return not any(coset_rep(basis_hnf, v))


def coset_rep(basis_hnf: Sequence[Sequence[int]], v: Sequence[int]) -> Vector:
    """Canonical representative of v modulo the lattice with this HNF basis."""
    v = list(v)
    for row in basis_hnf:
        p = next(i for i, x in enumerate(row) if x)
        f = v[p] // row[p]
        if f:
            v = [a - f * b for a, b in zip(v, row)]
    return tuple(v)


def unimodular_change(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    """True if the rows of a and of b are bases of the same lattice."""
    return len(a) == len(b) == rank(a) == rank(b) and same_lattice(a, b)
