"""Quantum-torus presentations modulo an H-prime and their centers.

A presentation records labels x_1..x_m (generators, quantum minors or
``Dq``) together with the antisymmetric integer matrix (a_ij) for which
x_i x_j = q^(a_ij) x_j x_i modulo the ideal.  A Laurent monomial
x_1^s_1 ... x_m^s_m is central exactly when the matrix kills s, so the
center is read off from the integer kernel.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .ideals import (
    BOTH_IN_IDEAL,
    DEFAULT_MAX_DEGREE,
    GradedIdeal,
    HPrimeSpec,
    MEMBER,
    build_hprime,
    commutation_scalar,
    filtered_member,
    ideal_of,
)
from .lattice import in_lattice, integer_kernel_basis, lattice_hnf, maximal_minor_gcd, same_lattice
from .notation import factor_element, parse_monomial, product
from .qmatrix import AlgebraElement, NOT_HOMOGENEOUS, weight
from .scalars import LaurentScalar

Matrix = List[List[int]]


class NotATorus(ValueError):
    """Two labels fail to q-commute modulo the ideal."""

    def __init__(self, pair: Tuple[str, str], scalar):
        self.pair = pair
        self.scalar = scalar
        shown = scalar.render() if hasattr(scalar, "render") else str(scalar)
        super().__init__(f"labels {pair[0]} and {pair[1]} do not q-commute (scalar {shown})")


class ShapeError(ValueError):
    pass


@dataclass(frozen=True)
class TorusPresentation:
    labels: Tuple[str, ...]
    matrix: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        check_antisymmetric(self.matrix)
        if len(self.matrix) != len(self.labels):
            raise ShapeError("one matrix row per label is required")

    @property
    def m(self) -> int:
        return len(self.labels)

    def permuted(self, order: Sequence[int]) -> "TorusPresentation":
        labels = tuple(self.labels[i] for i in order)
        matrix = tuple(tuple(self.matrix[i][j] for j in order) for i in order)
        return TorusPresentation(labels, matrix)

    def center(self) -> "CenterLattice":
        return integer_kernel(self.matrix)


@dataclass(frozen=True)
class CenterLattice:
    basis: Tuple[Tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[int]) -> bool:
        return in_lattice(self.basis, v) if self.basis else not any(v)


def check_antisymmetric(matrix: Sequence[Sequence[int]]) -> None:
    m = len(matrix)
    for i, row in enumerate(matrix):
        if len(row) != m:
            raise ShapeError("commutation matrix must be square")
        if row[i] != 0:
            raise ShapeError(f"nonzero diagonal entry at {i}")
        for j in range(i):
            if row[j] != -matrix[j][i]:
                raise ShapeError(f"entries ({i},{j}) and ({j},{i}) are not negatives")


def _label_element(label: str, n: int = 3) -> AlgebraElement:
    return factor_element(label, n)


def commutation_exponent(a: str, b: str, ideal) -> int:
    """k with a*b = q^k * b*a modulo the ideal; Dq commutes with everything."""
    if a == b or a == "Dq" or b == "Dq":
        return 0
    s = commutation_scalar(_label_element(a), _label_element(b), ideal)
    if s is BOTH_IN_IDEAL or not isinstance(s, LaurentScalar):
        raise NotATorus((a, b), s)
    k = s.is_qpower()
    if k is None:
        raise NotATorus((a, b), s)
    return k


def presentation_from_generators(labels: Sequence[str], ideal=None, max_degree: int = DEFAULT_MAX_DEGREE) -> TorusPresentation:
    """Fill a_ij from commutation scalars; every scalar must be a pure q-power."""
    I = _as_ideal(ideal, max_degree)
    labels = tuple(labels)
    m = len(labels)
    M = [[0] * m for _ in range(m)]
    for i, j in itertools.combinations(range(m), 2):
        k = commutation_exponent(labels[i], labels[j], I)
        M[i][j], M[j][i] = k, -k
    return TorusPresentation(labels, tuple(tuple(r) for r in M))


def _as_ideal(ideal, max_degree: int = DEFAULT_MAX_DEGREE) -> GradedIdeal:
    if ideal is None:
        return ideal_of([], max_degree)
    if isinstance(ideal, str):
        ideal = build_hprime(ideal)
    return ideal_of(ideal, max_degree)


def integer_kernel(matrix: Sequence[Sequence[int]]) -> CenterLattice:
    check_antisymmetric(matrix)
    return CenterLattice(tuple(integer_kernel_basis(matrix)))


# ---------------------------------------------------------------------------
# Brute-force oracle over a box of exponent vectors
# ---------------------------------------------------------------------------


def box_kernel_vectors(matrix: Sequence[Sequence[int]], radius: int = 2, chunk: int = 200_000) -> np.ndarray:
    """All s in [-radius, radius]^m with matrix * s = 0, by exhaustive sweep."""
    A = np.asarray(matrix, dtype=np.int64)
    m = A.shape[0]
    side = 2 * radius + 1
    total = side**m
    found = []
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = np.empty((idx.size, m), dtype=np.int64)
        rest = idx.copy()
        for c in range(m - 1, -1, -1):
            digits[:, c] = rest % side - radius
            rest //= side
        hits = np.all(digits @ A.T == 0, axis=1)
        if hits.any():
            found.append(digits[hits])
    return np.concatenate(found) if found else np.zeros((0, m), dtype=np.int64)


def box_oracle_agrees(matrix: Sequence[Sequence[int]], lattice: CenterLattice, radius: int = 2) -> Tuple[bool, Optional[Tuple[int, ...]]]:
    """True if every box kernel vector lies in the lattice (and the lattice is in the kernel)."""
    A = [list(r) for r in matrix]
    for v in lattice.basis:
        if any(sum(a * s for a, s in zip(row, v)) for row in A):
            return False, tuple(v)
    for s in box_kernel_vectors(matrix, radius):
        v = tuple(int(x) for x in s)
        if not lattice.contains(v):
            return False, v
    return True, None


# ---------------------------------------------------------------------------
# Catalog checks
# ---------------------------------------------------------------------------


@dataclass
class CenterReport:
    key: str
    labels: Tuple[str, ...]
    matrix: Optional[Tuple[Tuple[int, ...], ...]] = None
    kernel: Tuple[Tuple[int, ...], ...] = ()
    claimed: Tuple[Tuple[int, ...], ...] = ()
    presentation_ok: bool = False
    rank_ok: bool = False
    in_kernel_ok: bool = False
    basis_ok: bool = False
    saturated: bool = False
    problems: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.presentation_ok and self.rank_ok and self.in_kernel_ok and self.basis_ok and self.saturated


def verify_center_entry(w, labels: Sequence[str], claimed: Sequence[Sequence[int]], max_degree: int = DEFAULT_MAX_DEGREE) -> CenterReport:
    """Check (i) the presentation, (ii) rank, (iii) kernel membership, (iv) basis equality."""
    spec = w if isinstance(w, HPrimeSpec) else build_hprime(w)
    rep = CenterReport(spec.key, tuple(labels), claimed=tuple(tuple(v) for v in claimed))
    try:
        pres = presentation_from_generators(labels, spec, max_degree)
    except NotATorus as exc:
        rep.problems.append(str(exc))
        return rep
    rep.presentation_ok = True
    rep.matrix = pres.matrix
    lat = pres.center()
    rep.kernel = lat.basis
    rep.saturated = maximal_minor_gcd(lat.basis) == 1
    rep.rank_ok = lat.rank == len(claimed)
    if not rep.rank_ok:
        rep.problems.append(f"kernel rank {lat.rank} but {len(claimed)} indeterminates claimed")
    bad = [v for v in rep.claimed if any(sum(a * s for a, s in zip(row, v)) for row in pres.matrix)]
    rep.in_kernel_ok = not bad
    for v in bad:
        rep.problems.append(f"claimed vector {v} is not in the kernel")
    rep.basis_ok = rep.rank_ok and rep.in_kernel_ok and same_lattice(rep.claimed, lat.basis)
    if rep.rank_ok and rep.in_kernel_ok and not rep.basis_ok:
        rep.problems.append(f"claimed vectors span {lattice_hnf(rep.claimed)}, kernel is {list(lat.basis)}")
    return rep


Parts = Union[str, AlgebraElement, Sequence[Tuple[object, str]]]


def _combine(parts: Parts, n: int = 3) -> AlgebraElement:
    """A sum of scaled products: a product string, an element, or (coeff, text) pairs."""
    if isinstance(parts, AlgebraElement):
        return parts
    if isinstance(parts, str):
        return product(parts, n)
    out = AlgebraElement.zero(n)
    for coeff, text in parts:
        out = out + product(text, n).scale(LaurentScalar.coerce(coeff))
    return out


def verify_fraction_identity(lhs_parts: Parts, rhs_parts: Parts, ideal=None, max_degree: int = DEFAULT_MAX_DEGREE) -> bool:
    """Check lhs - rhs lies in the ideal; the identity is stored denominator-free."""
    diff = _combine(lhs_parts) - _combine(rhs_parts)
    if not diff.terms:
        return True
    bound = max(max_degree, diff.max_degree())
    if weight(diff) is NOT_HOMOGENEOUS:
        gens = _as_ideal(ideal, bound).generators
        return filtered_member(diff, gens, bound) == MEMBER
    return _as_ideal(ideal, bound).contains(diff)


def exponent_vector(display: str, labels: Sequence[str], rewrites: Dict[str, Tuple[Sequence[str], Sequence[str]]]) -> Tuple[int, ...]:
    """Exponent vector of a display form over the labels.

    A factor F that is not a label is resolved through a rewrite
    F * P = c * R with P, R products of labels, so vec(F) = vec(R) - vec(P).
    """
    v = [0] * len(labels)
    for name, e in parse_monomial(display):
        if name == "1":
            continue
        if name in labels:
            v[labels.index(name)] += e
            continue
        if name not in rewrites:
            raise KeyError(f"factor {name} is neither a label nor rewritten")
        P, R = rewrites[name]
        for r in R:
            v[labels.index(r)] += e
        for p in P:
            v[labels.index(p)] -= e
    return tuple(v)
