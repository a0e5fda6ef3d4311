"""Transpose automorphism tau, anti-automorphism rho and the antipode S."""

from __future__ import annotations

from functools import lru_cache
from typing import List, Sequence, Tuple, Union

from .qmatrix import (
    AlgebraElement,
    GlElement,
    MinorSpec,
    complement,
    engine,
    quantum_determinant,
    quantum_minor,
)
from .scalars import LaurentScalar, minus_q_pow

Value = Union[AlgebraElement, GlElement]

# Symmetry names in application order; "S-1" is the inverse antipode.
KINDS = ("tau", "rho", "S", "S-1")
ANTI = {"tau": False, "rho": True, "S": True, "S-1": True}


class SymmetryError(ArithmeticError):
    pass


def _image_of_word(a: AlgebraElement, images: List[AlgebraElement], reverse: bool) -> AlgebraElement:
    """Apply a (anti-)homomorphism given by generator images to each PBW word."""
    n = a.n
    out = AlgebraElement.zero(n)
    for m, s in a.terms.items():
        factors = []
        for k, e in enumerate(m):
            factors.extend([images[k]] * e)
        if reverse:
            factors.reverse()
        prod = AlgebraElement.one(n)
        for f in factors:
            prod = prod * f
        out = out + prod.scale(s)
    return out


@lru_cache(maxsize=None)
def _tau_images(n: int) -> Tuple[AlgebraElement, ...]:
    return tuple(AlgebraElement.gen(n, k % n + 1, k // n + 1) for k in range(n * n))


@lru_cache(maxsize=None)
def _rho_images(n: int) -> Tuple[AlgebraElement, ...]:
    out = []
    for k in range(n * n):
        i, j = k // n + 1, k % n + 1
        out.append(AlgebraElement.gen(n, n + 1 - j, n + 1 - i))
    return tuple(out)


def apply_tau(a: Value) -> Value:
    if isinstance(a, GlElement):
        return GlElement(apply_tau(a.numerator), a.dq_power)
    return _image_of_word(a, list(_tau_images(a.n)), reverse=False)


def apply_rho(a: Value) -> Value:
    if isinstance(a, GlElement):
        return GlElement(apply_rho(a.numerator), a.dq_power)
    return _image_of_word(a, list(_rho_images(a.n)), reverse=True)


@lru_cache(maxsize=None)
def _antipode_numerators(n: int) -> Tuple[AlgebraElement, ...]:
    """Numerators of S(X_ij) = (-q)^(i-j) [~j|~i] D_q^-1."""
    out = []
    for k in range(n * n):
        i, j = k // n + 1, k % n + 1
        if n == 1:
            num = AlgebraElement.one(1)
        else:
            num = quantum_minor(MinorSpec(complement([j], n), complement([i], n)), n)
        out.append(num.scale(minus_q_pow(i - j)))
    return tuple(out)


def apply_antipode(a: Value) -> GlElement:
    """S on O_q(GL_n); an anti-homomorphism with S(D_q^-1) = D_q."""
    if isinstance(a, AlgebraElement):
        a = GlElement(a, 0)
    n = a.n
    nums = _antipode_numerators(n)
    top = a.numerator.max_degree()
    dq = quantum_determinant(n)
    # Each PBW word of degree r maps to (reversed product of numerators) * D_q^-r;
    # bring every word to the common denominator D_q^-top.
    total = AlgebraElement.zero(n)
    for m, s in a.numerator.terms.items():
        factors = []
        for k, e in enumerate(m):
            factors.extend([nums[k]] * e)
        prod = AlgebraElement.one(n)
        for f in reversed(factors):
            prod = prod * f
        r = sum(m)
        total = total + (prod * dq ** (top - r)).scale(s)
    # S(numerator * D_q^-p) = D_q^p * S(numerator)
    p = a.dq_power
    if p >= top:
        return GlElement(total * dq ** (p - top), 0)
    return GlElement(total, top - p)


def q_conjugation(a: Value, sign: int) -> Value:
    """The torus automorphism X_ij -> q^(2*sign*(i-j)) X_ij (D_q is fixed)."""
    if isinstance(a, GlElement):
        return GlElement(q_conjugation(a.numerator, sign), a.dq_power)
    n = a.n
    eng = engine(n)
    out = {}
    for m, s in a.terms.items():
        w = eng.weight_of(m)
        e = sum((i + 1) * w[i] for i in range(n)) - sum((j + 1) * w[n + j] for j in range(n))
        out[m] = s * LaurentScalar.qpow(2 * sign * e)
    return AlgebraElement(n, out)


@lru_cache(maxsize=None)
def antipode_square_sign(n: int) -> int:
    """Return s with S^2(X_ij) = q^(2s(i-j)) X_ij for every generator.

    The relation is checked on all generators rather than assumed; a
    mismatch raises SymmetryError.
    """
    for s in (1, -1):
        ok = True
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                x = AlgebraElement.gen(n, i, j)
                if not (apply_antipode(apply_antipode(x)) == q_conjugation(x, s)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return s
    raise SymmetryError("S^2 is not a torus rescaling of the generators")


def apply_antipode_inverse(a: Value) -> GlElement:
    """S^-1 = S composed with the inverse of the verified rescaling S^2."""
    if isinstance(a, AlgebraElement):
        a = GlElement(a, 0)
    s = antipode_square_sign(a.n)
    return apply_antipode(q_conjugation(a, -s))


_APPLY = {
    "tau": apply_tau,
    "rho": apply_rho,
    "S": apply_antipode,
    "S-1": apply_antipode_inverse,
}


def parse_composite(text: str) -> Tuple[str, ...]:
    """Parse composition notation such as 'rho tau S' into application order.

    Composition is written as usual, so the rightmost map acts first;
    the returned tuple lists maps in the order they are applied.
    """
    parts = text.replace("^-1", "-1").split()
    for p in parts:
        if p not in _APPLY:
            raise ValueError(f"unknown symmetry {p!r}")
    return tuple(reversed(parts))


def composite_name(seq: Sequence[str]) -> str:
    return " ".join(reversed(tuple(seq)))


def is_anti(seq: Sequence[str]) -> bool:
    return sum(ANTI[k] for k in seq) % 2 == 1


def apply_composite(seq: Sequence[str], a: Value) -> Value:
    """Apply maps in the given order (first element acts first)."""
    for k in seq:
        a = _APPLY[k](a)
    return a


def weight_law(kind: str, row: Sequence[int], col: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Image weight of a homogeneous element of weight (row|col)."""
    row, col = tuple(row), tuple(col)
    if kind == "tau":
        return col, row
    if kind == "rho":
        return tuple(reversed(col)), tuple(reversed(row))
    if kind in ("S", "S-1"):
        return tuple(-c for c in col), tuple(-r for r in row)
    raise ValueError(kind)


# ---------------------------------------------------------------------------
# Closed-form images of quantum minors
# ---------------------------------------------------------------------------

# A minor term c * [I|J] * D_q^e; the empty minor stands for 1.
MinorTerm = Tuple[LaurentScalar, Tuple[Tuple[int, ...], Tuple[int, ...]], int]


def _normalize_term(c: LaurentScalar, rows, cols, e: int, n: int) -> MinorTerm:
    rows, cols = tuple(sorted(rows)), tuple(sorted(cols))
    if len(rows) == n:
        return c, ((), ()), e + 1
    return c, (rows, cols), e


def minor_law(kind: str, term: MinorTerm, n: int) -> MinorTerm:
    """Image of a minor term under one symmetry, by the transformation laws.

    tau: [I|J] -> [J|I];  rho: [I|J] -> [w0 J|w0 I];
    S: [I|J] -> (-q)^(sum I - sum J) [~J|~I] D_q^-1, with S(D_q) = D_q^-1;
    S^-1 = S after undoing the rescaling S^2.
    """
    c, (rows, cols), e = term
    if kind == "tau":
        return _normalize_term(c, cols, rows, e, n)
    if kind == "rho":
        return _normalize_term(c, [n + 1 - j for j in cols], [n + 1 - i for i in rows], e, n)
    if kind in ("S", "S-1"):
        if not rows:
            return c, ((), ()), -e
        d = sum(rows) - sum(cols)
        scale = minus_q_pow(d)
        if kind == "S-1":
            scale = scale * LaurentScalar.qpow(-2 * antipode_square_sign(n) * d)
        return _normalize_term(c * scale, complement(cols, n), complement(rows, n), -e - 1, n)
    raise ValueError(kind)


def minor_law_composite(seq: Sequence[str], spec: MinorSpec, n: int) -> MinorTerm:
    term = _normalize_term(LaurentScalar.const(1), spec.rows, spec.cols, 0, n)
    for k in seq:
        term = minor_law(k, term, n)
    return term


def term_value(term: MinorTerm, n: int) -> GlElement:
    c, (rows, cols), e = term
    base = AlgebraElement.one(n) if not rows else quantum_minor(MinorSpec(rows, cols), n)
    base = base.scale(c)
    if e >= 0:
        return GlElement(base * quantum_determinant(n) ** e, 0)
    return GlElement(base, -e)


def inverse_sequence(seq: Sequence[str]) -> Tuple[str, ...]:
    inv = {"tau": "tau", "rho": "rho", "S": "S-1", "S-1": "S"}
    return tuple(inv[k] for k in reversed(tuple(seq)))
