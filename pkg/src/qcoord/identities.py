"""Defining relations and quantum-minor identities as explicit residuals.

Each generator below yields (label, residual) pairs; an identity holds
exactly when its residual is the zero element.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Tuple

from .qmatrix import AlgebraElement, cominor, normal_form, quantum_determinant, quantum_minor, MinorSpec, Generator
from .scalars import QHAT, LaurentScalar, minus_q_pow

Residual = Tuple[str, AlgebraElement]


def _x(n: int, i: int, j: int) -> AlgebraElement:
    return AlgebraElement.gen(n, i, j)


def _q(k: int) -> LaurentScalar:
    return LaurentScalar.qpow(k)


def defining_relations(n: int = 3) -> Iterator[Residual]:
    """The four families of commutation relations between generators."""
    idx = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    for (i, j), (l, m) in itertools.product(idx, idx):
        a, b = _x(n, i, j), _x(n, l, m)
        if j == m and i < l:
            yield f"X{i}{j}X{l}{j} = q X{l}{j}X{i}{j}", a * b - (b * a).scale(_q(1))
        elif i == l and j < m:
            yield f"X{i}{j}X{i}{m} = q X{i}{m}X{i}{j}", a * b - (b * a).scale(_q(1))
        elif i < l and j > m:
            yield f"X{i}{j}X{l}{m} = X{l}{m}X{i}{j}", a * b - b * a
        elif i < l and j < m:
            yield f"[X{i}{j},X{l}{m}] = qhat X{i}{m}X{l}{j}", a * b - b * a - (_x(n, i, m) * _x(n, l, j)).scale(QHAT)


def rewriting_agrees(n: int = 3) -> Iterator[Residual]:
    """Word rewriting of every two-letter word agrees with the engine product."""
    gens = [Generator(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    for g, h in itertools.product(gens, gens):
        yield f"word {g}{h}", normal_form([g, h], n) - _x(n, g.row, g.col) * _x(n, h.row, h.col)


def laplace_relations(n: int = 3) -> Iterator[Residual]:
    dq = quantum_determinant(n)
    for i, l in itertools.product(range(1, n + 1), repeat=2):
        delta = dq if i == l else AlgebraElement.zero(n)
        row = AlgebraElement.zero(n)
        col = AlgebraElement.zero(n)
        for j in range(1, n + 1):
            row = row + (_x(n, i, j) * cominor(l, j, n)).scale(minus_q_pow(j - l))
            col = col + (cominor(j, i, n) * _x(n, j, l)).scale(minus_q_pow(i - j))
        yield f"row Laplace i={i} l={l}", row - delta
        yield f"column Laplace i={i} l={l}", col - delta


def generator_cominor_relations(n: int = 3) -> Iterator[Residual]:
    """Commutation of X_ij with the cofactor minors [~l|~m].

    In the one-sided families the correction sums carry (-q)^(j-s), resp.
    (-q)^(i-s); that is the sign forced by the defining relations already
    for n = 2 (see ``opposite_exponent_variant``).
    """
    r = range(1, n + 1)
    for i, j, l, m in itertools.product(r, r, r, r):
        x = _x(n, i, j)
        c = cominor(l, m, n)
        if l != i and m != j:
            yield f"X{i}{j} commutes with [~{l}|~{m}]", x * c - c * x
    for i, j, l in itertools.product(r, r, r):
        if l == i:
            continue
        x = _x(n, i, j)
        c = cominor(l, j, n)
        low = sum(((cominor(l, s, n) * _x(n, i, s)).scale(minus_q_pow(j - s)) for s in range(1, j)), AlgebraElement.zero(n))
        high = sum(((cominor(l, s, n) * _x(n, i, s)).scale(minus_q_pow(j - s)) for s in range(j + 1, n + 1)), AlgebraElement.zero(n))
        yield f"X{i}{j} vs [~{l}|~{j}], lower sum", x * c - (c * x).scale(_q(1)) - low.scale(QHAT)
        yield f"X{i}{j} vs [~{l}|~{j}], upper sum", x * c - (c * x).scale(_q(-1)) + high.scale(QHAT)
    for i, j, m in itertools.product(r, r, r):
        if m == j:
            continue
        x = _x(n, i, j)
        c = cominor(i, m, n)
        low = sum(((cominor(s, m, n) * _x(n, s, j)).scale(minus_q_pow(i - s)) for s in range(1, i)), AlgebraElement.zero(n))
        high = sum(((cominor(s, m, n) * _x(n, s, j)).scale(minus_q_pow(i - s)) for s in range(i + 1, n + 1)), AlgebraElement.zero(n))
        yield f"X{i}{j} vs [~{i}|~{m}], lower sum", x * c - (c * x).scale(_q(1)) - low.scale(QHAT)
        yield f"X{i}{j} vs [~{i}|~{m}], upper sum", x * c - (c * x).scale(_q(-1)) + high.scale(QHAT)
    for i, j in itertools.product(r, r):
        x = _x(n, i, j)
        c = cominor(i, j, n)
        comm = x * c - c * x
        z = AlgebraElement.zero(n)
        s_lo = sum(((_x(n, s, j) * cominor(s, j, n)).scale(minus_q_pow(s - i)) for s in range(1, i)), z)
        s_hi = sum(((_x(n, s, j) * cominor(s, j, n)).scale(minus_q_pow(s - i)) for s in range(i + 1, n + 1)), z)
        t_lo = sum(((cominor(i, t, n) * _x(n, i, t)).scale(minus_q_pow(j - t)) for t in range(1, j)), z)
        t_hi = sum(((cominor(i, t, n) * _x(n, i, t)).scale(minus_q_pow(j - t)) for t in range(j + 1, n + 1)), z)
        yield f"X{i}{j} vs [~{i}|~{j}], first form", comm - (s_lo - t_hi).scale(QHAT * _q(1))
        yield f"X{i}{j} vs [~{i}|~{j}], second form", comm - (t_lo - s_hi).scale(QHAT * _q(-1))


def cofactor_minor_relations(n: int = 3) -> Iterator[Residual]:
    """Commutation among (n-1) x (n-1) minors.

    For i < l, j < m the commutator is -qhat [~i|~m][~l|~j]; for n = 2 this
    is the fourth defining relation read with complemented indices.
    """
    r = range(1, n + 1)
    for i, j, l, m in itertools.product(r, r, r, r):
        a = cominor(i, j, n)
        if i == l and j < m:
            b = cominor(i, m, n)
            yield f"[~{i}|~{j}][~{i}|~{m}]", a * b - (b * a).scale(_q(-1))
        if j == m and i < l:
            b = cominor(l, j, n)
            yield f"[~{i}|~{j}][~{l}|~{j}]", a * b - (b * a).scale(_q(-1))
        if i < l and j > m:
            b = cominor(l, m, n)
            yield f"[~{i}|~{j}][~{l}|~{m}] commute", a * b - b * a
        if i < l and j < m:
            b = cominor(l, m, n)
            yield f"[~{i}|~{j}][~{l}|~{m}] qhat", a * b - b * a + (cominor(i, m, n) * cominor(l, j, n)).scale(QHAT)


def opposite_exponent_variant(n: int = 2) -> Iterator[Residual]:
    """The one-sided generator/cofactor relation with exponent (-q)^(s-j).

    Kept only to document that this variant is inconsistent with the
    defining relations; its residuals are nonzero.
    """
    r = range(1, n + 1)
    for i, j, l in itertools.product(r, r, r):
        if l == i:
            continue
        x = _x(n, i, j)
        c = cominor(l, j, n)
        low = sum(((cominor(l, s, n) * _x(n, i, s)).scale(minus_q_pow(s - j)) for s in range(1, j)), AlgebraElement.zero(n))
        yield f"X{i}{j} vs [~{l}|~{j}], exponent s-j", x * c - (c * x).scale(_q(1)) - low.scale(QHAT)


def determinant_central(n: int) -> Iterator[Residual]:
    dq = quantum_determinant(n)
    for i, j in itertools.product(range(1, n + 1), repeat=2):
        x = _x(n, i, j)
        yield f"Dq X{i}{j} = X{i}{j} Dq (n={n})", dq * x - x * dq


def x13_determinant_identity() -> Iterator[Residual]:
    n = 3
    m = lambda r, c: quantum_minor(MinorSpec(r, c), n)
    lhs = _x(n, 1, 3) * quantum_determinant(n)
    rhs = m((1, 2), (1, 3)) * m((1, 3), (2, 3)) - (m((1, 3), (1, 3)) * m((1, 2), (2, 3))).scale(_q(1))
    yield "X13 Dq = [12|13][13|23] - q[13|13][12|23]", lhs - rhs


FAMILIES = {
    "defining relations": defining_relations,
    "rewriting vs product": rewriting_agrees,
    "quantum Laplace expansion": laplace_relations,
    "generator/cofactor commutation": generator_cominor_relations,
    "cofactor/cofactor commutation": cofactor_minor_relations,
}
