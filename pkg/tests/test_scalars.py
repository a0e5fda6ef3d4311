from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcoord.scalars import (
    ONE,
    Q,
    QHAT,
    QINV,
    ZERO,
    DivisibilityError,
    LaurentScalar,
    ScalarMatrix,
    ZeroDivisor,
    exact_div,
    row_reduce,
    scalar_arith,
)
from strategies import frac_rank, scalars


def test_unit_pair():
    assert scalar_arith(Q, QINV, "mul") == ONE


def test_qhat_times_q():
    assert scalar_arith(QHAT, Q, "mul") == LaurentScalar.qpow(2) - 1


def test_exact_division_by_qhat():
    got = scalar_arith(LaurentScalar.qpow(2) - 1, QHAT, "exact_div")
    assert got == Q
    assert got * QHAT == LaurentScalar.qpow(2) - 1


def test_non_divisor_is_rejected():
    with pytest.raises(DivisibilityError):
        exact_div(Q + 1, Q - 1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisor):
        exact_div(Q, ZERO)


def test_zero_is_the_empty_map():
    assert (Q - Q).terms == {}
    assert LaurentScalar({(1, 0, 0, 0): 0}).terms == {}


def test_exponent_overflow_is_an_error():
    big = LaurentScalar.qpow(2**30)
    with pytest.raises(OverflowError):
        big * big * big


def test_render_is_deterministic():
    s = LaurentScalar({(1, 0, 0, 0): 1, (-1, 0, 0, 0): -1, (0, 1, 0, 0): Fraction(1, 2)})
    assert s.render() == "q + 1/2*alpha - q^-1"


def test_json_round_trip():
    s = LaurentScalar({(1, 2, 0, -1): Fraction(3, 7), (0, 0, 0, 0): -2})
    assert LaurentScalar.from_json(s.to_json()) == s


# --- row reduction ---------------------------------------------------------


def test_proportional_monomial_rows():
    _, rank, pivots = row_reduce(ScalarMatrix([[Q, 0], [Q**3, 0]]))
    assert rank == 1 and pivots == [0]


def test_multiple_row():
    _, rank, _ = row_reduce(ScalarMatrix([[1, Q], [Q, Q**2]]))
    assert rank == 1


def test_qhat_determinant_gives_full_rank():
    _, rank, _ = row_reduce(ScalarMatrix([[1, Q], [0, QHAT]]))
    assert rank == 2


def test_empty_matrix():
    _, rank, pivots = row_reduce(ScalarMatrix([]))
    assert rank == 0 and pivots == []


def test_ragged_rows_rejected():
    with pytest.raises(ValueError):
        ScalarMatrix([[1, 2], [3]], columns=[0, 1])


# --- properties --------------------------------------------------------------


@settings(max_examples=200)
@given(scalars(), scalars(), scalars())
def test_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * ONE == a


@given(scalars(), scalars())
def test_exact_division_inverts_multiplication(a, b):
    if b.is_zero():
        return
    assert exact_div(a * b, b) == a


q_monomials = st.builds(lambda k, c: LaurentScalar.qpow(k, c), st.integers(-2, 2), st.integers(-2, 2))


@given(st.lists(st.lists(q_monomials, min_size=3, max_size=3), max_size=4))
def test_rank_matches_evaluation(rows):
    # A single point such as q = 2 can be a root of some minor, so take the
    # generic rank as the maximum over a few points; with coefficients this
    # small no nonzero minor vanishes at all of them.
    _, rank, _ = row_reduce(ScalarMatrix(rows, columns=[0, 1, 2]))
    if not rows:
        assert rank == 0
        return
    at_two = frac_rank([[s.evaluate(q=2) for s in r] for r in rows])
    generic = max(frac_rank([[s.evaluate(q=v) for s in r] for r in rows]) for v in (2, 3, 5, 7, 101))
    assert at_two <= rank == generic


@given(st.lists(st.lists(q_monomials, min_size=3, max_size=3), max_size=4))
def test_row_reduction_is_idempotent(rows):
    basis, rank, _ = row_reduce(ScalarMatrix(rows, columns=[0, 1, 2]))
    again, rank2, _ = row_reduce(basis)
    assert rank2 == rank
    # both bases reduce each other to zero
    combined = ScalarMatrix(basis.rows + again.rows, columns=[0, 1, 2])
    assert row_reduce(combined)[1] == rank
    combined = ScalarMatrix(rows + basis.rows, columns=[0, 1, 2])
    assert row_reduce(combined)[1] == rank
