import itertools

import pytest
from hypothesis import given, settings

from qcoord.hopf import (
    KINDS,
    antipode_square_sign,
    apply_antipode,
    apply_antipode_inverse,
    apply_composite,
    apply_rho,
    apply_tau,
    inverse_sequence,
    is_anti,
    minor_law,
    minor_law_composite,
    parse_composite,
    composite_name,
    q_conjugation,
    term_value,
    weight_law,
)
from qcoord.qmatrix import (
    AlgebraElement,
    GlElement,
    HWeight,
    MinorSpec,
    X,
    complement,
    gl_equal,
    quantum_determinant,
    quantum_minor,
    weight,
)
from qcoord.scalars import LaurentScalar, minus_q_pow
from strategies import elements, word_element, words

q = LaurentScalar.qpow
DQ = quantum_determinant(3)


def all_minors(n=3):
    for t in range(1, n + 1):
        for rows in itertools.combinations(range(1, n + 1), t):
            for cols in itertools.combinations(range(1, n + 1), t):
                yield MinorSpec(rows, cols)


def minor(rows, cols):
    return quantum_minor(MinorSpec(rows, cols))


def test_nineteen_minors():
    assert len(list(all_minors())) == 19


# -- tau --------------------------------------------------------------------


def test_tau_generator():
    assert apply_tau(X(1, 3)) == X(3, 1)


def test_tau_minor_example():
    assert apply_tau(minor((1, 2), (2, 3))) == minor((2, 3), (1, 2))


def test_tau_determinant():
    assert apply_tau(DQ) == DQ


@pytest.mark.parametrize("spec", list(all_minors()), ids=str)
def test_tau_minor_law(spec):
    assert apply_tau(quantum_minor(spec)) == quantum_minor(MinorSpec(spec.cols, spec.rows))


# -- rho --------------------------------------------------------------------


def test_rho_generator():
    assert apply_rho(X(1, 2)) == X(2, 3)


def test_rho_determinant():
    assert apply_rho(DQ) == DQ


@pytest.mark.parametrize("spec", list(all_minors()), ids=str)
def test_rho_minor_law(spec):
    w0 = lambda idx: sorted(4 - i for i in idx)
    assert apply_rho(quantum_minor(spec)) == quantum_minor(MinorSpec(w0(spec.cols), w0(spec.rows)))


# -- antipode ---------------------------------------------------------------


def test_antipode_x11():
    assert gl_equal(apply_antipode(X(1, 1)), GlElement(minor((2, 3), (2, 3)), 1))


def test_antipode_x31():
    assert gl_equal(apply_antipode(X(3, 1)), GlElement(minor((2, 3), (1, 2)).scale(q(2)), 1))


def test_antipode_of_inverse_determinant():
    assert gl_equal(apply_antipode(GlElement.dq_inverse(3)), GlElement(DQ, 0))


def test_antipode_of_determinant():
    assert gl_equal(apply_antipode(DQ), GlElement.dq_inverse(3))


@pytest.mark.parametrize("spec", [s for s in all_minors() if s.size < 3], ids=str)
def test_antipode_minor_law(spec):
    sign = minus_q_pow(sum(spec.rows) - sum(spec.cols))
    want = GlElement(quantum_minor(MinorSpec(complement(spec.cols, 3), complement(spec.rows, 3))).scale(sign), 1)
    assert gl_equal(apply_antipode(quantum_minor(spec)), want)


@pytest.mark.parametrize("n", [2, 3])
def test_antipode_is_a_left_inverse_of_the_matrix(n):
    # sum_j S(X_ij) X_jl = delta_il fixes the convention for S.
    for i, l in itertools.product(range(1, n + 1), repeat=2):
        total = GlElement(AlgebraElement.zero(n), 0)
        for j in range(1, n + 1):
            total = total + apply_antipode(X(i, j, n)) * X(j, l, n)
        want = GlElement(AlgebraElement.one(n) if i == l else AlgebraElement.zero(n), 0)
        assert gl_equal(total, want)


@pytest.mark.parametrize("n", [2, 3])
def test_antipode_square_is_q_conjugation(n):
    s = antipode_square_sign(n)
    assert s == 1
    for i, j in itertools.product(range(1, n + 1), repeat=2):
        x = X(i, j, n)
        assert gl_equal(apply_antipode(apply_antipode(x)), GlElement(x.scale(q(2 * (i - j))), 0))


def test_q_conjugation_inverse():
    a = X(1, 3) * X(3, 2) + DQ
    assert q_conjugation(q_conjugation(a, 1), -1) == a


@pytest.mark.parametrize("i,j", list(itertools.product(range(1, 4), repeat=2)))
def test_antipode_inverse(i, j):
    x = GlElement(X(i, j), 0)
    assert gl_equal(apply_antipode_inverse(apply_antipode(x)), x)
    assert gl_equal(apply_antipode(apply_antipode_inverse(x)), x)


# -- closed-form minor images ----------------------------------------------


@pytest.mark.parametrize("kind", KINDS)
def test_minor_law_matches_engine(kind):
    for spec in all_minors():
        direct = apply_composite([kind], GlElement(quantum_minor(spec), 0))
        assert gl_equal(direct, term_value(minor_law_composite([kind], spec, 3), 3)), (kind, spec)


@pytest.mark.parametrize("seq", [("S", "tau", "S-1"), ("S-1", "rho", "S"), ("S", "S"), ("tau", "S", "rho")])
def test_composite_minor_law_matches_engine(seq):
    for spec in all_minors():
        direct = apply_composite(seq, GlElement(quantum_minor(spec), 0))
        assert gl_equal(direct, term_value(minor_law_composite(seq, spec, 3), 3)), (seq, spec)


def test_minor_law_determinant_term():
    one = LaurentScalar.const(1)
    assert minor_law("S", (one, ((), ()), 1), 3) == (one, ((), ()), -1)


# -- composites -------------------------------------------------------------


def test_parse_composite_application_order():
    assert parse_composite("rho tau S") == ("S", "tau", "rho")
    assert parse_composite("S^-1 tau S") == ("S", "tau", "S-1")
    assert composite_name(("S", "tau", "rho")) == "rho tau S"


def test_parse_composite_rejects_unknown():
    with pytest.raises(ValueError):
        parse_composite("sigma")


def test_anti_parity():
    assert is_anti(("rho",)) and not is_anti(("rho", "tau", "S"))
    assert not is_anti(("S", "rho"))


def test_inverse_sequence():
    seq = parse_composite("S^-1 tau S")
    inv = inverse_sequence(seq)
    x = GlElement(X(2, 3), 0)
    assert gl_equal(apply_composite(inv, apply_composite(seq, x)), x)


# -- properties -------------------------------------------------------------


@settings(max_examples=100)
@given(elements())
def test_involutions(a):
    assert apply_tau(apply_tau(a)) == a
    assert apply_rho(apply_rho(a)) == a


@settings(max_examples=60)
@given(words)
def test_tau_and_rho_commute(word):
    a = word_element(word)
    assert apply_tau(apply_rho(a)) == apply_rho(apply_tau(a))


@settings(max_examples=100)
@given(words, words)
def test_tau_multiplicative_rho_anti(w1, w2):
    a, b = word_element(w1[:3]), word_element(w2[:3])
    assert apply_tau(a * b) == apply_tau(a) * apply_tau(b)
    assert apply_rho(a * b) == apply_rho(b) * apply_rho(a)


@settings(max_examples=100)
@given(words, words)
def test_antipode_anti_multiplicative(w1, w2):
    a, b = word_element(w1[:2]), word_element(w2[:2])
    assert gl_equal(apply_antipode(a * b), apply_antipode(b) * apply_antipode(a))


@settings(max_examples=80)
@given(words)
def test_weight_equivariance(word):
    a = word_element(word)
    if a.is_zero():
        return
    w = weight(a)
    for kind, f in (("tau", apply_tau), ("rho", apply_rho), ("S", apply_antipode)):
        r, c = weight_law(kind, w.row_degrees, w.col_degrees)
        image = f(a)
        assert weight(image) == HWeight(r, c), kind
