import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcoord.catalog import catalog_load
from qcoord.ideals import build_hprime
from qcoord.lattice import hermite_form, in_lattice, lattice_hnf, maximal_minor_gcd, same_lattice
from qcoord.qmatrix import MinorSpec, quantum_minor
from qcoord.qtorus import (
    NotATorus,
    ShapeError,
    TorusPresentation,
    box_kernel_vectors,
    box_oracle_agrees,
    exponent_vector,
    integer_kernel,
    presentation_from_generators,
    verify_center_entry,
    verify_fraction_identity,
)
from qcoord.scalars import LaurentScalar
from strategies import frac_rank

q = LaurentScalar.qpow

MATRIX_321_123 = (
    (0, 1, 0, 1, 1, 0),
    (-1, 0, 1, 1, 0, 0),
    (0, -1, 0, 0, 0, 0),
    (-1, -1, 0, 0, 0, 1),
    (-1, 0, 0, 0, 0, 1),
    (0, 0, 0, -1, -1, 0),
)
LABELS_321_123 = ("X11", "X21", "X22", "X31", "[23|12]", "X33")


@st.composite
def antisymmetric(draw, max_size=5):
    m = draw(st.integers(1, max_size))
    M = [[0] * m for _ in range(m)]
    for i, j in itertools.combinations(range(m), 2):
        M[i][j] = draw(st.integers(-2, 2))
        M[j][i] = -M[i][j]
    return M


# -- presentations ----------------------------------------------------------


def test_presentation_321_123():
    pres = presentation_from_generators(LABELS_321_123, build_hprime("321,123"))
    assert pres.matrix == MATRIX_321_123


def test_commutative_torus():
    pres = presentation_from_generators(("X11", "X22", "X33"), build_hprime("123,123"))
    assert pres.matrix == ((0, 0, 0),) * 3


def test_generic_pair_convention():
    # x_i x_j = q^(a_ij) x_j x_i and X11 X12 = q X12 X11
    pres = presentation_from_generators(("X11", "X12"))
    assert pres.matrix == ((0, 1), (-1, 0))


def test_not_a_torus():
    with pytest.raises(NotATorus) as info:
        presentation_from_generators(("X21", "X32"))
    assert info.value.pair == ("X21", "X32")


def test_permuting_labels_permutes_matrix():
    spec = build_hprime("321,123")
    base = presentation_from_generators(LABELS_321_123, spec)
    order = (4, 0, 5, 2, 1, 3)
    relabelled = presentation_from_generators([LABELS_321_123[i] for i in order], spec)
    assert relabelled == base.permuted(order)


def test_presentation_shape_checks():
    with pytest.raises(ShapeError):
        TorusPresentation(("a", "b"), ((0, 1), (1, 0)))
    with pytest.raises(ShapeError):
        TorusPresentation(("a",), ((0, 1), (-1, 0)))


# -- kernels ----------------------------------------------------------------


def test_zero_matrix_kernel():
    lat = integer_kernel([[0] * 3] * 3)
    assert lat.rank == 3
    assert same_lattice(lat.basis, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])


def test_nondegenerate_pair():
    assert integer_kernel([[0, 1], [-1, 0]]).rank == 0


def test_kernel_321_123():
    lat = integer_kernel(MATRIX_321_123)
    assert lat.rank == 2
    assert same_lattice(lat.basis, [(1, 0, 1, 0, 0, 1), (0, 0, 1, -1, 1, 0)])
    for a, b, c, d, e, f in lat.basis:
        assert a == f == c + d and b == 0 and e == -d


def test_kernel_rejects_non_antisymmetric():
    with pytest.raises(ShapeError):
        integer_kernel([[0, 1], [1, 0]])
    with pytest.raises(ShapeError):
        integer_kernel([[1]])


def test_box_sweep_321_123():
    found = box_kernel_vectors(MATRIX_321_123, 2)
    lat = integer_kernel(MATRIX_321_123)
    assert len(found) > 1
    assert all(lat.contains(tuple(int(x) for x in v)) for v in found)


@settings(max_examples=60)
@given(antisymmetric())
def test_kernel_properties(M):
    lat = integer_kernel(M)
    m = len(M)
    # rank over Q, by independent elimination
    assert lat.rank == m - frac_rank(M)
    for v in lat.basis:
        assert all(sum(a * s for a, s in zip(row, v)) == 0 for row in M)
    assert maximal_minor_gcd(lat.basis) == 1
    ok, witness = box_oracle_agrees(M, lat, radius=1)
    assert ok, witness


@settings(max_examples=60)
@given(st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=1, max_size=4))
def test_hermite_form(rows):
    H, U, r = hermite_form(rows, track=True)
    product = [tuple(sum(U[i][k] * rows[k][j] for k in range(len(rows))) for j in range(4)) for i in range(len(rows))]
    assert product == H
    assert abs(round(_det(U))) == 1
    assert r == frac_rank(rows)
    assert lattice_hnf(lattice_hnf(rows)) == lattice_hnf(rows)
    for row in rows:
        assert in_lattice(lattice_hnf(rows), row)


def _det(M):
    return float(np.linalg.det(np.array(M, dtype=float))) if M else 1.0


# -- catalog entries ---------------------------------------------------------


def test_center_123_123():
    rep = verify_center_entry("123,123", ("X11", "X22", "X33"), [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert rep.ok and len(rep.kernel) == 3


def test_center_231_123():
    rep = verify_center_entry("231,123", ("X11", "X21", "X22", "X32", "X33"), [(1, 0, 1, 0, 1)])
    assert rep.ok


def test_center_321_123():
    rep = verify_center_entry("321,123", LABELS_321_123, [(1, 0, 1, 0, 0, 1), (0, 0, 1, -1, 1, 0)])
    assert rep.ok
    assert rep.matrix == MATRIX_321_123


def test_center_index_two_sublattice_is_rejected():
    rep = verify_center_entry("321,123", LABELS_321_123, [(1, 0, 1, 0, 0, 1), (0, 0, 2, -2, 2, 0)])
    assert rep.rank_ok and rep.in_kernel_ok and not rep.basis_ok
    assert rep.problems


def test_center_wrong_rank():
    rep = verify_center_entry("123,123", ("X11", "X22", "X33"), [(1, 1, 1)])
    assert not rep.ok and not rep.rank_ok


def test_center_non_kernel_vector():
    rep = verify_center_entry("231,123", ("X11", "X21", "X22", "X32", "X33"), [(1, 1, 0, 0, 0)])
    assert not rep.in_kernel_ok


def test_center_bad_labels():
    rep = verify_center_entry("321,321", ("X21", "X32"), [])
    assert not rep.presentation_ok and not rep.ok


@pytest.mark.parametrize("key", sorted(catalog_load().entries))
def test_catalog_center(key):
    e = catalog_load().entries[key]
    rep = verify_center_entry(key, e.torus_labels, e.center_vectors)
    assert rep.ok, rep.problems
    assert len(e.center_vectors) <= 3
    ok, witness = box_oracle_agrees(rep.matrix, integer_kernel(rep.matrix))
    assert ok, witness


def test_exponent_vector_with_rewrite():
    labels = ["X11", "X21", "X22", "X31", "[23|12]", "X33"]
    rewrites = {"Dq": ([], ["X11", "X22", "X33"])}
    assert exponent_vector("Dq", labels, rewrites) == (1, 0, 1, 0, 0, 1)
    assert exponent_vector("X22*[23|12]*X31^-1", labels, rewrites) == (0, 0, 1, -1, 1, 0)
    with pytest.raises(KeyError):
        exponent_vector("X12", labels, rewrites)


# -- fraction identities -----------------------------------------------------


def test_x11_in_231_231():
    assert verify_fraction_identity("[23|23]*X11", [(1, "Dq"), (q(-1), "[13|23]*X21")], "231,231")


def test_x13_dq_congruence():
    ideal = [quantum_minor(MinorSpec((1, 2), (2, 3)))]
    assert verify_fraction_identity("X13*Dq", "[12|13]*[13|23]", ideal)


def test_x32_cleared():
    assert verify_fraction_identity("X21*X32", [(q(1), "X22*X31"), (1, "[23|12]")])


def test_false_identity():
    assert not verify_fraction_identity("X21*X32", [(q(1), "X22*X31")])
    assert not verify_fraction_identity("[23|23]*X11", "Dq", "231,231")
