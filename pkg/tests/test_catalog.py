import dataclasses
import json
from fractions import Fraction

import jsonschema
import pytest

from qcoord.catalog import (
    CatalogIntegrityError,
    ParameterError,
    catalog_load,
    predicted_target,
    primitive_ideal_generators,
    sl_variant_expected,
    validate,
)
from qcoord.export import catalog_from_json, catalog_json, export_json, load_schema, report_json
from qcoord.ideals import all_w, build_hprime, containment_poset, w_key
from qcoord.qmatrix import AlgebraElement, MinorSpec, X, quantum_determinant, quantum_minor
from qcoord.scalars import ALPHA, BETA, GAMMA, LaurentScalar
from qcoord.suites import SUITES, UsageError, parse_coefficient, verify_suite, verify_symmetry_table


def minor(rows, cols):
    return quantum_minor(MinorSpec(rows, cols))


def const(c):
    return AlgebraElement.scalar(3, LaurentScalar.coerce(c))


@pytest.fixture(scope="module")
def cat():
    return catalog_load()


@pytest.fixture(scope="module")
def full_report():
    return verify_suite("all")


# -- loading ----------------------------------------------------------------


def test_thirty_six_entries(cat):
    assert len(cat) == 36
    assert sorted(cat.entries) == sorted(w_key(w) for w in all_w())


def test_entry_321_321(cat):
    e = cat["321,321"]
    assert e.hprime_generators == []
    assert set(e.denominators_plus) | set(e.denominators_minus) == {"X31", "[23|12]", "[12|23]", "X13"}


def test_entry_231_231(cat):
    assert {str(s) for s in cat["231,231"].hprime_generators} == {"[12|23]", "X31"}


def test_entry_213_321_decomposition(cat):
    assert cat["213,321"].dq_decomposition == ("[12|12]*X33", "+")


def test_hprimes_match_formulas(cat):
    for key, e in cat.entries.items():
        assert set(e.hprime_generators) == set(build_hprime(key).generators), key


def test_corrupted_entry_is_rejected(cat):
    bad = dict(cat.entries)
    e = bad["231,231"]
    bad["231,231"] = dataclasses.replace(e, hprime_generators=e.hprime_generators[:1])
    with pytest.raises(CatalogIntegrityError, match="231,231"):
        validate(dataclasses.replace(cat, entries=bad))


def test_missing_entry_is_rejected(cat):
    bad = dict(cat.entries)
    del bad["123,123"]
    with pytest.raises(CatalogIntegrityError):
        validate(dataclasses.replace(cat, entries=bad))


def test_corrupted_permutation_table(cat):
    table = list(cat.permutation_table)
    table[1] = (table[1][0], table[1][0], table[1][2], table[1][3])
    with pytest.raises(CatalogIntegrityError):
        validate(dataclasses.replace(cat, permutation_table=table))


def test_wrong_center_vector_is_rejected(cat):
    bad = dict(cat.entries)
    e = bad["321,123"]
    vectors = list(e.center_vectors)
    vectors[0] = (1, 0, 1, 0, 0, 0)
    bad["321,123"] = dataclasses.replace(e, center_vectors=vectors)
    with pytest.raises(CatalogIntegrityError, match="321,123"):
        validate(dataclasses.replace(cat, entries=bad))


# -- primitive ideals ---------------------------------------------------------


def test_primitive_321_321():
    gens = primitive_ideal_generators("321,321")
    want = [
        quantum_determinant(3) - const(ALPHA),
        minor((2, 3), (1, 2)) - X(1, 3).scale(BETA),
        minor((1, 2), (2, 3)) - X(3, 1).scale(GAMMA),
    ]
    assert gens == want


def test_primitive_123_123():
    gens = primitive_ideal_generators("123,123")
    k = len(build_hprime("123,123").generators)
    assert gens[k:] == [X(1, 1) - const(ALPHA), X(2, 2) - const(BETA), X(3, 3) - const(GAMMA)]
    assert gens[:k] == build_hprime("123,123").elements()


def test_primitive_132_132_sl():
    gens = primitive_ideal_generators("132,132", sl=True)
    k = len(build_hprime("132,132").generators)
    assert gens[k:] == [
        X(1, 1) - const(ALPHA),
        minor((2, 3), (2, 3)) - const(LaurentScalar.monomial((0, -1, 0, 0))),
        X(2, 3) - X(3, 2).scale(GAMMA),
    ]


def test_numeric_parameters():
    gens = primitive_ideal_generators("321,321", {"alpha": Fraction(2), "beta": Fraction(1, 3), "gamma": -1})
    assert gens[0] == quantum_determinant(3) - const(2)
    assert gens[1] == minor((2, 3), (1, 2)) - X(1, 3).scale(Fraction(1, 3))


def test_zero_parameter():
    with pytest.raises(ParameterError):
        primitive_ideal_generators("321,321", {"alpha": 0})


def test_unknown_parameter():
    with pytest.raises(ParameterError):
        primitive_ideal_generators("321,321", {"delta": 1})


def test_primitive_degrees(cat):
    for key in cat.entries:
        for sl in (False, True):
            assert all(g.max_degree() <= 3 for g in primitive_ideal_generators(key, sl=sl))


def test_sl_variant_is_substitution(cat):
    for key, e in cat.entries.items():
        assert [b.render() for b in e.sl3_generators] == [b.render() for b in sl_variant_expected(e)], key
        assert all(b.e != "Dq" for b in e.sl3_generators)


def test_one_binomial_per_center_indeterminate(cat):
    for e in cat.entries.values():
        assert len(e.primitive_generators) == len(e.center_vectors)


# -- symmetries ---------------------------------------------------------------


def test_symmetry_targets(cat):
    for s in cat.symmetries:
        assert predicted_target(s.source, s.maps) == s.target, s.name


def test_tau_example(cat):
    assert predicted_target("231,321", ("tau",)) == "321,312"


def test_symmetry_table_report():
    report = verify_symmetry_table()
    assert report.passed, [c.name for c in report.failures]
    anchors = {c.anchor for c in report.checks}
    assert "the antipode image of X31 modulo X31" in anchors
    rho_tau = [c for c in report.checks if c.name.startswith("rho tau carries")]
    assert len(rho_tau) == 12


# -- suites -------------------------------------------------------------------


def test_parse_coefficient():
    assert parse_coefficient("1") == LaurentScalar.const(1)
    assert parse_coefficient("q^-1") == LaurentScalar.qpow(-1)
    assert parse_coefficient("-q^2") == LaurentScalar.qpow(2, -1)


def test_unknown_suite():
    with pytest.raises(UsageError):
        verify_suite("nonsense")


def test_n2_restricted_to_generic_suites():
    assert verify_suite("identities", n=2).passed
    with pytest.raises(UsageError):
        verify_suite("centers", n=2)


@pytest.mark.parametrize("name", ["hprimes", "centers", "decompositions", "containment"])
def test_suite_passes(name):
    report = verify_suite(name)
    assert report.passed and report.exit_code == 0, [c.to_json() for c in report.failures]


def test_centers_suite_covers_all_entries():
    report = verify_suite("centers")
    torus = [c for c in report.checks if c.name.endswith(": center of the quantum torus")]
    assert len(torus) == 36 and all(c.status == "pass" for c in torus)


def test_full_report(full_report):
    assert full_report.passed
    assert set(full_report.by_suite()) == set(SUITES)
    semi = [c for c in full_report.checks if c.semi_decision]
    assert semi and all(c.suite == "primitives" for c in semi)


def test_failure_sets_exit_code(cat):
    bad = dict(cat.entries)
    e = bad["321,123"]
    bad["321,123"] = dataclasses.replace(e, torus_labels=["X21", "X32"] + e.torus_labels[2:])
    report = verify_suite("centers", catalog=dataclasses.replace(cat, entries=bad))
    assert not report.passed and report.exit_code == 1
    assert report.failures[0].witness is not None or report.failures[0].detail


# -- export -------------------------------------------------------------------


def test_catalog_export_validates(tmp_path, cat):
    path = tmp_path / "catalog.json"
    text = export_json("catalog", cat, path)
    data = json.loads(path.read_text())
    assert text == path.read_text()
    jsonschema.validate(data, load_schema("catalog"))
    assert len(data["entries"]) == 36
    assert data["entries"][0]["hprime_generators"][0].keys() == {"rows", "cols"}


def test_export_is_deterministic(cat):
    assert export_json("catalog", cat) == export_json("catalog", catalog_load())


def test_catalog_round_trip(cat, full_report):
    imported = catalog_from_json(json.loads(export_json("catalog", cat)))
    assert catalog_json(imported) == catalog_json(cat)
    again = verify_suite("all", catalog=imported)
    assert report_json(again) == report_json(full_report)


def test_import_rejects_tampered_json(cat):
    data = json.loads(export_json("catalog", cat))
    for entry in data["entries"]:
        if entry["w"] == "231,231":
            entry["hprime_generators"] = entry["hprime_generators"][:1]
    with pytest.raises(CatalogIntegrityError):
        catalog_from_json(data)


def test_report_export(full_report, tmp_path):
    data = json.loads(export_json("report", full_report, tmp_path / "r.json"))
    jsonschema.validate(data, load_schema("report"))
    assert all("status" in c and "anchor" in c for c in data["checks"])


def test_poset_export():
    data = json.loads(export_json("poset", containment_poset()))
    jsonschema.validate(data, load_schema("poset"))
    assert "231,321" in data["order"]["321,321"]


def test_unknown_export_kind(cat):
    with pytest.raises(ValueError):
        export_json("nothing", cat)


def test_export_io_error(cat, tmp_path):
    with pytest.raises(OSError):
        export_json("catalog", cat, tmp_path / "missing" / "dir" / "c.json")
