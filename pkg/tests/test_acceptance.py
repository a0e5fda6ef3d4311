"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` (the lines are printed even
without ``-s``).
"""

import random
import time

from qcoord.hopf import apply_antipode, apply_rho, apply_tau
from qcoord.qmatrix import AlgebraElement, X, gl_equal, normal_form, weight
from qcoord.scalars import LaurentScalar, ScalarMatrix, row_reduce
from qcoord.suites import verify_suite

SEED = 20261016


def generator_word(rng, max_len=6):
    return [(rng.randint(1, 3), rng.randint(1, 3)) for _ in range(rng.randint(0, max_len))]


def word_element(word):
    out = AlgebraElement.one(3)
    for i, j in word:
        out = out * X(i, j)
    return out


def random_element(rng):
    out = AlgebraElement.zero(3)
    for _ in range(rng.randint(1, 3)):
        c = LaurentScalar.qpow(rng.randint(-2, 2), rng.choice([-2, -1, 1, 3]))
        out = out + word_element(generator_word(rng, 3)).scale(c)
    return out


def announce(capsys, number, title, results):
    failed = [name for name, ok in results if not ok]
    verdict = "PASS" if not failed else "FAIL"
    detail = f"{len(results)} checks" if not failed else "failed: " + "; ".join(failed)
    with capsys.disabled():
        print(f"\n[criterion {number}] {title}: {verdict} ({detail})")
    assert not failed, failed


def suite_results(name, n=3):
    report = verify_suite(name, n=n)
    return report, [(f"{name}: {c.name}", c.status == "pass") for c in report.checks]


def test_criterion_1_identities(capsys):
    start = time.perf_counter()
    report, results = suite_results("identities")
    elapsed = time.perf_counter() - start
    anchors = " ".join(c.anchor for c in report.checks)
    for needle in ("Laplace", "generator with a complementary cofactor", "two complementary cofactors", "commutes with every generator", "X13 Dq"):
        results.append((f"covers {needle}", needle in anchors))
    # the n=3 centrality check sweeps n = 2 and 3; the n=2 run repeats the small case
    small = verify_suite("identities", n=2)
    results += [(f"identities: {c.name}", c.status == "pass") for c in small.checks]
    results.append((f"runtime {elapsed:.1f}s under 60s", elapsed < 60))
    announce(capsys, 1, "identity suite", results)


def test_criterion_2_symmetries(capsys):
    _, results = suite_results("symmetries")
    rng = random.Random(SEED)
    involution = True
    for _ in range(100):
        a = random_element(rng)
        involution &= apply_tau(apply_tau(a)) == a and apply_rho(apply_rho(a)) == a
    results.append(("tau^2 = rho^2 = id on 100 random elements", involution))
    anti_rho, anti_s = True, True
    for _ in range(100):
        a = word_element(generator_word(rng, 2))
        b = word_element(generator_word(rng, 2))
        anti_rho &= apply_rho(a * b) == apply_rho(b) * apply_rho(a)
        anti_s &= gl_equal(apply_antipode(a * b), apply_antipode(b) * apply_antipode(a))
    results.append(("rho anti-multiplicative on 100 pairs", anti_rho))
    results.append(("S anti-multiplicative on 100 pairs", anti_s))
    announce(capsys, 2, "symmetry suite", results)


def test_criterion_3_hprimes(capsys):
    results = []
    for name in ("hprimes", "containment", "denominators"):
        results += suite_results(name)[1]
    announce(capsys, 3, "H-prime suite", results)


def test_criterion_4_centers(capsys):
    report, results = suite_results("centers")
    anchors = [c.anchor for c in report.checks]
    results.append(("36 center entries", anchors.count("the center of the localization is a Laurent polynomial ring in the listed indeterminates") == 36))
    results.append(("36 box sweeps", anchors.count("exhaustive search over exponents in [-2,2] matches the kernel lattice") == 36))
    announce(capsys, 4, "center suite", results)


def test_criterion_5_primitives(capsys):
    report, results = suite_results("primitives")
    semi = [c for c in report.checks if c.semi_decision]
    results.append(("non-membership checks are flagged as semi-decisions", bool(semi)))
    results += suite_results("decompositions")[1]
    announce(capsys, 5, "primitive suite", results)


def test_criterion_6_engine(capsys):
    rng = random.Random(SEED)
    results = []
    confluent = all(
        normal_form(w, strategy="leftmost") == normal_form(w, strategy="rightmost") == word_element(w)
        for w in (generator_word(rng) for _ in range(500))
    )
    results.append(("confluence on 500 words", confluent))
    assoc = True
    for _ in range(100):
        a, b, c = (word_element(generator_word(rng, 3)) for _ in range(3))
        assoc &= (a * b) * c == a * (b * c)
    results.append(("associativity on 100 triples", assoc))
    graded = True
    for _ in range(100):
        a, b = word_element(generator_word(rng, 3)), word_element(generator_word(rng, 3))
        graded &= weight(a * b) == weight(a) + weight(b)
    results.append(("grading additivity on 100 pairs", graded))
    idem = True
    for _ in range(50):
        rows = [[LaurentScalar.qpow(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(4)] for _ in range(rng.randint(1, 4))]
        basis, rank, _ = row_reduce(ScalarMatrix(rows, columns=[0, 1, 2, 3]))
        again, rank2, _ = row_reduce(basis)
        idem &= rank == rank2 and again.rows == basis.rows
    results.append(("row reduction idempotent on 50 matrices", idem))
    start = time.perf_counter()
    report = verify_suite("all", degree_bound=5)
    elapsed = time.perf_counter() - start
    results.append((f"verify all passes ({len(report.checks)} checks)", report.passed))
    results.append((f"verify all in {elapsed:.0f}s under 600s", elapsed < 600))
    announce(capsys, 6, "engine properties", results)
