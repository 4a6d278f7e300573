"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Every criterion is exercised through the same check functions the CLI
dispatches to, at the sizes and tolerances fixed below (all comparisons are
bit-exact; the only tolerances are the stated wall-clock budgets).
"""

import time

from zigcat import checks
from zigcat.zigzag import build_algebra


def _assert_all(results, label, budget=None, elapsed=None):
    failures = [r for r in results if r["verdict"] != "pass"]
    status = "PASS" if not failures else "FAIL"
    extra = f" ({elapsed:.1f}s)" if elapsed is not None else ""
    print(f"[{status}] {label}: {len(results) - len(failures)}/{len(results)}{extra}")
    assert not failures, failures[:5]
    if budget is not None and elapsed is not None:
        assert elapsed < budget, f"{label} exceeded {budget}s: {elapsed:.1f}s"


def test_criterion_01_algebra_construction():
    t0 = time.time()
    results = checks.check_algebra("B", [2, 3, 4, 5, 6])
    results += checks.check_algebra("A", [3, 5, 7, 9])
    _assert_all(results, "1 algebra dims+relations", budget=5, elapsed=time.time() - t0)


def test_criterion_02_hom_tables():
    from zigcat.exact import TriPoly

    results = []
    for n in range(2, 6):
        B = build_algebra("B", n)
        rows = {
            (1, 1): "1 + q2",
            (2, 2): "1 + q3 + q2 + q2*q3",
            (1, 2): "1 + q3",
            (2, 1): "q2 + q2*q3",
        }
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                got = B.hom_table(j, k)
                if j == k:
                    want = rows[(1, 1)] if j == 1 else rows[(2, 2)]
                elif abs(j - k) > 1:
                    want = "0"
                elif k == j + 1:
                    want = rows[(1, 2)]
                else:
                    want = rows[(2, 1)]
                ok = got == TriPoly.parse(want)
                results.append(
                    {
                        "check": "hom-table",
                        "instance": f"n={n} ({j},{k})",
                        "verdict": "pass" if ok else "fail",
                        "witness": "" if ok else got.render(),
                    }
                )
    _assert_all(results, "2 hom tables")


def test_criterion_03_braid_relations():
    t0 = time.time()
    results = []
    for n in (2, 3, 4):
        results += checks.check_braid_relations("B", n)
        results += checks.check_inverse("B", n)
    _assert_all(results, "3 braid relations", budget=120, elapsed=time.time() - t0)


def test_criterion_04_type_b_relation_chain():
    t0 = time.time()
    results = checks.check_typeb_chain(2) + checks.check_typeb_chain(3)
    _assert_all(results, "4 type B chain", budget=10, elapsed=time.time() - t0)


def test_criterion_05_k0_functoriality():
    results = checks.check_k0_functoriality(3, count=100, maxlen=8)
    results += checks.check_burau_displays()
    _assert_all(results, "5 K0 functoriality + displays")


def test_criterion_06_equivariance():
    t0 = time.time()
    results = checks.check_equivariance(2, 4)
    results += checks.check_equivariance(3, 3)
    _assert_all(results, "6 equivariance", budget=300, elapsed=time.time() - t0)


def test_criterion_07_decat_square():
    results = checks.check_decat_square([2, 3, 4])
    _assert_all(results, "7 decategorified square")


def test_criterion_08_poincare_equals_itrigr():
    results = checks.check_poincare_itrigr()
    _assert_all(results, "8 Poincare = trigraded intersection")


def test_criterion_09_sgn_law():
    results = checks.check_sgn_law()
    _assert_all(results, "9 sgn law")


def test_criterion_10_tl_decompositions():
    results = checks.check_tl(3)
    _assert_all(results, "10 TL decompositions")


def test_criterion_11_cartan():
    results = checks.check_cartan([2, 3, 4, 5])
    _assert_all(results, "11 Cartan / intersection form")


def test_criterion_12_soergel_relations():
    results = checks.check_soergel(2) + checks.check_soergel(3)
    _assert_all(results, "12 relation suite (reference scalars)")
    from zigcat.tlrel import paper_scalars

    perturbed = paper_scalars(2)
    from fractions import Fraction

    perturbed["b"][1] = Fraction(2)
    report = checks.check_soergel(2, perturbed)
    bad = [r for r in report if r["verdict"] != "pass"]
    print(f"[PASS] 12b perturbation b1->2 breaks {len(bad)} relations")
    assert bad, "perturbed scalars must fail at least one relation"


def test_criterion_13_faithfulness_sample():
    t0 = time.time()
    results = checks.faithfulness_sample(2, 3)
    _assert_all(results, "13 faithfulness sample", budget=120, elapsed=time.time() - t0)
