from fractions import Fraction

import pytest

from zigcat.curves import (
    Crossing,
    CurveError,
    TrigradedCurve,
    itrigr_basic,
    jstrings,
    lb,
    load_suite,
    string_contribution,
    symmetry_check,
)
from zigcat.exact import TriPoly
from zigcat.homotopy import hom_poincare, projective_complex
from zigcat.zigzag import build_algebra

C = Crossing


def basic(n, j):
    return TrigradedCurve(n, [C(j, (0, 0, 0))], [], [], (j - 1, j))


def test_basic_curve_complex():
    b2 = basic(3, 2)
    assert lb(b2).render() == "deg 0: P2"
    b1s = basic(3, 1).shifted(1, 1, 1)
    # P(y) = P_{y0}[-y1]{y2}<y3> sits in cohomological degree y1
    assert lb(b1s).render() == "deg 1: P1{1}<1>"


def test_shift_lemma():
    curve = TrigradedCurve(
        3,
        [C(1, (0, 0, 0)), C(2, (1, 0, 0)), C(3, (0, 1, 0))],
        [(0, 1, 1), (1, 2, 2)],
        [],
        (0, 3),
    )
    L = lb(curve)
    Ls = lb(curve.shifted(2, -1, 1))
    assert Ls.terms == L.global_shift(-2, -1, 1).terms
    assert Ls.diff == L.global_shift(-2, -1, 1).diff


def test_check_complex_cancellation():
    # the wrap-both 1-string with crossings b, c, d, a: the two composites
    # P(b) -> P(a) are X_2 i and -X_2 i; the constructor verifies d.d = 0
    curve = TrigradedCurve(
        3,
        [C(2, (0, 0, 0)), C(1, (1, -1, 0)), C(1, (1, -1, 1)), C(2, (2, -1, 1)), C(3, (3, -1, 1))],
        [(0, 1, 1), (2, 3, 1), (3, 4, 2)],
        [(1, 2)],
        (2, 3),
    )
    L = lb(curve)
    entries = {k: repr(v) for k, v in L.diff[0].items()}
    assert any("(ie2)(2|1)" in v for v in entries.values())  # the -i(2|1) companion
    # and the (1|2)(ie2) companion one degree up
    d1 = {k: repr(v) for k, v in L.diff[1].items()}
    assert any("(1|2)(ie2)" in v for v in d1.values())


def test_validation_errors():
    with pytest.raises(CurveError):
        TrigradedCurve(3, [C(5, (0, 0, 0))], [], [], (0, 1))
    with pytest.raises(CurveError, match="cross-wall"):
        TrigradedCurve(
            3,
            [C(1, (0, 0, 0)), C(2, (2, 0, 0))],
            [(0, 1, 1)],
            [],
            (0, 2),
        )
    with pytest.raises(CurveError, match="no segment"):
        TrigradedCurve(3, [C(1, (0, 0, 0)), C(2, (1, 0, 0))], [], [], (0, 2))
    with pytest.raises(CurveError, match="d0 pair"):
        TrigradedCurve(
            3,
            [C(1, (0, 0, 0)), C(1, (1, 0, 1))],
            [],
            [(0, 1)],
            (0, 0),
        )
    with pytest.raises(CurveError, match="endpoint"):
        TrigradedCurve(3, [C(3, (0, 0, 0))], [], [], (0, 3))


def test_jstring_examples():
    b2 = basic(3, 2)
    (s,) = jstrings(b2, 2)
    assert (s.type_tag, s.w, s.base) == ("VI", 0, (0, 0, 0))
    assert string_contribution(s) == TriPoly.parse("1 + q2 + q3 + q2*q3")
    (s1,) = jstrings(basic(3, 1), 1)
    assert (s1.type_tag, s1.base) == ("VI", (0, 0, 0))
    assert string_contribution(s1) == TriPoly.parse("1 + q2")
    # the half-integer families appear on curves through D_0
    curve = load_suite()["wrap0_n3"]
    tags = {s.type_tag for s in jstrings(curve, 1)}
    assert "II'+1/2" in tags


def test_contribution_table_rows():
    # shifted/twisted members scale by q^r (q1^-1 q2)^w
    from zigcat.curves import JString

    base = string_contribution(JString(2, "I", 0, (0, 0, 0), ()))
    assert base == TriPoly.parse("q1 + q2 + q2*q3 + q1*q3")
    shifted = string_contribution(JString(2, "I", 0, (1, 0, 0), ()))
    assert shifted == base * TriPoly.mono(a=1)
    twisted = string_contribution(JString(2, "I", 1, (0, 0, 0), ()))
    assert twisted == base * TriPoly.mono(a=-1, b=1)
    # the (w+1)-member equals the w-member with base composed with (-1,1,0)
    for tag in ("I", "II", "II'", "III", "III'", "VI"):
        lhs = string_contribution(JString(2, tag, 1, (0, 0, 0), ()))
        rhs = string_contribution(JString(2, tag, 0, (-1, 1, 0), ()))
        assert lhs == rhs
    # and the 1-string families use (q1^-1 q2 q3) per full twist
    for tag in ("II'", "II'+1/2", "III'", "III'+1/2", "VI"):
        lhs = string_contribution(JString(1, tag, 1, (0, 0, 0), ()))
        rhs = string_contribution(JString(1, tag, 0, (-1, 1, 1), ()))
        assert lhs == rhs


def test_symmetry_check():
    assert symmetry_check((0, 0, 0), "Interior") == (1, 0, 0)
    assert symmetry_check((1, 0, 1), "Zero") == (0, 0, 0)
    for loc in ("Interior", "Puncture", "Zero"):
        for mu in ((0, 0, 0), (2, -1, 1), (-3, 4, 0)):
            assert symmetry_check(symmetry_check(mu, loc), loc) == mu
    with pytest.raises(ValueError):
        symmetry_check((0, 0, 0), "Elsewhere")


def test_roundtrip_bit_exact(tmp_path):
    suite = load_suite()
    for name, curve in suite.items():
        text = curve.to_json()
        again = TrigradedCurve.from_json(text)
        assert again.to_json() == text
        p = tmp_path / f"{name}.json"
        curve.save(p)
        assert TrigradedCurve.load(p).to_json() == text


def test_poincare_equals_itrigr_on_suite():
    for name, curve in load_suite().items():
        alg = build_algebra("B", curve.n)
        L = lb(curve)
        for j in range(1, curve.n + 1):
            assert hom_poincare(projective_complex(alg, j), L) == itrigr_basic(j, curve), (
                name,
                j,
            )


def test_hom_pairing_duality():
    # swapping the arguments of the Hom pairing dualizes the polynomial by
    # a_{r} q1^{r1} q2^{r2} q3^{r3} -> a_{r} q1^{-r1} q2^{1-r2} q3^{r3},
    # matching the local-index swap symmetry of intersection numbers
    def dual(p):
        return TriPoly([((-a, 1 - b, c), v) for (a, b, c), v in p.terms.items()])

    for name, curve in load_suite().items():
        alg = build_algebra("B", curve.n)
        L = lb(curve)
        for j in range(1, curve.n + 1):
            P = projective_complex(alg, j)
            assert hom_poincare(L, P) == dual(hom_poincare(P, L)), (name, j)


def test_geometric_intersection_specialization():
    # itrigr at q1 = q2 = q3 = 1, halved, is a nonnegative half-integer times 2
    for name, curve in load_suite().items():
        for j in range(1, curve.n + 1):
            total = itrigr_basic(j, curve).evaluate(1, 1, 1)
            assert total >= 0 and (total * Fraction(1, 2)) * 2 == total


def test_unclassifiable_string_reports_crossings():
    # locally valid data whose 3-string profile (two chained loops) is not a
    # normal-form string type; the classifier must refuse it
    curve = TrigradedCurve(
        3,
        [C(2, (0, 0, 0)), C(2, (1, -1, 0)), C(2, (2, -2, 0))],
        [(0, 1, 2), (1, 2, 2)],
        [],
        (1, 2),
    )
    with pytest.raises(CurveError, match="unclassifiable"):
        jstrings(curve, 3)
