from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zigcat.exact import GaussRat, TriPoly

coeffs = st.integers(-5, 5)
exps = st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(0, 1))
polys = st.builds(
    TriPoly, st.dictionaries(exps, coeffs, max_size=4)
)


def test_q3_squares_to_one():
    p = TriPoly.parse("1 + q3")
    assert p * p == TriPoly.parse("2 + 2*q3")


def test_basic_trigrading_product():
    left = TriPoly.parse("1 + q3")
    right = TriPoly.parse("1 + q1^-1*q2")
    assert left * right == TriPoly.parse("1 + q3 + q1^-1*q2 + q1^-1*q2*q3")


def test_unit():
    p = TriPoly.parse("2 + q1*q2^-1*q3")
    assert p * TriPoly.one() == p


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert p + q == q + p


@settings(max_examples=40, deadline=None)
@given(polys, polys)
def test_specializations_multiplicative(p, q):
    for target in ("Bigraded",):
        assert (p * q).specialize(target) == p.specialize(target) * q.specialize(target)
    # K0/Cartan require q1-free (and q3-even) inputs
    p0 = TriPoly([((0, b, c), v) for (_, b, c), v in p.terms.items()])
    q0 = TriPoly([((0, b, c), v) for (_, b, c), v in q.terms.items()])
    assert (p0 * q0).specialize("K0") == p0.specialize("K0") * q0.specialize("K0")


def test_cartan_specialization():
    assert TriPoly.parse("1 + q2").specialize("Cartan").render((None, "t", None)) == "1 + t"
    with pytest.raises(ValueError, match="q3-even"):
        TriPoly.parse("1 + q3").specialize("Cartan")


def test_k0_specialization_renders_with_q_and_s():
    p = TriPoly.parse("1 + q3") * TriPoly.parse("1 + q2")
    assert p.specialize("K0").render((None, "q", "s")) == "1 + s + q + q*s"


def test_render_parse_roundtrip():
    p = TriPoly.parse("3/2 + q1^-2*q2 - q3 + 5*q1*q2^-1*q3")
    assert TriPoly.parse(p.render()) == p
    assert TriPoly.parse("0") == TriPoly.zero()


def test_canonical_ordering():
    p = TriPoly.parse("q2*q3 + q3 + q2 + 1")
    assert p.render() == "1 + q3 + q2 + q2*q3"


gauss = st.builds(
    GaussRat,
    st.fractions(max_denominator=6),
    st.fractions(max_denominator=6),
)


@settings(max_examples=50, deadline=None)
@given(gauss, gauss)
def test_conjugation_automorphism(z, w):
    assert z.conj().conj() == z
    assert (z * w).conj() == z.conj() * w.conj()
    assert (z + w).conj() == z.conj() + w.conj()


def test_gauss_inverse():
    z = GaussRat(Fraction(3, 2), Fraction(-1, 5))
    assert z * z.inverse() == GaussRat(1)
    with pytest.raises(ZeroDivisionError):
        GaussRat(0).inverse()
