import random

from zigcat.homotopy import BraidWord, apply_word, projective_complex, random_complex
from zigcat.textio import parse_complex, parse_element, parse_projective, render_complex
from zigcat.zigzag import build_algebra

B2 = build_algebra("B", 2)
B3 = build_algebra("B", 3)


def test_parse_projective():
    t = parse_projective("P1[2]{1}<1>")
    assert (t.vertex, t.coh, t.internal, t.z2) == (1, -2, 1, 1)
    assert parse_projective("P3").vertex == 3


def test_parse_element():
    e = parse_element(B2, "(1|2) + (1|2)(ie2)")
    assert repr(e) == "(1|2) + (1|2)(ie2)"
    e = parse_element(B2, "-X1")
    assert repr(e) == "-X1"
    e = parse_element(B2, "(3/2)*X2 - ie2")
    assert repr(parse_element(B2, repr(e))) == repr(e)
    assert parse_element(B2, "0").is_zero()


def test_complex_roundtrip_braid_images():
    rng = random.Random(17)
    for _ in range(10):
        letters = tuple((rng.randint(1, 3), rng.choice([1, -1])) for _ in range(3))
        C = apply_word(projective_complex(B3, rng.randint(1, 3)), BraidWord("B", 3, letters))
        text = render_complex(C)
        D = parse_complex(B3, text)
        assert D.terms == C.terms
        assert D.diff == C.diff
        assert render_complex(D) == text


def test_complex_roundtrip_random():
    rng = random.Random(23)
    for _ in range(10):
        C = random_complex(B2, rng)
        text = render_complex(C)
        D = parse_complex(B2, text)
        assert D.terms == C.terms and D.diff == C.diff
