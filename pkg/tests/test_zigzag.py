import pytest

from zigcat.exact import TriPoly
from zigcat.zigzag import build_algebra


def test_dimensions():
    for n in range(2, 7):
        assert len(build_algebra("B", n).basis) == 8 * n - 6
    for n in range(2, 6):
        assert len(build_algebra("A", 2 * n - 1).basis) == 8 * n - 6


def test_bad_sizes():
    with pytest.raises(ValueError):
        build_algebra("B", 1)
    with pytest.raises(ValueError):
        build_algebra("A", 4)  # ks preset needs odd m
    build_algebra("A", 4, "pathlen")


def test_zigzag_kills_long_paths():
    B = build_algebra("B", 3)
    prod = B.arrow(1, 2) * B.arrow(2, 3) * B.arrow(3, 2) * B.arrow(2, 1)
    assert prod.is_zero()
    assert (B.arrow(1, 2) * B.arrow(2, 1)) == B.loop(1)
    assert (B.arrow(2, 3) * B.arrow(3, 2)) == B.loop(2)


def test_type_b_extras():
    B = build_algebra("B", 3)
    i2 = B.imag(2)
    assert i2 * i2 == -B.idempotent(2)
    assert (B.arrow(1, 2) * i2 * B.arrow(2, 1)).is_zero()
    assert i2 * B.loop(2) == B.loop(2) * i2
    assert B.imag(2) * B.arrow(2, 3) == B.arrow(2, 3) * B.imag(3)


def test_unit_and_blocks():
    B = build_algebra("B", 4)
    one = B.unit_element()
    for sym in B.basis:
        x = B.element(sym)
        assert one * x == x and x * one == x


def test_hom_tables_match_bimodule_table():
    # every row of the tensor-decomposition table, in bigraded dimensions
    for n in range(2, 6):
        B = build_algebra("B", n)
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                got = B.hom_table(j, k)
                if j == k == 1:
                    expected = TriPoly.parse("1 + q2")
                elif j == k:
                    expected = TriPoly.parse("1 + q2") * TriPoly.parse("1 + q3")
                elif k - j == 1 and j >= 2:
                    expected = TriPoly.parse("1 + q3")
                elif j - k == 1 and k >= 2:
                    expected = TriPoly.parse("q2 + q2*q3")
                elif (j, k) == (1, 2):
                    expected = TriPoly.parse("1 + q3")
                elif (j, k) == (2, 1):
                    expected = TriPoly.parse("q2 + q2*q3")
                else:
                    expected = TriPoly.zero()
                assert got == expected, (n, j, k, got)


def test_hom_table_out_of_range():
    B = build_algebra("B", 2)
    with pytest.raises(ValueError):
        B.hom_table(0, 1)
    with pytest.raises(ValueError):
        B.hom_table(1, 5)


def test_grdim_matrices_n2():
    B = build_algebra("B", 2, "pathlen")
    two = B.grdim_matrix("TwoSided")
    names = (None, "t", None)
    assert [[e.render(names) for e in row] for row in two] == [
        ["1 + t^2", "2*t"],
        ["2*t", "2 + 2*t^2"],
    ]
    assert [[e.evaluate(0, -1, 1) for e in row] for row in two] == [[2, -2], [-2, 4]]
    left = B.grdim_matrix("LeftModule")
    assert [[e.evaluate(0, -1, 1) for e in row] for row in left] == [[2, -1], [-2, 2]]


def test_grdim_requires_pathlen():
    B = build_algebra("B", 2)
    with pytest.raises(ValueError):
        B.grdim_matrix("TwoSided")


def test_asymmetric_type_a_degrees():
    A = build_algebra("A", 5)  # middle vertex 3
    assert A.degree(("a", (1, 2), 0)) == 1  # toward the middle
    assert A.degree(("a", (2, 1), 0)) == 0
    assert A.degree(("a", (5, 4), 0)) == 1
    assert A.degree(("a", (4, 5), 0)) == 0
    assert A.degree(("a", (3, 4), 0)) == 0
    assert A.degree(("a", (4, 3), 0)) == 1
    for j in range(1, 6):
        assert A.degree(("X", j, 0)) == 1
