"""zigcat: exact computations in type A/B zigzag algebras and their braid actions."""

from .exact import Fraction, GaussRat, TriPoly
from .zigzag import AlgebraElement, ZigzagAlgebra, build_algebra

__all__ = [
    "Fraction",
    "GaussRat",
    "TriPoly",
    "AlgebraElement",
    "ZigzagAlgebra",
    "build_algebra",
]
