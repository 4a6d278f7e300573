"""Exact scalar and polynomial arithmetic.

Everything downstream is decided by bit-exact comparisons, so all scalars are
rational (`fractions.Fraction`), Gaussian rational (`GaussRat`), or Laurent
polynomials with rational coefficients (`TriPoly`).  No floats anywhere.

`TriPoly` models the ring Z[q1^{±1}, q2^{±1}, q3] / (q3^2 - 1) that hosts
trigraded intersection numbers and Poincaré polynomials.  Two quotient rings
appear as specializations of it:

* ``K0``      -- Z[q^{±1}, s]/(s^2-1), the scalar ring of Grothendieck groups
                 (q2 -> q, q3 -> s; no q1 part allowed),
* ``Cartan``  -- Z[t^{±1}], used for graded-dimension matrices (q2 -> t;
                 requires the polynomial to be free of q1 and q3),
* ``Bigraded``-- forgets q3 (sets q3 = 1), keeping q1, q2.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rat = Fraction  # exact rational scalar; always reduced, denominator > 0

RatLike = Union[int, Fraction]


class GaussRat:
    """A Gaussian rational a + b*i with exact rational a, b; i^2 = -1."""

    __slots__ = ("re", "im")

    def __init__(self, re: RatLike = 0, im: RatLike = 0):
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRat is immutable")

    @staticmethod
    def of(x: "GaussRat | RatLike") -> "GaussRat":
        return x if isinstance(x, GaussRat) else GaussRat(x)

    def __add__(self, other):
        other = GaussRat.of(other)
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussRat.of(other))

    def __rsub__(self, other):
        return GaussRat.of(other) + (-self)

    def __mul__(self, other):
        other = GaussRat.of(other)
        if not self.im and not other.im:  # the common all-rational case
            return GaussRat(self.re * other.re)
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussRat":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of 0 in Q(i)")
        return GaussRat(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * GaussRat.of(other).inverse()

    def conj(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def __eq__(self, other):
        other = GaussRat.of(other)
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def is_rational(self) -> bool:
        return self.im == 0

    def __repr__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


I = GaussRat(0, 1)

Exponent = tuple[int, int, int]  # (a, b, c): q1^a * q2^b * q3^c with c in {0,1}


class TriPoly:
    """Laurent polynomial in q1, q2 and an order-two variable q3 (q3^2 = 1).

    Terms map exponent triples (a, b, c) with c in {0, 1} to nonzero rational
    coefficients; zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, RatLike] | Iterable[tuple[Exponent, RatLike]] = ()):
        data: dict[Exponent, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (a, b, c), coeff in items:
            key = (int(a), int(b), int(c) % 2)
            val = data.get(key, Fraction(0)) + Fraction(coeff)
            if val:
                data[key] = val
            else:
                data.pop(key, None)
        object.__setattr__(self, "terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("TriPoly is immutable")

    # -- constructors -----------------------------------------------------
    @staticmethod
    def zero() -> "TriPoly":
        return TriPoly()

    @staticmethod
    def one() -> "TriPoly":
        return TriPoly({(0, 0, 0): 1})

    @staticmethod
    def const(c: RatLike) -> "TriPoly":
        return TriPoly({(0, 0, 0): c})

    @staticmethod
    def mono(a: int = 0, b: int = 0, c: int = 0, coeff: RatLike = 1) -> "TriPoly":
        return TriPoly({(a, b, c): coeff})

    @staticmethod
    def q1(k: int = 1) -> "TriPoly":
        return TriPoly.mono(a=k)

    @staticmethod
    def q2(k: int = 1) -> "TriPoly":
        return TriPoly.mono(b=k)

    @staticmethod
    def q3() -> "TriPoly":
        return TriPoly.mono(c=1)

    # -- ring operations ---------------------------------------------------
    def __add__(self, other: "TriPoly | RatLike") -> "TriPoly":
        other = other if isinstance(other, TriPoly) else TriPoly.const(other)
        data = dict(self.terms)
        for key, coeff in other.terms.items():
            val = data.get(key, Fraction(0)) + coeff
            if val:
                data[key] = val
            else:
                data.pop(key, None)
        return TriPoly(data)

    __radd__ = __add__

    def __neg__(self) -> "TriPoly":
        return TriPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = other if isinstance(other, TriPoly) else TriPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return TriPoly.const(other) + (-self)

    def __mul__(self, other: "TriPoly | RatLike") -> "TriPoly":
        if not isinstance(other, TriPoly):
            other = TriPoly.const(other)
        data: dict[Exponent, Fraction] = {}
        for (a1, b1, c1), x in self.terms.items():
            for (a2, b2, c2), y in other.terms.items():
                key = (a1 + a2, b1 + b2, (c1 + c2) % 2)  # q3^2 -> 1
                val = data.get(key, Fraction(0)) + x * y
                if val:
                    data[key] = val
                else:
                    data.pop(key, None)
        return TriPoly(data)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TriPoly":
        if k < 0:
            raise ValueError("negative powers of general TriPoly are undefined")
        out = TriPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TriPoly.const(other)
        return isinstance(other, TriPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- queries ------------------------------------------------------------
    def coeff(self, a: int, b: int, c: int) -> Fraction:
        return self.terms.get((a, b, (c % 2)), Fraction(0))

    def is_q3_even(self) -> bool:
        return all(c == 0 for (_, _, c) in self.terms)

    def has_q1(self) -> bool:
        return any(a != 0 for (a, _, _) in self.terms)

    def evaluate(self, q1: RatLike, q2: RatLike, q3: RatLike) -> Fraction:
        q1, q2, q3 = Fraction(q1), Fraction(q2), Fraction(q3)
        total = Fraction(0)
        for (a, b, c), coeff in self.terms.items():
            total += coeff * q1**a * q2**b * q3**c
        return total

    # -- specializations -----------------------------------------------------
    def specialize(self, target: str) -> "TriPoly":
        """Ring homomorphism onto a quotient/subring; see module docstring.

        Targets: ``"K0"`` (q2 -> q, q3 -> s; rejects q1-dependence),
        ``"Cartan"`` (q2 -> t; rejects q1-dependence and any q3-odd part),
        ``"Bigraded"`` (sets q3 = 1).
        """
        if target == "K0":
            if self.has_q1():
                raise ValueError("not q1-free: cannot specialize to the K0 ring")
            return self
        if target == "Cartan":
            if self.has_q1():
                raise ValueError("not q1-free: cannot specialize to the Cartan ring")
            if not self.is_q3_even():
                raise ValueError("not q3-even")
            return self
        if target == "Bigraded":
            return TriPoly([((a, b, 0), v) for (a, b, _), v in self.terms.items()])
        raise ValueError(f"unknown specialization target {target!r}")

    # -- rendering / parsing ---------------------------------------------------
    def render(self, names: tuple[str | None, str | None, str | None] = ("q1", "q2", "q3")) -> str:
        """Canonical text form; exponents sorted lexicographically by (a, b, c).

        A slot whose name is None must not occur in the polynomial.
        """
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            coeff = self.terms[key]
            factors = []
            for exp, name in zip(key, names):
                if exp == 0:
                    continue
                if name is None:
                    raise ValueError(f"exponent slot suppressed but nonzero in {key}")
                factors.append(name if exp == 1 else f"{name}^{exp}")
            body = "*".join(factors)
            if not body:
                text = str(coeff)
            elif coeff == 1:
                text = body
            elif coeff == -1:
                text = f"-{body}"
            else:
                text = f"{coeff}*{body}"
            parts.append(text)
        out = parts[0]
        for text in parts[1:]:
            out += f" - {text[1:]}" if text.startswith("-") else f" + {text}"
        return out

    def __repr__(self):
        return self.render()

    @staticmethod
    def parse(text: str, names: tuple[str, str, str] = ("q1", "q2", "q3")) -> "TriPoly":
        """Parse the grammar produced by :meth:`render`."""
        text = text.strip()
        if text == "0":
            return TriPoly.zero()
        slot = {name: i for i, name in enumerate(names) if name is not None}
        # normalize "a - b" to "a + -b" then split on +
        chunks = re.split(r"(?<![\^*/])\s*([+-])\s*", text)
        if chunks[0] == "":
            chunks = chunks[1:]
        else:
            chunks = ["+"] + chunks
        terms: list[tuple[Exponent, Fraction]] = []
        for sign, chunk in zip(chunks[::2], chunks[1::2]):
            coeff = Fraction(-1 if sign == "-" else 1)
            exps = [0, 0, 0]
            for factor in chunk.split("*"):
                factor = factor.strip()
                if not factor:
                    raise ValueError(f"empty factor in {chunk!r}")
                m = re.fullmatch(r"([A-Za-z][A-Za-z0-9]*)(?:\^(-?\d+))?", factor)
                if m and m.group(1) in slot:
                    exps[slot[m.group(1)]] += int(m.group(2) or 1)
                else:
                    coeff *= Fraction(factor)
            terms.append(((exps[0], exps[1], exps[2]), coeff))
        return TriPoly(terms)
