"""The embedding of the type B engine into type A by scalar extension.

Complexifying the type B(n) algebra yields the type A(2n-1) algebra: the
idempotents nu_j = (1 (x) e_j + i (x) ie_j)/2 split every complexified vertex
j >= 2 into the pair n-(j-1), n+(j-1), while vertex 1 maps onto the middle
vertex n.  ``build_phi`` constructs the isomorphism explicitly and verifies it
(algebra map on all basis pairs, graded bijection over the Gaussian
rationals).

``extend_scalars`` pushes a complex of type B projectives through the
resulting functor: P_1 -> P_n, P_j -> P_{n-(j-1)} (+) P_{n+(j-1)}, with
differential entries mapped through phi and split by the target idempotents;
the Z/2 grading is forgotten.  On braid words the functor intertwines the
actions through the index-doubling map psi (sigma_1 -> sigma_n, sigma_j ->
sigma_{n-(j-1)} sigma_{n+(j-1)}); ``equivariance_check`` verifies this on
concrete words by minimizing both sides and comparing.
"""

from __future__ import annotations

from .exact import GaussRat, I
from .homotopy import (
    INCONCLUSIVE,
    BraidWord,
    Complex,
    ShiftedProjective,
    apply_word,
    iso_test,
    minimize,
    projective_complex,
)
from .zigzag import AlgebraElement, build_algebra


class PhiMap:
    """The isomorphism C (x)_R B(n) -> A(2n-1) on the complexified basis."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("n >= 2 required")
        self.n = n
        self.source = build_algebra("B", n)
        self.target = build_algebra("A", 2 * n - 1)
        self.images: dict = {sym: self._image(sym) for sym in self.source.basis}
        self._verify()

    # -- the defining images ------------------------------------------------
    def _image(self, sym) -> AlgebraElement:
        """phi(1 (x) sym) as an element of A(2n-1) over the Gaussian rationals."""
        A = self.target
        n = self.n
        kind, data, eps = sym

        def pair(j: int) -> tuple[int, int]:
            return n - (j - 1), n + (j - 1)

        if kind == "e":
            j = data
            if j == 1:
                return A.idempotent(n)
            lo, hi = pair(j)
            if eps == 0:
                return A.idempotent(lo) + A.idempotent(hi)
            # 1 (x) ie_j = -i * (2 nu_j - 1 (x) e_j)
            return A.idempotent(lo).scale(-I) + A.idempotent(hi).scale(I)
        if kind == "X":
            j = data
            if j == 1:
                return A.loop(n).scale(2)
            lo, hi = pair(j)
            if eps == 0:
                return A.loop(lo) + A.loop(hi)
            return A.loop(lo).scale(-I) + A.loop(hi).scale(I)
        a, b = data
        j = max(a, b)  # the endpoint with the larger index drives the split
        lo, hi = pair(j)
        if a < b:  # rightward (j-1|j): images move toward the split pair
            base = A.arrow(lo + 1, lo) + A.arrow(hi - 1, hi)
        else:  # leftward (j|j-1)
            base = A.arrow(lo, lo + 1) + A.arrow(hi, hi - 1)
        if eps == 0:
            return base
        lo_part, hi_part = (A.arrow(lo + 1, lo), A.arrow(hi - 1, hi)) if a < b else (
            A.arrow(lo, lo + 1),
            A.arrow(hi, hi - 1),
        )
        return lo_part.scale(-I) + hi_part.scale(I)

    # -- checks ---------------------------------------------------------------
    def _verify(self):
        B, A = self.source, self.target
        # homomorphism on all basis pairs
        for x in B.basis:
            for y in B.basis:
                prod = B.mul_basis(x, y)
                expected = A.zero() if prod is None else self.images[prod[0]].scale(prod[1])
                got = self.images[x] * self.images[y]
                if got != expected:
                    raise AssertionError(f"phi not multiplicative on {x}, {y}")
        # grading preserved
        for sym in B.basis:
            d = B.degree(sym)
            for asym in self.images[sym].coeffs:
                if A.degree(asym) != d:
                    raise AssertionError(f"phi not graded on {sym}")
        # bijective: the complex matrix of images has full rank
        cols = {sym: self.images[sym] for sym in B.basis}
        index = {s: i for i, s in enumerate(A.basis)}
        rows = []
        for sym in B.basis:
            row = [GaussRat(0)] * len(A.basis)
            for asym, c in cols[sym].coeffs.items():
                row[index[asym]] = c
            rows.append(row)
        from .homotopy import _rank

        if _rank(rows, len(A.basis)) != len(A.basis):
            raise AssertionError("phi is not bijective")

    def apply(self, elt: AlgebraElement) -> AlgebraElement:
        """phi(1 (x) elt); Gaussian coefficients pass through C-linearly."""
        out = self.target.zero()
        for sym, c in elt.coeffs.items():
            out = out + self.images[sym].scale(c)
        return out


_PHI_CACHE: dict[int, PhiMap] = {}


def build_phi(n: int) -> PhiMap:
    if n not in _PHI_CACHE:
        _PHI_CACHE[n] = PhiMap(n)
    return _PHI_CACHE[n]


def extension_vertices(n: int, j: int) -> list[int]:
    """Type A vertices of the image of P_j^B: [n] or [n-(j-1), n+(j-1)]."""
    if j == 1:
        return [n]
    return [n - (j - 1), n + (j - 1)]


def extend_scalars(C: Complex) -> Complex:
    """The image of a type B complex under A(2n-1) (x)_B -.

    Every P_1 term becomes P_n; every P_j term (j >= 2) splits into
    P_{n-(j-1)} (+) P_{n+(j-1)} with the cohomological and internal shifts
    transported and the Z/2 shift forgotten; differential entries are mapped
    through phi and cut by the target idempotents.
    """
    if C.algebra.kind != "B":
        raise ValueError("extend_scalars expects a type B complex")
    n = C.algebra.size
    phi = build_phi(n)
    A = phi.target
    terms: dict[int, list[ShiftedProjective]] = {}
    position: dict[tuple[int, int, int], int] = {}  # (deg, index, vertex) -> new index
    for d in sorted(C.terms):
        row = []
        for i, t in enumerate(C.terms[d]):
            for v in extension_vertices(n, t.vertex):
                position[(d, i, v)] = len(row)
                row.append(ShiftedProjective(v, d, t.internal, 0))
        terms[d] = row
    diff: dict[int, dict[tuple[int, int], AlgebraElement]] = {}
    for d, entries in C.diff.items():
        new_entries: dict[tuple[int, int], AlgebraElement] = {}
        for (row_i, col_i), elt in entries.items():
            y = C.terms[d][col_i]
            z = C.terms[d + 1][row_i]
            image = phi.apply(elt)
            for vy in extension_vertices(n, y.vertex):
                for vz in extension_vertices(n, z.vertex):
                    block = A.idempotent(vy) * image * A.idempotent(vz)
                    if block.is_zero():
                        continue
                    key = (position[(d + 1, row_i, vz)], position[(d, col_i, vy)])
                    new_entries[key] = (
                        new_entries[key] + block if key in new_entries else block
                    )
        if new_entries:
            diff[d] = new_entries
    return Complex(A, terms, diff)


def psi(word: BraidWord) -> BraidWord:
    """The image of a type B braid word under the index-doubling embedding.

    Letterwise substitution; for inverse letters both commuting images carry
    the inverse sign, in the order as written.
    """
    if word.kind != "B":
        raise ValueError("psi expects a type B word")
    n = word.size
    letters = []
    for j, sign in word.letters:
        for idx in ([n] if j == 1 else [n - (j - 1), n + (j - 1)]):
            letters.append((idx, sign))
    return BraidWord("A", 2 * n - 1, tuple(letters))


def equivariance_check(n: int, word: BraidWord, start: int) -> str:
    """iso verdict of ext(sigma_w(P_start)) against Psi(w)(ext(P_start)).

    Fingerprint first; an Inconclusive verdict escalates to Exhaustive.
    """
    B = build_algebra("B", n)
    P = projective_complex(B, start)
    left = minimize(extend_scalars(apply_word(P, word)))
    right = minimize(apply_word(minimize(extend_scalars(P)), psi(word)))
    verdict = iso_test(left, right, "Fingerprint")
    if verdict == INCONCLUSIVE:
        verdict = iso_test(left, right, "Exhaustive")
    return verdict
