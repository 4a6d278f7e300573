"""Bounded complexes of shifted indecomposable projectives and the braid action.

A complex stores, per cohomological degree, an ordered list of shifted
projectives P_j{s}<t> together with a differential matrix whose (row, col)
entry is an algebra element of e_{col.vertex} . A . e_{row.vertex}, acting by
right multiplication.  Shift conventions:

* ``[r]`` moves a module sitting in degree 0 to degree -r,
* ``P{s}`` has its generator in internal degree s,
* ``<t>`` toggles the Z/2 degree (type B only).

A map P{s}<t> -> P'{s'}<t'> given by right multiplication with b is grading
preserving iff deg b = s - s' and z2(b) = t + t' (mod 2); the constructor
enforces this together with d.d = 0 and bounded support.

Braid generators act by tensoring with the two-term bimodule complexes

    R_j  = [ P_j (x) _jP  --mult-->  A ]      (A in degree 0)
    R_j' = [ A  --gamma-->  P_j (x) _jP{-1} ] (A in degree 0)

decomposed through the hom-space tables, with the Koszul sign (-1)^p placed on
the inner differential of the off-zero column.  In type B the generator with
j = 1 additionally twists by <1>.  ``minimize`` cancels invertible identity
components by Gaussian elimination with a deterministic pivot policy.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from .exact import GaussRat, TriPoly
from .zigzag import AlgebraElement, ZigzagAlgebra, _end, _start


@dataclass(frozen=True)
class ShiftedProjective:
    """An indecomposable projective P_vertex[coh]{internal}<z2>."""

    vertex: int
    coh: int = 0
    internal: int = 0
    z2: int = 0

    def render(self, with_coh: bool = False) -> str:
        out = f"P{self.vertex}"
        if with_coh and self.coh:
            out += f"[{-self.coh}]"
        if self.internal:
            out += f"{{{self.internal}}}"
        if self.z2:
            out += f"<{self.z2}>"
        return out

    def shifted(self, r: int = 0, s: int = 0, t: int = 0) -> "ShiftedProjective":
        return ShiftedProjective(self.vertex, self.coh - r, self.internal + s, (self.z2 + t) % 2)


class Complex:
    """A bounded complex of shifted projectives over a zigzag algebra."""

    def __init__(
        self,
        algebra: ZigzagAlgebra,
        terms: dict[int, list[ShiftedProjective]],
        diff: dict[int, dict[tuple[int, int], AlgebraElement]],
        check: bool = True,
    ):
        self.algebra = algebra
        self.terms = {d: tuple(ts) for d, ts in terms.items() if ts}
        self.diff = {}
        for d, entries in diff.items():
            clean = {pos: e for pos, e in entries.items() if e and not e.is_zero()}
            if clean:
                self.diff[d] = clean
        if check:
            self._check()

    # -- validation --------------------------------------------------------
    def _check(self):
        for d, ts in self.terms.items():
            for t in ts:
                self.algebra.vertex_range_check(t.vertex)
                if t.coh != d:
                    raise ValueError(f"term {t} stored in degree {d}")
                if self.algebra.kind == "A" and t.z2:
                    raise ValueError("type A carries no Z/2 shifts")
        for d, entries in self.diff.items():
            src = self.terms.get(d, ())
            dst = self.terms.get(d + 1, ())
            for (row, col), elt in entries.items():
                if not (0 <= row < len(dst) and 0 <= col < len(src)):
                    raise ValueError(f"differential entry ({row},{col}) out of range in degree {d}")
                y, z = src[col], dst[row]
                for sym, c in elt.coeffs.items():
                    if _start(sym) != y.vertex or _end(sym) != z.vertex:
                        raise ValueError(f"entry ({row},{col}) not in e_{y.vertex} A e_{z.vertex}")
                    if self.algebra.degree(sym) != y.internal - z.internal:
                        raise ValueError(
                            f"entry ({row},{col}) not homogeneous of internal degree "
                            f"{y.internal - z.internal}"
                        )
                    if self.algebra.z2(sym) != (y.z2 + z.z2) % 2:
                        raise ValueError(f"entry ({row},{col}) has wrong Z/2 degree")
        self._check_d_squared()

    def _check_d_squared(self):
        for d in self.diff:
            if d + 1 not in self.diff:
                continue
            first, second = self.diff[d], self.diff[d + 1]
            acc: dict[tuple[int, int], AlgebraElement] = {}
            for (mid, col), e1 in first.items():
                for (row, mid2), e2 in second.items():
                    if mid2 != mid:
                        continue
                    prod = e1 * e2
                    if prod.is_zero():
                        continue
                    key = (row, col)
                    acc[key] = acc[key] + prod if key in acc else prod
            for key, total in acc.items():
                if not total.is_zero():
                    raise ValueError(f"d^2 != 0 at degree {d}, entry {key}: {total!r}")

    # -- basics --------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> list[int]:
        return sorted(self.terms)

    def term_count(self) -> int:
        return sum(len(ts) for ts in self.terms.values())

    def entry(self, d: int, row: int, col: int) -> AlgebraElement:
        return self.diff.get(d, {}).get((row, col), self.algebra.zero())

    def global_shift(self, r: int = 0, s: int = 0, t: int = 0) -> "Complex":
        """The shifted complex C[r]{s}<t>; differentials carry over unchanged."""
        terms = {}
        diff = {}
        for d, ts in self.terms.items():
            terms[d - r] = [x.shifted(r, s, t) for x in ts]
        for d, entries in self.diff.items():
            diff[d - r] = dict(entries)
        return Complex(self.algebra, terms, diff, check=False)

    def z2_twist(self) -> "Complex":
        return self.global_shift(0, 0, 1)

    def fingerprint(self) -> dict[int, tuple]:
        """Per-degree multiset of (vertex, internal, z2)."""
        return {
            d: tuple(sorted((t.vertex, t.internal, t.z2) for t in ts))
            for d, ts in self.terms.items()
        }

    def render(self) -> str:
        if self.is_zero():
            return "0"
        return " | ".join(
            f"deg {d}: " + " + ".join(t.render() for t in self.terms[d]) for d in self.degrees()
        )

    def render_diff(self) -> str:
        lines = []
        for d in sorted(self.diff):
            for (row, col), e in sorted(self.diff[d].items()):
                lines.append(f"d{d}({row},{col}): {e!r}")
        return "\n".join(lines)

    def __repr__(self):
        return self.render()

    def direct_sum(self, other: "Complex") -> "Complex":
        assert self.algebra is other.algebra
        terms: dict[int, list[ShiftedProjective]] = {}
        diff: dict[int, dict[tuple[int, int], AlgebraElement]] = {}
        for d in set(self.terms) | set(other.terms):
            terms[d] = list(self.terms.get(d, ())) + list(other.terms.get(d, ()))
        for d, entries in self.diff.items():
            diff.setdefault(d, {}).update(entries)
        for d, entries in other.diff.items():
            roff = len(self.terms.get(d + 1, ()))
            coff = len(self.terms.get(d, ()))
            for (row, col), e in entries.items():
                diff.setdefault(d, {})[(row + roff, col + coff)] = e
        return Complex(self.algebra, terms, diff, check=False)


def projective_complex(
    algebra: ZigzagAlgebra, j: int, r: int = 0, s: int = 0, t: int = 0
) -> Complex:
    """The one-term complex 0 -> P_j[r]{s}<t> -> 0."""
    algebra.vertex_range_check(j)
    if algebra.kind == "A" and t:
        raise ValueError("type A carries no Z/2 shifts")
    return Complex(algebra, {-r: [ShiftedProjective(j, -r, s, t % 2)]}, {})


def sum_of_projectives(algebra: ZigzagAlgebra) -> Complex:
    out = projective_complex(algebra, 1)
    for j in range(2, algebra.size + 1):
        out = out.direct_sum(projective_complex(algebra, j))
    return out


@dataclass(frozen=True)
class BraidWord:
    """A word in braid generators; letters are (index, sign) with sign = +-1.

    ``apply_word`` processes letters left to right, so the word [w1, ..., wk]
    acts on a complex C as sigma_{wk}( ... sigma_{w1}(C) ... ).
    """

    kind: str
    size: int
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for j, sign in self.letters:
            if not 1 <= j <= self.size:
                raise ValueError(f"generator index {j} out of range")
            if sign not in (1, -1):
                raise ValueError("sign must be +1 or -1")

    @staticmethod
    def parse(kind: str, size: int, text: str) -> "BraidWord":
        letters = []
        for token in text.split():
            v = int(token)
            if v == 0:
                raise ValueError("0 is not a generator")
            letters.append((abs(v), 1 if v > 0 else -1))
        return BraidWord(kind, size, tuple(letters))

    def inverse(self) -> "BraidWord":
        return BraidWord(
            self.kind, self.size, tuple((j, -s) for j, s in reversed(self.letters))
        )

    def __str__(self):
        return " ".join(str(j * s) for j, s in self.letters)


def _scalar_decompose(alg: ZigzagAlgebra, elt: AlgebraElement, j: int, reps):
    """Write elt of e_j.A.e_k as a combination over the F_j-basis ``reps``.

    Returns {rep_sym: scalar element of e_j.A.e_j} with scalar a + b*ie_j
    (type B, j >= 2), a rational multiple of e_j (j = 1 or type A over C,
    where the Gaussian coefficient stays in the coefficient field).
    """
    out = {}
    if alg.kind == "B" and j >= 2:
        index = {sym: i for i, sym in enumerate(reps)}
        iej = alg.imag(j)
        for sym, c in elt.coeffs.items():
            assert c.is_rational()
            if sym in index:
                scal = AlgebraElement(alg, {("e", j, 0): c})
                out[sym] = out.get(sym, alg.zero()) + scal
            else:
                # sym = ie_j * rep for a unique parity-0 rep
                base = (sym[0], sym[1], 0)
                assert base in index, sym
                prod = alg.mul_basis(("e", j, 1), base)
                assert prod is not None and prod[0] == sym
                scal = AlgebraElement(alg, {("e", j, 1): c * prod[1]})
                out[base] = out.get(base, alg.zero()) + scal
    else:
        for sym, c in elt.coeffs.items():
            scal = AlgebraElement(alg, {("e", j, 0): c})
            out[sym] = out.get(sym, alg.zero()) + scal
    return out


def _tensor_reps(alg: ZigzagAlgebra, j: int, k: int):
    """F_j-basis of e_j.A.e_k used to decompose P_j (x)_{F_j} e_j.A.e_k."""
    basis = [b.sym for b in alg.hom_basis(j, k)]
    if alg.kind == "B" and j >= 2:
        return tuple(sym for sym in basis if sym[2] == 0)
    return tuple(basis)


def apply_generator(C: Complex, j: int, sign: int = 1, twist: bool = True) -> Complex:
    """Tensor with R_j (sign=+1) or R_j' (sign=-1); type B j=1 twists by <1>.

    Pass ``twist=False`` to act by the bare complexes R_1 / R_1' (used when
    reproducing computations stated for R rather than for sigma).
    """
    alg = C.algebra
    alg.vertex_range_check(j)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")

    # copies of P_j created from each term y: one per F_j-basis rep of
    # e_j.A.e_{y.vertex}; copy (h, y) has shifts inherited from y plus deg h.
    def copies_of(y: ShiftedProjective, extra_s: int):
        reps = _tensor_reps(alg, j, y.vertex)
        out = []
        for h in reps:
            out.append(
                (
                    h,
                    ShiftedProjective(
                        j,
                        0,  # coh fixed by placement
                        y.internal + alg.degree(h) + extra_s,
                        (y.z2 + alg.z2(h)) % 2,
                    ),
                )
            )
        return out

    p_col = -1 if sign == 1 else 1  # column of the P(x)_jP-part of R_j / R_j'
    shift_s = 0 if sign == 1 else -1  # the {-1} on the target of gamma_j
    terms: dict[int, list[ShiftedProjective]] = {}
    layout: dict[int, list[tuple]] = {}  # degree -> descriptors
    out_degrees = sorted(
        set(C.terms) | {d + p_col for d in C.terms}
    )
    for d in out_degrees:
        descs: list[tuple] = []
        for i, y in enumerate(C.terms.get(d, ())):
            descs.append(("c", d, i))  # the A (x) C part
        d0 = d - p_col
        for i, y in enumerate(C.terms.get(d0, ())):
            for h, proj in copies_of(y, shift_s):
                descs.append(("p", d0, i, h, proj))
        if descs:
            layout[d] = descs
    for d, descs in layout.items():
        row = []
        for desc in descs:
            if desc[0] == "c":
                _, d0, i = desc
                y = C.terms[d0][i]
                row.append(ShiftedProjective(y.vertex, d, y.internal, y.z2))
            else:
                proj = desc[4]
                row.append(ShiftedProjective(j, d, proj.internal, proj.z2))
        terms[d] = row

    index: dict[tuple, int] = {}
    for d, descs in layout.items():
        for pos, desc in enumerate(descs):
            key = desc[:3] if desc[0] == "c" else desc[:4]
            index[(d, key)] = pos

    diff: dict[int, dict[tuple[int, int], AlgebraElement]] = {}

    def add(d: int, row: int, col: int, elt: AlgebraElement):
        if elt.is_zero():
            return
        cur = diff.setdefault(d, {})
        cur[(row, col)] = cur[(row, col)] + elt if (row, col) in cur else elt

    gamma = _gamma_pairs(alg, j) if sign == -1 else None

    for d, descs in layout.items():
        for pos, desc in enumerate(descs):
            if desc[0] == "c":
                _, d0, i = desc
                # inner differential on the C-part (p = 0): plain d_C
                for (row_i, col_i), elt in C.diff.get(d0, {}).items():
                    if col_i != i:
                        continue
                    target = index.get((d + 1, ("c", d0 + 1, row_i)))
                    if target is not None:
                        add(d, target, pos, elt)
                if sign == -1:
                    # gamma-component into the copies (p = 0 -> p = 1)
                    y = C.terms[d0][i]
                    for u, v, gsign in gamma:
                        prod = alg.mul_basis(v, ("e", y.vertex, 0))
                        if prod is None:
                            continue
                        vsym, vsign = prod
                        for h, scal in _scalar_decompose(
                            alg,
                            AlgebraElement(alg, {vsym: GaussRat(vsign * gsign)}),
                            j,
                            _tensor_reps(alg, j, y.vertex),
                        ).items():
                            target = index.get((d + 1, ("p", d0, i, h)))
                            if target is None:
                                continue
                            # x |-> x * u * lambda into the copy labelled h
                            uelt = AlgebraElement(alg, {u: GaussRat(1)})
                            add(d, target, pos, uelt * scal)
            else:
                _, d0, i, h = desc[:4]
                y = C.terms[d0][i]
                if sign == 1:
                    # beta-component (p = -1 -> p = 0): right multiplication by h
                    target = index.get((d + 1, ("c", d0, i)))
                    if target is not None:
                        add(d, target, pos, AlgebraElement(alg, {h: GaussRat(1)}))
                # inner differential between copies: Koszul sign (-1)^p = -1
                # on the off-zero column (p = -1 for R_j, p = +1 for R_j')
                for (row_i, col_i), elt in C.diff.get(d0, {}).items():
                    if col_i != i:
                        continue
                    z = C.terms[d0 + 1][row_i]
                    helt = AlgebraElement(alg, {h: GaussRat(1)}) * elt
                    for h2, scal in _scalar_decompose(
                        alg, helt, j, _tensor_reps(alg, j, z.vertex)
                    ).items():
                        target = index.get((d + 1, ("p", d0 + 1, row_i, h2)))
                        if target is None:
                            continue
                        add(d, target, pos, scal.scale(-1))

    out = Complex(alg, terms, diff)
    if twist and alg.kind == "B" and j == 1:
        out = out.z2_twist()
    return out


def _gamma_pairs(alg: ZigzagAlgebra, j: int) -> list[tuple]:
    """The defining tensor gamma_j(1) = sum u (x) v as (u, v, sign) triples.

    For type B: X_j(x)e_j + e_j(x)X_j + (j-1|j)(x)(j|j-1) + (j+1|j)(x)(j|j+1),
    with the j = 1 case replacing the missing left neighbour by the twisted
    term (-ie_2)(2|1) (x) (1|2)(ie_2).  Type A keeps all existing neighbours.
    """
    n = alg.size
    terms: list[tuple] = [
        (("X", j, 0), ("e", j, 0), 1),
        (("e", j, 0), ("X", j, 0), 1),
    ]
    if j > 1:
        terms.append((("a", (j - 1, j), 0), ("a", (j, j - 1), 0), 1))
    if j < n:
        terms.append((("a", (j + 1, j), 0), ("a", (j, j + 1), 0), 1))
    if alg.kind == "B" and j == 1:
        terms.append((("a", (2, 1), 1), ("a", (1, 2), 1), -1))
    return terms


def apply_word(C: Complex, word: BraidWord, minimize_steps: bool = True, twist: bool = True) -> Complex:
    if word.kind != C.algebra.kind or word.size != C.algebra.size:
        raise ValueError("braid word does not match the algebra")
    out = C
    for j, sign in word.letters:
        out = apply_generator(out, j, sign, twist=twist)
        if minimize_steps:
            out = minimize(out)
    return out


# -- Gaussian elimination ----------------------------------------------------


def _find_pivot(terms, diff, alg):
    """First invertible differential entry, scanning degrees ascending.

    Invertible means c.e_v between equal-shift copies of P_v, or (type B,
    v >= 2) c.ie_v between copies differing only in the Z/2 shift: both are
    invertible scalars for the right action of the base field on P_v.
    Returns (degree, row, col, inverse-element).
    """
    for d in sorted(diff):
        entries = diff[d]
        src = terms.get(d, ())
        dst = terms.get(d + 1, ())
        for (row, col) in sorted(entries):
            y, z = src[col], dst[row]
            if y.vertex != z.vertex or y.internal != z.internal:
                continue
            elt = entries[(row, col)]
            if len(elt.coeffs) != 1:
                continue
            (sym, c), = elt.coeffs.items()
            if sym == ("e", y.vertex, 0):
                inv = AlgebraElement(alg, {sym: c.inverse()})
                return d, row, col, inv
            if sym == ("e", y.vertex, 1):  # c * ie_v, inverse -c^{-1} * ie_v
                inv = AlgebraElement(alg, {sym: -c.inverse()})
                return d, row, col, inv
    return None


def minimize(C: Complex) -> Complex:
    """Homotopy-equivalent complex with no invertible identity components.

    Deterministic: scan degrees ascending, entries in (row, col) order, cancel
    the first invertible multiple of an identity path, repeat.
    """
    alg = C.algebra
    terms = {d: list(ts) for d, ts in C.terms.items()}
    diff = {d: dict(entries) for d, entries in C.diff.items()}
    while True:
        pivot = _find_pivot(terms, diff, alg)
        if pivot is None:
            break
        d, prow, pcol, inv = pivot
        entries = diff.get(d, {})
        # correction terms: for x != pcol in degree d, w != prow in degree d+1
        row_mates = {col: e for (row, col), e in entries.items() if row == prow and col != pcol}
        col_mates = {row: e for (row, col), e in entries.items() if col == pcol and row != prow}
        for col, ezx in row_mates.items():
            for row, ewy in col_mates.items():
                corr = ezx * inv * ewy
                key = (row, col)
                cur = entries.get(key, alg.zero())
                new = cur - corr
                if new.is_zero():
                    entries.pop(key, None)
                else:
                    entries[key] = new
        # drop the cancelled pair and reindex
        def drop(deg: int, idx: int):
            terms[deg] = [t for i, t in enumerate(terms[deg]) if i != idx]
            if not terms[deg]:
                del terms[deg]
            for dd in (deg - 1, deg):
                if dd not in diff:
                    continue
                new_entries = {}
                for (row, col), e in diff[dd].items():
                    if dd == deg - 1:
                        if row == idx:
                            continue
                        row2 = row - 1 if row > idx else row
                        new_entries[(row2, col)] = e
                    else:
                        if col == idx:
                            continue
                        col2 = col - 1 if col > idx else col
                        new_entries[(row, col2)] = e
                if new_entries:
                    diff[dd] = new_entries
                else:
                    del diff[dd]

        diff[d] = entries
        drop(d + 1, prow)
        drop(d, pcol)
        # re-place terms at their stored degrees
        for deg in list(terms):
            terms[deg] = [
                ShiftedProjective(t.vertex, deg, t.internal, t.z2) for t in terms[deg]
            ]
    return Complex(alg, terms, diff)


# -- Hom complexes and Poincaré polynomials -----------------------------------


def _field_dim(alg: ZigzagAlgebra) -> int:
    # dimensions are counted over R for type B, over C for type A
    return 1


def hom_poincare(C: Complex, D: Complex) -> TriPoly:
    """Poincaré polynomial of the internal Hom complex HOM(C, D).

    Sum over cohomological degree s1 of q1^{s1} times the bigraded dimension
    of H^{s1}; internal and Z/2 gradings are carried by q2 and q3.  Dimensions
    are taken over the ground field (R in type B, C in type A).
    """
    if C.algebra is not D.algebra:
        raise ValueError("complexes over different algebras")
    alg = C.algebra
    # generators: (s1, s2, s3) -> list of (xd, xi, yd, yi, sym)
    gens: dict[tuple[int, int, int], list] = {}
    for xd, xts in C.terms.items():
        for xi, x in enumerate(xts):
            for yd, yts in D.terms.items():
                s1 = yd - xd
                for yi, y in enumerate(yts):
                    for b in alg.hom_basis(x.vertex, y.vertex):
                        s2 = b.degree + y.internal - x.internal
                        s3 = (b.z2 + y.z2 + x.z2) % 2
                        gens.setdefault((s1, s2, s3), []).append((xd, xi, yd, yi, b.sym))
    poly = TriPoly.zero()
    ranks: dict[tuple[int, int, int], int] = {}
    for (s1, s2, s3), basis in sorted(gens.items()):
        target = gens.get((s1 + 1, s2, s3), [])
        tindex = {g: i for i, g in enumerate(target)}
        rows = []
        for (xd, xi, yd, yi, sym) in basis:
            row = [GaussRat(0)] * len(target)
            felt = AlgebraElement(alg, {sym: GaussRat(1)})
            # post-compose with d_D
            for (rrow, rcol), elt in D.diff.get(yd, {}).items():
                if rcol != yi:
                    continue
                for sym2, c in (felt * elt).coeffs.items():
                    key = (xd, xi, yd + 1, rrow, sym2)
                    row[tindex[key]] += c
            # pre-compose with d_C, Koszul sign -(-1)^{s1}
            sign = GaussRat(-1 if s1 % 2 == 0 else 1)
            for (rrow, rcol), elt in C.diff.get(xd - 1, {}).items():
                if rrow != xi:
                    continue
                for sym2, c in (elt * felt).coeffs.items():
                    key = (xd - 1, rcol, yd, yi, sym2)
                    row[tindex[key]] += c * sign
            rows.append(row)
        ranks[(s1, s2, s3)] = _rank(rows, len(target))
    for (s1, s2, s3), basis in gens.items():
        # len(basis) is the dimension over the ground field: the listed hom
        # bases are R-bases in type B and C-bases in type A.
        h = len(basis) - ranks.get((s1, s2, s3), 0) - ranks.get((s1 - 1, s2, s3), 0)
        if h:
            poly = poly + TriPoly.mono(a=s1, b=s2, c=s3, coeff=h)
    return poly


def _rank(rows: list[list[GaussRat]], width: int) -> int:
    if width == 0 or not rows:
        return 0
    mat = [list(r) for r in rows]
    rank = 0
    row_count = len(mat)
    for col in range(width):
        pivot = None
        for r in range(rank, row_count):
            if mat[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = mat[rank][col].inverse()
        prow = mat[rank] = [v * inv if v else v for v in mat[rank]]
        for r in range(rank + 1, row_count):  # echelon form suffices for rank
            factor = mat[r][col]
            if factor:
                mat[r] = [
                    a - factor * b if b else a for a, b in zip(mat[r], prow)
                ]
        rank += 1
        if rank == row_count:
            break
    return rank


def sgn(C: Complex) -> int:
    """Sum of the Z/2 shifts over all P_1 summands, mod 2 (type B only)."""
    if C.algebra.kind != "B":
        raise ValueError("sgn is defined for type B complexes only")
    total = 0
    for ts in C.terms.values():
        for t in ts:
            if t.vertex == 1:
                total += t.z2
    return total % 2


# -- isomorphism testing -------------------------------------------------------

ISO = "Iso"
NONISO = "NonIso"
INCONCLUSIVE = "Inconclusive"


def iso_test(C: Complex, D: Complex, mode: str = "Fingerprint") -> str:
    """Decide isomorphism of two minimized complexes.

    ``Fingerprint`` compares shifted-projective multisets and Hom Poincaré
    polynomials: a mismatch certifies NonIso; a match is only conclusive when
    both differentials vanish (direct sums of shifts are determined by their
    multiset) or the complexes are equal on the nose.  ``Exhaustive``
    searches for an honest chain isomorphism.
    """
    if C.algebra is not D.algebra:
        raise ValueError("complexes over different algebras")
    if C.fingerprint() != D.fingerprint():
        return NONISO
    if not C.diff and not D.diff:
        return ISO
    if C.terms == D.terms and C.diff == D.diff:
        return ISO
    for j in range(1, C.algebra.size + 1):
        P = projective_complex(C.algebra, j)
        if hom_poincare(P, C) != hom_poincare(P, D):
            return NONISO
    if hom_poincare(C, C) != hom_poincare(D, D):
        return NONISO
    if mode == "Fingerprint":
        return INCONCLUSIVE
    if mode != "Exhaustive":
        raise ValueError("mode must be 'Fingerprint' or 'Exhaustive'")
    return _exhaustive_iso(C, D)


def _chain_map_space(C: Complex, D: Complex):
    """Basis data and equations for degree-0 grading-preserving chain maps."""
    alg = C.algebra
    unknowns = []  # (deg, row, col, sym)
    for d, cts in C.terms.items():
        dts = D.terms.get(d, ())
        for col, y in enumerate(cts):
            for row, z in enumerate(dts):
                for b in alg.hom_basis(y.vertex, z.vertex):
                    if b.degree == y.internal - z.internal and b.z2 == (y.z2 + z.z2) % 2:
                        unknowns.append((d, row, col, b.sym))
    uindex = {u: i for i, u in enumerate(unknowns)}
    # equations: phi . d_C = d_D . phi, one per (deg d, target row in D^{d+1},
    # source col in C^d, basis symbol)
    eq_rows: dict[tuple, dict[int, GaussRat]] = {}

    def put(key, uidx, coeff):
        eq_rows.setdefault(key, {})
        eq_rows[key][uidx] = eq_rows[key].get(uidx, GaussRat(0)) + coeff

    for d in set(C.terms) | set(D.terms):
        # phi^{d+1} . d_C^d : C^d -> D^{d+1}
        for (mrow, col), elt in C.diff.get(d, {}).items():
            for (dd, row, col2, sym) in unknowns:
                if dd != d + 1 or col2 != mrow:
                    continue
                comp = elt * AlgebraElement(alg, {sym: GaussRat(1)})
                for sym2, c in comp.coeffs.items():
                    put((d, row, col, sym2), uindex[(dd, row, col2, sym)], c)
        # - d_D^d . phi^d
        for (row, mcol), elt in D.diff.get(d, {}).items():
            for (dd, row2, col, sym) in unknowns:
                if dd != d or row2 != mcol:
                    continue
                comp = AlgebraElement(alg, {sym: GaussRat(1)}) * elt
                for sym2, c in comp.coeffs.items():
                    put((d, row, col, sym2), uindex[(dd, row2, col, sym)], -c)
    return unknowns, list(eq_rows.values())


def _nullspace(unknown_count: int, eqs: list[dict[int, GaussRat]]):
    mat = [[GaussRat(0)] * unknown_count for _ in eqs]
    for r, eq in enumerate(eqs):
        for cidx, coeff in eq.items():
            mat[r][cidx] = coeff
    pivots = []
    rank = 0
    for col in range(unknown_count):
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = mat[rank][col].inverse()
        mat[rank] = [v * inv if v else v for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [
                    a - f * b if b else a for a, b in zip(mat[r], mat[rank])
                ]
        pivots.append(col)
        rank += 1
    free = [c for c in range(unknown_count) if c not in pivots]
    basis = []
    for fcol in free:
        vec = [GaussRat(0)] * unknown_count
        vec[fcol] = GaussRat(1)
        for r, pcol in enumerate(pivots):
            vec[pcol] = -mat[r][fcol]
        basis.append(vec)
    return basis


_ISO_SAMPLE_LIMIT = 64


def _exhaustive_iso(C: Complex, D: Complex) -> str:
    for ts in list(C.terms.values()) + list(D.terms.values()):
        if len(ts) > 12:
            raise ValueError("size limit: Exhaustive mode supports <= 12 terms per degree")
    unknowns, eqs = _chain_map_space(C, D)
    basis = _nullspace(len(unknowns), eqs)
    if not basis:
        return NONISO
    rng = random.Random(0x5A16CA7)

    def invertible(vec) -> bool:
        # the scalar (identity-path) part must be invertible in every degree
        for d, cts in C.terms.items():
            dts = D.terms.get(d, ())
            block = [[GaussRat(0)] * len(cts) for _ in dts]
            for (dd, row, col, sym), v in zip(unknowns, vec):
                if dd != d or not v:
                    continue
                if sym[0] == "e" and sym[2] == 0:
                    block[row][col] += v
            if _rank(block, len(cts)) != len(cts):
                return False
        return True

    # deterministic certified sampling: an invertible chain map exists iff a
    # generic element of the chain-map space is invertible (the determinant
    # obstruction is polynomial), so large random coefficients decide it with
    # error probability far below 2^-1000 across the fixed trial budget.
    for _ in range(_ISO_SAMPLE_LIMIT):
        coeffs = [rng.randint(-10**6, 10**6) for _ in basis]
        vec = [GaussRat(0)] * len(unknowns)
        for cf, bvec in zip(coeffs, basis):
            if cf:
                vec = [a + GaussRat(cf) * b for a, b in zip(vec, bvec)]
        if invertible(vec):
            return ISO
    return NONISO


# -- random complexes for property tests ---------------------------------------


def random_complex(alg: ZigzagAlgebra, rng: random.Random, max_terms: int = 6) -> Complex:
    """A random small complex with homogeneous differentials and d.d = 0.

    Terms are random shifted projectives in degrees 0/1/2; candidate
    differential entries are filled in one by one, keeping only choices that
    preserve d.d = 0.
    """
    degs = [0, 1, 2]
    terms: dict[int, list[ShiftedProjective]] = {}
    count = rng.randint(1, max_terms)
    for _ in range(count):
        d = rng.choice(degs)
        v = rng.randint(1, alg.size)
        terms.setdefault(d, []).append(
            ShiftedProjective(v, d, rng.randint(-1, 1), rng.randint(0, 1) if alg.kind == "B" else 0)
        )
    diff: dict[int, dict[tuple[int, int], AlgebraElement]] = {}
    for d in degs[:-1]:
        src = terms.get(d, [])
        dst = terms.get(d + 1, [])
        for col, y in enumerate(src):
            for row, z in enumerate(dst):
                cands = [
                    b.sym
                    for b in alg.hom_basis(y.vertex, z.vertex)
                    if b.degree == y.internal - z.internal and b.z2 == (y.z2 + z.z2) % 2
                ]
                if not cands or rng.random() < 0.5:
                    continue
                sym = rng.choice(cands)
                trial = {dd: dict(e) for dd, e in diff.items()}
                trial.setdefault(d, {})[(row, col)] = AlgebraElement(
                    alg, {sym: GaussRat(rng.choice([1, -1, 2]))}
                )
                try:
                    Complex(alg, terms, trial)
                except ValueError:
                    continue
                diff = trial
    return Complex(alg, terms, diff)
