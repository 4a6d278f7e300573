"""Trigraded admissible curves as combinatorial data.

A curve in the orbifold disc with punctures 0, 1, ..., n is stored in normal
form as the ordered list of its crossings with the vertical reference lines
d_1, ..., d_n, each crossing carrying a local index mu = (mu1, mu2, mu3) in
Z x Z x Z/2.  Consecutive crossings are joined by essential segments; each
segment lies in one region D_r (D_0 contains the orbifold point 0, D_r the
puncture r) and its two local indices satisfy the normal-form rules:

* cross-wall segment in D_r passing above the puncture:   east = west + (1,0,0)
* cross-wall segment passing below the puncture:          west = east + (1,-1,0)
* loop anchored on one wall of D_r:                       indices differ by (1,-1,0)
* segment through D_0 (wrapping the orbifold point):      indices differ by (0,0,1)

The two curve ends sit at punctures (``endpoints``); their terminal segments
are implicit.  Curves are always supplied as validated data files -- the
engine never recomputes topological normal forms.

``lb`` builds the associated complex: one shifted projective
P_{line}[-mu1]{mu2}<mu3> per crossing, differentials along essential segments
(same line: X; adjacent lines: the connecting arrow, whenever mu1 increases
by one), then the D_0 corrections which add the companion arrows
(1|2)(ie2) / -(ie2)(2|1) / duplicated X_1 prescribed by the pairing rules.

``jstrings`` decomposes the curve, for each j, into connected components of
its intersection with D_{j-1} u D_j and classifies each against the finite
list of trigraded string types; ``itrigr_basic`` sums the per-type
contribution polynomials, reproducing the trigraded intersection number with
the j-th basic curve.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .exact import GaussRat, TriPoly
from .homotopy import Complex, ShiftedProjective
from .zigzag import AlgebraElement, ZigzagAlgebra, build_algebra

Mu = tuple[int, int, int]


@dataclass(frozen=True)
class Crossing:
    line: int
    mu: Mu


class CurveError(ValueError):
    pass


class TrigradedCurve:
    """Combinatorial crossing/segment data of an admissible curve."""

    def __init__(
        self,
        n: int,
        crossings: list[Crossing],
        segments: list[tuple[int, int, int]],  # (a, b, region >= 1), b = a + 1
        d0_pairs: list[tuple[int, int]],
        endpoints: tuple[int, int],
    ):
        self.n = n
        self.crossings = list(crossings)
        self.segments = [tuple(s) for s in segments]
        self.d0_pairs = [tuple(sorted(p)) for p in d0_pairs]
        self.endpoints = tuple(endpoints)
        self._validate()

    # -- validation ---------------------------------------------------------
    def _validate(self):
        n = self.n
        m = len(self.crossings)
        if n < 2:
            raise CurveError("n >= 2 required")
        if m == 0:
            raise CurveError("a curve must cross at least one reference line")
        for idx, c in enumerate(self.crossings):
            if not 1 <= c.line <= n:
                raise CurveError(f"crossing {idx}: line {c.line} out of range")
            if c.mu[2] not in (0, 1):
                raise CurveError(f"crossing {idx}: mu3 must be 0 or 1")
        if len(self.endpoints) != 2 or any(not 0 <= p <= n for p in self.endpoints):
            raise CurveError("endpoints must be two punctures in 0..n")
        # segment bookkeeping: consecutive crossings joined exactly once
        cover: dict[int, tuple] = {}
        for a, b, region in self.segments:
            if b != a + 1:
                raise CurveError(f"segment ({a},{b}): crossings must be consecutive")
            if not 1 <= region <= n:
                raise CurveError(f"segment ({a},{b}): region {region} out of range")
            if a in cover:
                raise CurveError(f"two segments join crossings {a},{a+1}")
            cover[a] = ("seg", region)
        for a, b in self.d0_pairs:
            if b != a + 1:
                raise CurveError(f"d0 pair ({a},{b}): crossings must be consecutive")
            if a in cover:
                raise CurveError(f"two segments join crossings {a},{a+1}")
            cover[a] = ("d0", 0)
        for a in range(m - 1):
            if a not in cover:
                raise CurveError(f"no segment joins crossings {a},{a+1}")
        # local index rules per segment
        for a, b, region in self.segments:
            x, y = self.crossings[a], self.crossings[b]
            walls = {region} if region == n else {region, region + 1}
            if not {x.line, y.line} <= walls:
                raise CurveError(
                    f"segment ({a},{b}) in D_{region} cannot touch lines {x.line},{y.line}"
                )
            if x.line == y.line:
                lo, hi = sorted((x.mu, y.mu), key=lambda mu: mu[0])
                if (hi[0] - lo[0], hi[1] - lo[1], (hi[2] - lo[2]) % 2) != (1, -1, 0):
                    raise CurveError(f"segment ({a},{b}): loop indices inconsistent")
            else:
                west, east = (x, y) if x.line == region else (y, x)
                above = _mu_add(west.mu, (1, 0, 0)) == east.mu
                below = _mu_add(east.mu, (1, -1, 0)) == west.mu
                if not (above or below):
                    raise CurveError(f"segment ({a},{b}): cross-wall indices inconsistent")
        for a, b in self.d0_pairs:
            x, y = self.crossings[a], self.crossings[b]
            if x.line != 1 or y.line != 1:
                raise CurveError(f"d0 pair ({a},{b}) must join 1-crossings")
            if (x.mu[0], x.mu[1]) != (y.mu[0], y.mu[1]) or x.mu[2] == y.mu[2]:
                raise CurveError(f"d0 pair ({a},{b}): indices must differ by (0,0,1)")
        # endpoint terminals: puncture p attaches to a crossing on d_p or d_{p+1}
        for p, idx in ((self.endpoints[0], 0), (self.endpoints[1], m - 1)):
            line = self.crossings[idx].line
            if line not in (p, p + 1):
                raise CurveError(
                    f"endpoint {p} cannot attach to terminal crossing on line {line}"
                )

    # -- edges along the curve (terminals included) ---------------------------
    def edges(self) -> list[tuple]:
        """Walk of the curve: ('end', p) | ('seg', region, a, b) | ('d0', a, b)."""
        cover = {}
        for a, b, region in self.segments:
            cover[a] = ("seg", region, a, b)
        for a, b in self.d0_pairs:
            cover[a] = ("d0", a, b)
        out: list[tuple] = [("end", self.endpoints[0])]
        for a in range(len(self.crossings) - 1):
            out.append(cover[a])
        out.append(("end", self.endpoints[1]))
        return out

    def segment_region(self, edge: tuple) -> int:
        if edge[0] == "end":
            return edge[1]  # the terminal segment lies in the endpoint's region
        if edge[0] == "d0":
            return 0
        return edge[1]

    # -- serialization ----------------------------------------------------------
    def to_json(self) -> str:
        payload = {
            "n": self.n,
            "crossings": [{"line": c.line, "mu": list(c.mu)} for c in self.crossings],
            "segments": [{"a": a, "b": b, "region": r} for a, b, r in self.segments],
            "d0_pairs": [list(p) for p in self.d0_pairs],
            "endpoints": list(self.endpoints),
        }
        return json.dumps(payload, indent=1)

    @staticmethod
    def from_json(text: str) -> "TrigradedCurve":
        payload = json.loads(text)
        return TrigradedCurve(
            n=payload["n"],
            crossings=[Crossing(c["line"], tuple(c["mu"])) for c in payload["crossings"]],
            segments=[(s["a"], s["b"], s["region"]) for s in payload["segments"]],
            d0_pairs=[tuple(p) for p in payload["d0_pairs"]],
            endpoints=tuple(payload["endpoints"]),
        )

    @staticmethod
    def load(path: str | Path) -> "TrigradedCurve":
        return TrigradedCurve.from_json(Path(path).read_text())

    def save(self, path: str | Path):
        Path(path).write_text(self.to_json())

    def shifted(self, r1: int, r2: int, r3: int) -> "TrigradedCurve":
        """The curve chi(r1,r2,r3) . c: every local index shifted by (r1,r2,r3)."""
        return TrigradedCurve(
            self.n,
            [Crossing(c.line, _mu_add(c.mu, (r1, r2, r3))) for c in self.crossings],
            self.segments,
            self.d0_pairs,
            self.endpoints,
        )


def _mu_add(mu: Mu, delta: Mu) -> Mu:
    return (mu[0] + delta[0], mu[1] + delta[1], (mu[2] + delta[2]) % 2)


# -- the complex of a curve ----------------------------------------------------


def lb(curve: TrigradedCurve, algebra: ZigzagAlgebra | None = None) -> Complex:
    """The complex L_B(curve) over the type B(n) algebra (ks preset)."""
    alg = algebra or build_algebra("B", curve.n)
    if alg.kind != "B" or alg.size != curve.n or alg.preset != "ks":
        raise CurveError("lb needs the type B algebra with the ks preset matching n")
    terms: dict[int, list[ShiftedProjective]] = {}
    place: dict[int, tuple[int, int]] = {}
    for idx, c in enumerate(curve.crossings):
        d = c.mu[0]
        row = terms.setdefault(d, [])
        place[idx] = (d, len(row))
        row.append(ShiftedProjective(c.line, d, c.mu[1], c.mu[2]))
    diff: dict[int, dict[tuple[int, int], AlgebraElement]] = {}

    def add_arrow(src: int, dst: int, elt: AlgebraElement):
        dsrc, isrc = place[src]
        ddst, idst = place[dst]
        if ddst != dsrc + 1:
            raise CurveError(f"differential {src}->{dst} does not raise degree by 1")
        cur = diff.setdefault(dsrc, {})
        key = (idst, isrc)
        cur[key] = cur[key] + elt if key in cur else elt

    # pre-modification differentials from essential segments
    for a, b, region in curve.segments:
        x, y = curve.crossings[a], curve.crossings[b]
        if x.mu[0] == y.mu[0] + 1:
            src, dst = b, a
        elif y.mu[0] == x.mu[0] + 1:
            src, dst = a, b
        else:
            continue
        s, d = curve.crossings[src], curve.crossings[dst]
        if s.line == d.line:
            add_arrow(src, dst, alg.loop(s.line))
        else:
            add_arrow(src, dst, alg.arrow(s.line, d.line))

    # D_0 pair corrections
    pair_of = {}
    for a, b in curve.d0_pairs:
        pair_of[a] = b
        pair_of[b] = a
    edge_at: dict[int, list[tuple]] = {}
    for a, b, region in curve.segments:
        edge_at.setdefault(a, []).append(("seg", region, a, b))
        edge_at.setdefault(b, []).append(("seg", region, a, b))
    for y_idx, y2_idx in pair_of.items():
        y = curve.crossings[y_idx]
        for edge in edge_at.get(y_idx, ()):
            _, region, a, b = edge
            if region != 1:
                continue
            z_idx = b if a == y_idx else a
            z = curve.crossings[z_idx]
            if z.line == 2:
                if y.mu[0] == z.mu[0] + 1:
                    # existing arrow z -> y by (2|1); companion z -> y' by -(ie2)(2|1)
                    add_arrow(z_idx, y2_idx, AlgebraElement(alg, {("a", (2, 1), 1): GaussRat(-1)}))
                else:
                    # existing arrow y -> z by (1|2); companion y' -> z by (1|2)(ie2)
                    add_arrow(y2_idx, z_idx, AlgebraElement(alg, {("a", (1, 2), 1): GaussRat(1)}))
            else:  # z is a 1-crossing; the segment acts by X_1
                if z.mu[0] == y.mu[0] + 1 and z_idx in pair_of:
                    add_arrow(y2_idx, pair_of[z_idx], alg.loop(1))
    return Complex(alg, terms, diff)


# -- j-strings ----------------------------------------------------------------


@dataclass(frozen=True)
class JString:
    j: int
    type_tag: str  # I, II, II', III, III', IV, IV', V, V', VI, II'+1/2, III'+1/2
    w: int
    base: Mu
    crossings: tuple[int, ...]


def _segment_kind(curve: TrigradedCurve, edge: tuple) -> str:
    """T1 (above), T1p (below), T2 (west loop), T2p (east loop), D0."""
    if edge[0] == "d0":
        return "D0"
    _, region, a, b = edge
    x, y = curve.crossings[a], curve.crossings[b]
    if x.line == y.line:
        return "T2" if x.line == region else "T2p"
    west, east = (x, y) if x.line == region else (y, x)
    return "T1" if _mu_add(west.mu, (1, 0, 0)) == east.mu else "T1p"


def jstrings(curve: TrigradedCurve, j: int) -> list[JString]:
    """Connected components of the curve inside D_{j-1} u D_j, classified."""
    if not 1 <= j <= curve.n:
        raise CurveError(f"j = {j} out of range")
    edges = curve.edges()
    m = len(curve.crossings)
    in_range = [curve.segment_region(e) in (j - 1, j) for e in edges]
    strings: list[JString] = []
    i = 0
    while i < len(edges):
        if not in_range[i]:
            i += 1
            continue
        start = i
        while i < len(edges) and in_range[i]:
            i += 1
        end = i - 1  # edges[start..end] inclusive are in range
        # edge k (1 <= k <= m-1) spans crossings (k-1, k); edge 0 touches
        # crossing 0 and edge m touches crossing m-1
        lo = 0 if start == 0 else start - 1
        hi = m - 1 if end == len(edges) - 1 else end
        crossings = tuple(range(lo, hi + 1))
        strings.append(_classify(curve, j, edges, start, end, crossings))
    # coverage sanity: every crossing on lines j-1, j, j+1 appears in a string
    covered = set()
    for s in strings:
        covered.update(s.crossings)
    for idx, c in enumerate(curve.crossings):
        if j - 1 <= c.line <= j + 1 and idx not in covered:
            raise CurveError(f"crossing {idx} not covered by any {j}-string")
    return strings


def _out_label(curve: TrigradedCurve, j: int, edge: tuple) -> str:
    region = curve.segment_region(edge)
    return "ow" if region < j - 1 else "oe"


def _classify(curve, j, edges, start, end, crossings) -> JString:
    n = curve.n
    mus = [curve.crossings[i].mu for i in crossings]
    lines = [curve.crossings[i].line for i in crossings]
    run = list(edges[start : end + 1])
    if len(run) == 1 and run[0][0] == "end":
        # a lone in-range terminal: the opposite boundary is the out-of-range
        # edge next to it along the curve
        other = edges[start - 1] if start > 0 else edges[end + 1]
        left = f"end{run[0][1]}"
        right = _out_label(curve, j, other)
        run = []
    else:
        if run and run[0][0] == "end":
            left = f"end{run[0][1]}"
            run = run[1:]
        else:
            left = _out_label(curve, j, edges[start - 1])
        if run and run[-1][0] == "end":
            right = f"end{run[-1][1]}"
            run = run[:-1]
        else:
            right = _out_label(curve, j, edges[end + 1])
    kinds = []
    for e in run:
        if e[0] == "end":
            raise CurveError("terminal segment inside a string run")
        if e[0] == "d0":
            kinds.append("D0")
        else:
            side = "W" if curve.segment_region(e) == j - 1 else "E"
            kinds.append(f"{_segment_kind(curve, e)}{side}")

    result = _match_pattern(j, n, left, kinds, right, mus, lines)
    if result is None:
        rev = _match_pattern(
            j, n, right, list(reversed(kinds)), left, list(reversed(mus)), list(reversed(lines))
        )
        if rev is not None:
            result = rev
    if result is None:
        raise CurveError(
            f"unclassifiable {j}-string at crossings {crossings}: "
            f"({left}, {kinds}, {right})"
        )
    type_tag, w, base = result
    return JString(j, type_tag, w, base, crossings)


def _chain_ok(mus, base, deltas) -> bool:
    """mus[i] must equal base shifted by deltas[i] (mu3 mod 2)."""
    if len(mus) != len(deltas):
        return False
    return all(m == _mu_add(base, d) for m, d in zip(mus, deltas))


def _match_pattern(j, n, left, kinds, right, mus, lines):
    """Return (type_tag, w, base) or None.  Canonical orientations only; the
    caller retries with the run reversed.  Each pattern pins the relative
    local indices of all its crossings (the delta chains from the figures).
    """
    pm = f"end{j-1}"  # terminal at the west puncture (the orbifold point for j=1)
    pj = f"end{j}"
    K = tuple(kinds)
    if K == ():
        if left == pm and right == pj:
            return ("VI", 0, mus[0])
        if {left, right} == {pm, "ow"} and j >= 2:
            return ("III", 0, mus[0])
        if {left, right} == {pj, "oe"}:
            return ("III'", 0, mus[0])
        return None
    if j == 1:
        if K == ("T1E",) and left == pm and right == "oe":
            base = mus[1]
            if _chain_ok(mus, base, [(-1, 0, 0), (0, 0, 0)]):
                return ("III'+1/2", 0, base)
        if K == ("T1pE",) and left == pm and right == "oe":
            base = mus[1]
            if _chain_ok(mus, base, [(1, -1, 0), (0, 0, 0)]):
                return ("III'+1/2", -1, base)
        if K == ("T2pE",) and left == "oe" and right == "oe":
            base = min(mus, key=lambda mu: mu[0])
            return ("II'", 0, base)
        if K == ("T1E", "D0", "T1E") and left == "oe" and right == "oe":
            base = min((mus[0], mus[3]))
            if _chain_ok(
                mus[1:3], base, [(-1, 0, 0), (-1, 0, 1)]
            ) and mus[3] == _mu_add(base, (0, 0, 1)):
                return ("II'+1/2", 0, base)
        if K == ("T1pE", "D0", "T1E") and left == "oe" and right == "oe":
            base = mus[0]
            if _chain_ok(mus, base, [(0, 0, 0), (1, -1, 0), (1, -1, 1), (2, -1, 1)]):
                return ("V'", 0, base)
        return None
    # generic j >= 2 (east-wall patterns only occur for j < n)
    if K == ("T2W",) and left == "ow" and right == "ow":
        return ("II", 0, min(mus, key=lambda mu: mu[0]))
    if K == ("T2pE",) and left == "oe" and right == "oe":
        return ("II'", 0, min(mus, key=lambda mu: mu[0]))
    if K == ("T1W", "T1pE") and left == "ow" and right == "oe":
        if _chain_ok(mus, mus[0], [(0, 0, 0), (1, 0, 0), (0, 1, 0)]):
            return ("I", 0, mus[0])
    if K == ("T1W", "T1E") and left == "ow" and right == "oe":
        if _chain_ok(mus, mus[0], [(0, 0, 0), (1, 0, 0), (2, 0, 0)]):
            return ("IV", 0, mus[0])
    if K == ("T1pW", "T1pE") and left == "ow" and right == "oe":
        if _chain_ok(mus, mus[-1], [(2, -2, 0), (1, -1, 0), (0, 0, 0)]):
            return ("IV'", 0, mus[-1])
    if K == ("T1W", "T2E", "T1pW") and left == "ow" and right == "ow":
        if _chain_ok(mus, mus[0], [(0, 0, 0), (1, 0, 0), (2, -1, 0), (3, -2, 0)]):
            return ("V", 0, mus[0])
    if K == ("T1pE", "T2pW", "T1E") and left == "oe" and right == "oe":
        if _chain_ok(mus, mus[0], [(0, 0, 0), (1, -1, 0), (2, -2, 0), (3, -2, 0)]):
            return ("V'", 0, mus[0])
    if K == ("T1W",) and left == "ow" and right == pj:
        if _chain_ok(mus, mus[0], [(0, 0, 0), (1, 0, 0)]):
            return ("III", -1, mus[0])
    if K == ("T1pW",) and left == "ow" and right == pj:
        if _chain_ok(mus, mus[0], [(0, 0, 0), (-1, 1, 0)]):
            return ("III", 1, mus[0])
    if K == ("T1E",) and left == pm and right == "oe":
        if _chain_ok(mus, mus[0], [(0, 0, 0), (1, 0, 0)]):
            return ("III", 0, mus[0])
    if K == ("T1pE",) and left == pm and right == "oe":
        if _chain_ok(mus, mus[0], [(0, 0, 0), (-1, 1, 0)]):
            return ("III'", 0, mus[0])
    if K == ("T1W", "T2E") and left == "ow" and right == pm:
        if _chain_ok(mus, mus[0], [(0, 0, 0), (1, 0, 0), (2, -1, 0)]):
            return ("III", -2, mus[0])
    if K == ("T2pW", "T1E") and left == pj and right == "oe":
        base = mus[1]
        if _chain_ok(mus, base, [(-1, 1, 0), (0, 0, 0), (1, 0, 0)]):
            return ("III", 1, base)
    return None


# -- contribution table -------------------------------------------------------


def _poly(expr: str) -> TriPoly:
    return TriPoly.parse(expr)


_TABLE_GENERIC = {
    "I": "q1 + q2 + q2*q3 + q1*q3",
    "II": "q1 + q2 + q2*q3 + q1*q3",
    "II'": "1 + q1*q2^-1 + q3 + q1*q2^-1*q3",
    "III": "q2 + q2*q3",
    "III'": "1 + q3",
    "IV": "0",
    "IV'": "0",
    "V": "0",
    "V'": "0",
    "VI": "1 + q2 + q3 + q2*q3",
}

_TABLE_ONE = {
    "II'": "1 + q3 + q1*q2^-1 + q1*q2^-1*q3",
    "II'+1/2": "1 + q3 + q1^-1*q2 + q1^-1*q2*q3",
    "III'": "1 + q3",
    "III'+1/2": "q1^-1*q2 + q3",
    "V'": "0",
    "VI": "1 + q2",
}


def string_contribution(js: JString) -> TriPoly:
    """The table contribution of a classified trigraded j-string.

    Base-type polynomial scaled by q1^{r1} q2^{r2} q3^{r3} times the twist
    multiplier (q1^{-1} q2)^w for j >= 2 and (q1^{-1} q2 q3)^w for j = 1.
    """
    table = _TABLE_ONE if js.j == 1 else _TABLE_GENERIC
    if js.type_tag not in table:
        raise CurveError(f"no contribution entry for type {js.type_tag} at j={js.j}")
    poly = _poly(table[js.type_tag])
    r1, r2, r3 = js.base
    scale = TriPoly.mono(a=r1, b=r2, c=r3)
    if js.j == 1:
        twist = TriPoly.mono(a=-js.w, b=js.w, c=js.w)
    else:
        twist = TriPoly.mono(a=-js.w, b=js.w, c=0)
    return poly * scale * twist


def itrigr_basic(j: int, curve: TrigradedCurve) -> TriPoly:
    """Trigraded intersection number of the j-th basic curve with the curve."""
    total = TriPoly.zero()
    for js in jstrings(curve, j):
        total = total + string_contribution(js)
    return total


def load_suite() -> dict[str, TrigradedCurve]:
    """The bundled curve suite: one representative per j-string type per
    figure, each at base trigrading and at one nontrivial shift."""
    from importlib import resources

    out: dict[str, TrigradedCurve] = {}
    for entry in sorted(resources.files("zigcat.suite").iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".json"):
            out[entry.name[:-5]] = TrigradedCurve.from_json(entry.read_text())
    return out


def symmetry_check(mu: Mu, location: str) -> Mu:
    """Local index of the swapped curve pair at an intersection point.

    location: 'Interior' (generic point), 'Puncture' (a marked point other
    than 0), 'Zero' (the orbifold point).
    """
    table = {"Interior": (1, 0, 0), "Puncture": (0, 1, 0), "Zero": (1, 0, 1)}
    if location not in table:
        raise ValueError("location must be Interior, Puncture or Zero")
    a, b, c = table[location]
    return (a - mu[0], b - mu[1], (c - mu[2]) % 2)
