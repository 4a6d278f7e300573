"""Canonical text rendering and parsing for complexes and algebra elements.

A complex prints as one line of terms per cohomological degree,

    deg -1: P1{1}<1> | deg 0: P2

followed by the differential entries, one per line:

    d-1(0,0): (1|2)(ie2)

where ``d<deg>(row,col)`` addresses the entry from source term ``col`` in
degree ``deg`` to target term ``row`` in degree ``deg``+1, and the element
grammar reuses the algebra's basis names with rational coefficients.  Both
renderings round-trip bit-exactly through the parsers here.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .exact import GaussRat
from .homotopy import Complex, ShiftedProjective
from .zigzag import AlgebraElement, ZigzagAlgebra, _sym_name

_TERM_RE = re.compile(
    r"P(?P<vertex>\d+)(?:\[(?P<coh>-?\d+)\])?(?:\{(?P<internal>-?\d+)\})?(?:<(?P<z2>[01])>)?"
)


def parse_projective(text: str, degree: int | None = None) -> ShiftedProjective:
    m = _TERM_RE.fullmatch(text.strip())
    if not m:
        raise ValueError(f"cannot parse projective {text!r}")
    shift = int(m.group("coh") or 0)
    coh = -shift if degree is None else degree
    return ShiftedProjective(
        int(m.group("vertex")), coh, int(m.group("internal") or 0), int(m.group("z2") or 0)
    )


def parse_element(alg: ZigzagAlgebra, text: str) -> AlgebraElement:
    """Parse a linear combination of basis names with rational coefficients.

    Terms are separated by top-level " + " / " - "; a term is ``name``,
    ``-name`` or ``(coeff)*name`` with a reduced rational coefficient.
    """
    text = text.strip()
    if text == "0":
        return alg.zero()
    names = {_sym_name(sym): sym for sym in alg.basis}
    tokens = re.split(r" ([+-]) ", text)
    signed = [("+", tokens[0])] + [
        (tokens[i], tokens[i + 1]) for i in range(1, len(tokens) - 1, 2)
    ]
    coeffs: dict = {}
    for sign_text, chunk in signed:
        sign = -1 if sign_text == "-" else 1
        chunk = chunk.strip()
        if chunk.startswith("-"):  # a leading negated name like -X1
            sign, chunk = -sign, chunk[1:]
        coeff = Fraction(1)
        m = re.match(r"^\((-?\d+(?:/\d+)?)\)\*", chunk) or re.match(
            r"^(-?\d+(?:/\d+)?)\*", chunk
        )
        if m:
            coeff = Fraction(m.group(1))
            chunk = chunk[m.end():]
        if chunk not in names:
            raise ValueError(f"unknown basis element {chunk!r}")
        sym = names[chunk]
        cur = coeffs.get(sym, GaussRat(0))
        coeffs[sym] = cur + GaussRat(coeff * sign)
    return AlgebraElement(alg, coeffs)


def render_complex(C: Complex, with_diff: bool = True) -> str:
    lines = [C.render()]
    if with_diff and C.diff:
        lines.append(C.render_diff())
    return "\n".join(lines)


_DIFF_RE = re.compile(r"d(?P<deg>-?\d+)\((?P<row>\d+),(?P<col>\d+)\):\s*(?P<elt>.*)")


def parse_complex(alg: ZigzagAlgebra, text: str) -> Complex:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty complex text")
    terms: dict[int, list[ShiftedProjective]] = {}
    if lines[0].strip() != "0":
        for part in lines[0].split("|"):
            head, _, body = part.partition(":")
            deg = int(head.strip().removeprefix("deg "))
            terms[deg] = [
                parse_projective(tok.strip(), deg) for tok in body.split("+") if tok.strip()
            ]
    diff: dict[int, dict[tuple[int, int], AlgebraElement]] = {}
    for line in lines[1:]:
        m = _DIFF_RE.fullmatch(line.strip())
        if not m:
            raise ValueError(f"cannot parse differential line {line!r}")
        deg = int(m.group("deg"))
        diff.setdefault(deg, {})[(int(m.group("row")), int(m.group("col")))] = parse_element(
            alg, m.group("elt")
        )
    return Complex(alg, terms, diff)


def complex_to_payload(C: Complex) -> dict:
    """Structured (JSON-ready) form of a complex."""
    return {
        "algebra": {"kind": C.algebra.kind, "size": C.algebra.size, "preset": C.algebra.preset},
        "terms": {
            str(d): [t.render() for t in ts] for d, ts in sorted(C.terms.items())
        },
        "diff": {
            f"{d}({row},{col})": repr(e)
            for d, entries in sorted(C.diff.items())
            for (row, col), e in sorted(entries.items())
        },
    }
