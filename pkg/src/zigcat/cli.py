"""Command-line front end.

Subcommands:

    algebra info   --type B --n 3 [--grading ks|pathlen]
    act            --type B --n 2 --word "2 1 2" --start 1 [--minimize]
                   [--convention sigma|r] [--shifts "[r]{s}<t>"]
    burau          --type B --n 3 --word "1 2 -1"
    cartan         --n 3
    curve lb       FILE
    curve itrigr   --j 2 FILE
    check braid-relations    --type B --n 2
    check inverse            --type B --n 2
    check typeb-chain        --n 2
    check k0                 --n 3 [--count 100] [--maxlen 8]
    check burau-displays
    check equivariance       --n 3 --maxlen 4 [--jobs k]
    check decat-square       --n 2 3 4
    check poincare-itrigr    [FILES...]
    check sgn-law            [FILES...]
    check tl                 --n 3
    check soergel-relations  --n 3 [--scalars paper|file.json]
    check cartan             --n 2 3 4 5
    check faithfulness-sample --n 2 --maxlen 3

All check subcommands double as the acceptance harness: exit status 0 iff
every verdict passes; ``--format structured`` prints machine-readable JSON.
The ``act`` convention flag selects the sigma-normalized action (default; the
type B generator with j = 1 twists by <1>) or the bare R-complexes used in
the four-term relation computation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import checks
from .curves import TrigradedCurve, itrigr_basic, jstrings, lb
from .homotopy import BraidWord, apply_word, minimize, projective_complex
from .ktheory import word_matrix
from .textio import complex_to_payload, render_complex
from .zigzag import build_algebra


def _print_report(results: list[dict], fmt: str) -> int:
    failures = [r for r in results if r["verdict"] != "pass"]
    if fmt == "structured":
        print(json.dumps({"results": results, "failures": len(failures)}, indent=1))
    else:
        for r in results:
            line = f"[{r['verdict'].upper():4}] {r['check']}: {r['instance']}"
            if r["witness"]:
                line += f"  ({r['witness']})"
            print(line)
        print(f"{len(results) - len(failures)}/{len(results)} passed")
    return 1 if failures else 0


def _cmd_algebra(args) -> int:
    alg = build_algebra(args.type, args.n, args.grading)
    if args.format == "structured":
        payload = {
            "kind": alg.kind,
            "size": alg.size,
            "grading": alg.preset,
            "dimension": len(alg.basis),
            "basis": [
                {
                    "name": b.name,
                    "degree": b.degree,
                    "z2": b.z2,
                }
                for j in range(1, alg.size + 1)
                for k in range(1, alg.size + 1)
                for b in alg.hom_basis(j, k)
            ],
            "hom_tables": {
                f"{j},{k}": alg.hom_table(j, k).render()
                for j in range(1, alg.size + 1)
                for k in range(1, alg.size + 1)
            },
        }
        print(json.dumps(payload, indent=1))
        return 0
    print(f"type {alg.kind} zigzag algebra, size {alg.size}, grading {alg.preset}")
    print(f"dimension {len(alg.basis)}")
    from .zigzag import _sym_name

    for sym in alg.basis:
        print(f"  {_sym_name(sym):18} deg {alg.degree(sym)}  z2 {alg.z2(sym)}")
    print("hom tables (bigraded dimensions of e_j A e_k):")
    for j in range(1, alg.size + 1):
        row = [alg.hom_table(j, k).render() or "0" for k in range(1, alg.size + 1)]
        print(f"  j={j}: " + " | ".join(row))
    return 0


def _parse_shifts(text: str) -> tuple[int, int, int]:
    import re

    m = re.fullmatch(
        r"(?:\[(-?\d+)\])?(?:\{(-?\d+)\})?(?:<([01])>)?", text.strip()
    )
    if not m:
        raise ValueError(f"cannot parse shifts {text!r}")
    return int(m.group(1) or 0), int(m.group(2) or 0), int(m.group(3) or 0)


def _cmd_act(args) -> int:
    alg = build_algebra(args.type, args.n)
    r, s, t = _parse_shifts(args.shifts) if args.shifts else (0, 0, 0)
    C = projective_complex(alg, args.start, r, s, t)
    word = BraidWord.parse(args.type, args.n, args.word)
    twist = args.convention == "sigma"
    C = apply_word(C, word, minimize_steps=args.minimize, twist=twist)
    if args.minimize:
        C = minimize(C)
    if args.format == "structured":
        print(json.dumps(complex_to_payload(C), indent=1))
    else:
        print(render_complex(C))
    return 0


def _cmd_burau(args) -> int:
    word = BraidWord.parse(args.type, args.n, args.word)
    mat = word_matrix(word)
    if args.format == "structured":
        print(json.dumps({"word": str(word), "matrix": mat.entry_strings()}, indent=1))
    else:
        for row in mat.entry_strings():
            print("  [" + ", ".join(row) + "]")
    return 0


def _cmd_cartan(args) -> int:
    alg = build_algebra("B", args.n, "pathlen")
    names = (None, "t", None)
    payload = {}
    for side in ("TwoSided", "LeftModule"):
        M = alg.grdim_matrix(side)
        payload[side] = [[e.render(names) for e in row] for row in M]
        payload[side + "@-1"] = [[str(e.evaluate(0, -1, 1)) for e in row] for row in M]
    if args.format == "structured":
        print(json.dumps(payload, indent=1))
    else:
        for side in ("TwoSided", "LeftModule"):
            print(f"{side}:")
            for row in payload[side]:
                print("  [" + ", ".join(row) + "]")
            print(f"{side} at t=-1:")
            for row in payload[side + "@-1"]:
                print("  [" + ", ".join(row) + "]")
    return 0


def _cmd_curve(args) -> int:
    curve = TrigradedCurve.load(args.file)
    if args.curve_cmd == "lb":
        C = lb(curve)
        if args.format == "structured":
            print(json.dumps(complex_to_payload(C), indent=1))
        else:
            print(render_complex(C))
        return 0
    # itrigr
    js = range(1, curve.n + 1) if args.j is None else [args.j]
    payload = {}
    for j in js:
        poly = itrigr_basic(j, curve)
        payload[str(j)] = poly.render()
        strings = [
            {
                "type": s.type_tag,
                "w": s.w,
                "base": list(s.base),
                "crossings": list(s.crossings),
            }
            for s in jstrings(curve, j)
        ]
        payload[f"{j}:strings"] = strings
    if args.format == "structured":
        print(json.dumps(payload, indent=1))
    else:
        for j in js:
            print(f"I^trigr(b_{j}, c) = {payload[str(j)]}")
            for s in payload[f"{j}:strings"]:
                print(f"   {s['type']}(w={s['w']}, base={tuple(s['base'])}) at {s['crossings']}")
    return 0


def _load_curve_files(files) -> dict | None:
    if not files:
        return None
    return {f: TrigradedCurve.load(f) for f in files}


def _cmd_check(args) -> int:
    cmd = args.check_cmd
    if cmd == "braid-relations":
        results = checks.check_braid_relations(args.type, args.n)
    elif cmd == "inverse":
        results = checks.check_inverse(args.type, args.n)
    elif cmd == "typeb-chain":
        results = checks.check_typeb_chain(args.n)
    elif cmd == "k0":
        results = checks.check_k0_functoriality(args.n, args.count, args.maxlen)
    elif cmd == "burau-displays":
        results = checks.check_burau_displays()
    elif cmd == "equivariance":
        results = checks.check_equivariance(args.n, args.maxlen, args.jobs)
    elif cmd == "decat-square":
        results = checks.check_decat_square(args.n)
    elif cmd == "poincare-itrigr":
        results = checks.check_poincare_itrigr(_load_curve_files(args.files))
    elif cmd == "sgn-law":
        results = checks.check_sgn_law(_load_curve_files(args.files))
    elif cmd == "tl":
        results = checks.check_tl(args.n)
    elif cmd == "soergel-relations":
        scalars = "paper"
        if args.scalars != "paper":
            raw = json.load(open(args.scalars))
            scalars = {
                key: {int(k): Fraction(v) for k, v in raw[key].items()}
                for key in ("a", "b", "c", "d")
            }
            scalars["f"] = {
                int(j): {int(k): Fraction(v) for k, v in row.items()}
                for j, row in raw["f"].items()
            }
        results = checks.check_soergel(args.n, scalars)
    elif cmd == "cartan":
        results = checks.check_cartan(args.n)
    elif cmd == "faithfulness-sample":
        results = checks.faithfulness_sample(args.n, args.maxlen)
    elif cmd == "algebra":
        results = checks.check_algebra(args.type, args.n)
    else:  # pragma: no cover
        raise SystemExit(f"unknown check {cmd}")
    return _print_report(results, args.format)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="zigcat", description=__doc__)
    top.add_argument("--format", choices=("text", "structured"), default="text")
    sub = top.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("algebra", help="inspect a zigzag algebra")
    psub = p.add_subparsers(dest="algebra_cmd", required=True)
    info = psub.add_parser("info")
    info.add_argument("--type", choices=("A", "B"), default="B")
    info.add_argument("--n", type=int, required=True)
    info.add_argument("--grading", choices=("ks", "pathlen"), default="ks")

    p = sub.add_parser("act", help="apply a braid word to a projective")
    p.add_argument("--type", choices=("A", "B"), default="B")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--start", type=int, required=True)
    p.add_argument("--shifts", default="")
    p.add_argument("--minimize", action="store_true")
    p.add_argument("--convention", choices=("sigma", "r"), default="sigma")

    p = sub.add_parser("burau", help="Burau-type matrix of a braid word")
    p.add_argument("--type", choices=("A", "B"), default="B")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", required=True)

    p = sub.add_parser("cartan", help="graded dimension matrices")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("curve", help="curve operations")
    csub = p.add_subparsers(dest="curve_cmd", required=True)
    c1 = csub.add_parser("lb")
    c1.add_argument("file")
    c2 = csub.add_parser("itrigr")
    c2.add_argument("--j", type=int)
    c2.add_argument("file")

    p = sub.add_parser("check", help="verification suites")
    ksub = p.add_subparsers(dest="check_cmd", required=True)

    def with_type_n(name, n_required=True, n_multi=False):
        q = ksub.add_parser(name)
        q.add_argument("--type", choices=("A", "B"), default="B")
        if n_multi:
            q.add_argument("--n", type=int, nargs="+", required=n_required)
        else:
            q.add_argument("--n", type=int, required=n_required)
        return q

    with_type_n("braid-relations")
    with_type_n("inverse")
    with_type_n("typeb-chain")
    q = with_type_n("k0")
    q.add_argument("--count", type=int, default=100)
    q.add_argument("--maxlen", type=int, default=8)
    ksub.add_parser("burau-displays")
    q = with_type_n("equivariance")
    q.add_argument("--maxlen", type=int, required=True)
    q.add_argument("--jobs", type=int, default=1)
    with_type_n("decat-square", n_multi=True)
    q = ksub.add_parser("poincare-itrigr")
    q.add_argument("files", nargs="*")
    q = ksub.add_parser("sgn-law")
    q.add_argument("files", nargs="*")
    with_type_n("tl")
    q = with_type_n("soergel-relations")
    q.add_argument("--scalars", default="paper")
    with_type_n("cartan", n_multi=True)
    q = with_type_n("faithfulness-sample")
    q.add_argument("--maxlen", type=int, required=True)
    q = with_type_n("algebra", n_multi=True)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.cmd == "algebra":
        return _cmd_algebra(args)
    if args.cmd == "act":
        return _cmd_act(args)
    if args.cmd == "burau":
        return _cmd_burau(args)
    if args.cmd == "cartan":
        return _cmd_cartan(args)
    if args.cmd == "curve":
        return _cmd_curve(args)
    if args.cmd == "check":
        return _cmd_check(args)
    raise SystemExit(2)  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
