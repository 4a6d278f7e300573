"""Reproducible verification suites behind the ``check`` CLI subcommands.

Each function returns a list of result dicts with the fields
``{check, instance, verdict, witness}`` where verdict is "pass" / "fail"
(plus a short witness string on failure).  Results are deterministic for a
fixed configuration; the optional process pool only changes scheduling.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from .bridge import equivariance_check
from .curves import itrigr_basic, jstrings, lb, load_suite, string_contribution
from .exact import TriPoly
from .homotopy import (
    ISO,
    NONISO,
    BraidWord,
    apply_generator,
    apply_word,
    hom_poincare,
    iso_test,
    minimize,
    projective_complex,
    sgn,
    sum_of_projectives,
)
from .ktheory import (
    K0Vector,
    decat_square_check,
    identity_matrix,
    k0_class,
    rep_matrix,
    word_matrix,
)
from .tlrel import relation_suite, u_tensor_decompose
from .zigzag import build_algebra


def _result(check: str, instance: str, ok: bool, witness: str = "") -> dict:
    return {
        "check": check,
        "instance": instance,
        "verdict": "pass" if ok else "fail",
        "witness": witness if not ok else "",
    }


# -- algebra relations -----------------------------------------------------------


def check_algebra(kind: str, sizes: list[int]) -> list[dict]:
    out = []
    for size in sizes:
        try:
            alg = build_algebra(kind, size)
            expected = 4 * size - 2 if kind == "A" else 8 * size - 6
            ok = len(alg.basis) == expected
            out.append(
                _result(
                    "algebra",
                    f"{kind}{size}",
                    ok,
                    "" if ok else f"dimension {len(alg.basis)} != {expected}",
                )
            )
        except AssertionError as exc:  # relation self-check failures
            out.append(_result("algebra", f"{kind}{size}", False, str(exc)))
    return out


# -- braid relations --------------------------------------------------------------


def braid_relation_words(kind: str, n: int) -> list[tuple[str, str, str]]:
    """(name, word1, word2) pairs covering the defining relations."""
    rels = []
    for j in range(1, n + 1):
        for k in range(j + 2, n + 1):
            rels.append((f"far {j},{k}", f"{j} {k}", f"{k} {j}"))
    lo = 2 if kind == "B" else 1
    for j in range(lo, n):
        rels.append((f"braid {j},{j+1}", f"{j} {j+1} {j}", f"{j+1} {j} {j+1}"))
    if kind == "B" and n >= 2:
        rels.append(("fourfold 1,2", "2 1 2 1", "1 2 1 2"))
    return rels


def check_braid_relations(kind: str, n: int) -> list[dict]:
    alg = build_algebra(kind, n)
    start = sum_of_projectives(alg)
    out = []
    for name, w1, w2 in braid_relation_words(kind, n):
        C1 = apply_word(start, BraidWord.parse(kind, n, w1))
        C2 = apply_word(start, BraidWord.parse(kind, n, w2))
        verdict = iso_test(C1, C2, "Fingerprint")
        if verdict not in (ISO, NONISO):
            verdict = iso_test(C1, C2, "Exhaustive")
        out.append(
            _result("braid-relations", f"{kind}{n}: {name}", verdict == ISO, verdict)
        )
    return out


def check_inverse(kind: str, n: int) -> list[dict]:
    alg = build_algebra(kind, n)
    start = sum_of_projectives(alg)
    out = []
    for j in range(1, n + 1):
        for sign, label in ((1, f"{j} -{j}"), (-1, f"-{j} {j}")):
            C = apply_word(start, BraidWord.parse(kind, n, label))
            verdict = iso_test(C, start, "Fingerprint")
            if verdict not in (ISO, NONISO):
                verdict = iso_test(C, start, "Exhaustive")
            out.append(
                _result("inverse", f"{kind}{n}: sigma_{label}", verdict == ISO, verdict)
            )
    return out


# -- the type B relation chain -----------------------------------------------------


def check_typeb_chain(n: int) -> list[dict]:
    """R_2 R_1 R_2 (P_1) must minimize to the single term P_1{1}<1>, with the
    cohomological degree recorded (the computation fixes it to -2)."""
    alg = build_algebra("B", n)
    C = projective_complex(alg, 1)
    for j in (2, 1, 2):
        C = minimize(apply_generator(C, j, 1, twist=False))
    ok = (
        C.term_count() == 1
        and C.degrees() == [-2]
        and C.terms[-2][0].vertex == 1
        and C.terms[-2][0].internal == 1
        and C.terms[-2][0].z2 == 1
    )
    return [
        _result(
            "typeb-chain",
            f"B{n}: R2 R1 R2 (P1)",
            ok,
            "" if ok else C.render(),
        )
    ]


# -- K0 functoriality ---------------------------------------------------------------


def check_k0_functoriality(n: int, count: int = 100, maxlen: int = 8, seed: int = 2024) -> list[dict]:
    import random

    rng = random.Random(seed)
    alg = build_algebra("B", n)
    out = []
    for trial in range(count):
        length = rng.randint(1, maxlen)
        letters = tuple((rng.randint(1, n), rng.choice([1, -1])) for _ in range(length))
        word = BraidWord("B", n, letters)
        k = rng.randint(1, n)
        C = apply_word(projective_complex(alg, k), word)
        lhs = k0_class(C)
        rhs = word_matrix(word).apply(K0Vector.unit("B", n, k))
        out.append(
            _result(
                "k0-functoriality",
                f"B{n} trial {trial}: w={word} P{k}",
                lhs == rhs,
                "" if lhs == rhs else f"{lhs!r} != {rhs!r}",
            )
        )
    return out


_KB_DISPLAYS = {
    # the printed generator matrices for n = 3, row by row
    ("B", 1): [["-q*s", "-1 - s", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    ("B", 2): [["1", "0", "0"], ["-q", "-q", "-1"], ["0", "0", "1"]],
    ("B", 3): [["1", "0", "0"], ["0", "1", "0"], ["0", "-q", "-q"]],
}

_KA_DISPLAYS = {
    # type A with m = 5 (n = 3): the three regimes j < n, j = n, j > n
    ("A", 1): ["-q", "-q", "0", "0", "0"],
    ("A", 2): ["-1", "-q", "-q", "0", "0"],
    ("A", 3): ["0", "-1", "-q", "-1", "0"],
    ("A", 4): ["0", "0", "-q", "-q", "-1"],
    ("A", 5): ["0", "0", "0", "-q", "-q"],
}


def check_burau_displays() -> list[dict]:
    out = []
    for (kind, j), rows in _KB_DISPLAYS.items():
        got = rep_matrix("B", 3, j).entry_strings()
        out.append(
            _result(
                "burau-display",
                f"rho_KB(sigma_{j}) n=3",
                got == rows,
                "" if got == rows else repr(got),
            )
        )
    for (kind, j), row in _KA_DISPLAYS.items():
        mat = rep_matrix("A", 5, j).entry_strings()
        got = mat[j - 1]
        out.append(
            _result(
                "burau-display",
                f"rho_KA(sigma_{j}) m=5 row {j}",
                got == row,
                "" if got == row else repr(got),
            )
        )
    for kind, size in (("B", 3), ("A", 5)):
        for j in range(1, size + 1):
            prod = rep_matrix(kind, size, j, 1) @ rep_matrix(kind, size, j, -1)
            out.append(
                _result(
                    "burau-inverse",
                    f"{kind}{size}: sigma_{j}",
                    prod.is_identity(),
                    "" if prod.is_identity() else repr(prod),
                )
            )
    return out


# -- equivariance ---------------------------------------------------------------------


def _equivariance_task(args):
    n, letters, start = args
    word = BraidWord("B", n, letters)
    verdict = equivariance_check(n, word, start)
    return _result(
        "equivariance",
        f"B{n}: w={word} start={start}",
        verdict == ISO,
        verdict,
    )


def check_equivariance(n: int, maxlen: int, jobs: int = 1) -> list[dict]:
    letters_pool = [(j, s) for j in range(1, n + 1) for s in (1, -1)]
    tasks = []
    for length in range(1, maxlen + 1):
        for combo in itertools.product(letters_pool, repeat=length):
            for start in range(1, n + 1):
                tasks.append((n, tuple(combo), start))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_equivariance_task, tasks, chunksize=16))
    else:
        results = [_equivariance_task(t) for t in tasks]
    return results


# -- decategorified square --------------------------------------------------------------


def check_decat_square(n_values: list[int], negative_control: bool = True) -> list[dict]:
    out = []
    for n in n_values:
        ok, fails = decat_square_check(n)
        out.append(_result("decat-square", f"n={n}", ok, "; ".join(fails)))
    if negative_control:
        ok, fails = decat_square_check(n_values[0], perturb=True)
        out.append(
            _result(
                "decat-square",
                f"n={n_values[0]} negative control",
                not ok,
                "perturbed iota still commutes" if ok else "",
            )
        )
    return out


# -- curves ------------------------------------------------------------------------------


_TABLE_ROWS_GENERIC = {
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

_TABLE_ROWS_ONE = {
    "II'": "1 + q3 + q1*q2^-1 + q1*q2^-1*q3",
    "II'+1/2": "1 + q3 + q1^-1*q2 + q1^-1*q2*q3",
    "III'": "1 + q3",
    "III'+1/2": "q1^-1*q2 + q3",
    "V'": "0",
    "VI": "1 + q2",
}


def check_poincare_itrigr(curve_files: dict | None = None) -> list[dict]:
    """hom_poincare(P_j, L_B(c)) == itrigr_basic(j, c) over the curve suite,
    plus verbatim reproduction of the contribution-table rows."""
    curves = curve_files if curve_files is not None else load_suite()
    out = []
    seen_types: dict[tuple, TriPoly] = {}
    for name, curve in sorted(curves.items()):
        alg = build_algebra("B", curve.n)
        L = lb(curve)
        for j in range(1, curve.n + 1):
            lhs = hom_poincare(projective_complex(alg, j), L)
            rhs = itrigr_basic(j, curve)
            out.append(
                _result(
                    "poincare-itrigr",
                    f"{name} j={j}",
                    lhs == rhs,
                    "" if lhs == rhs else f"P={lhs} I={rhs}",
                )
            )
            for js in jstrings(curve, j):
                kind = "one" if j == 1 else ("n" if j == curve.n else "generic")
                if js.w == 0 and js.base == (0, 0, 0):
                    seen_types[(kind, js.type_tag)] = string_contribution(js)
    # contribution-table rows reproduced verbatim by base-type strings; the
    # n-string figure shares the generic table rows
    tables = {"generic": _TABLE_ROWS_GENERIC, "one": _TABLE_ROWS_ONE, "n": _TABLE_ROWS_GENERIC}
    for (kind, tag), poly in sorted(seen_types.items()):
        expected = TriPoly.parse(tables[kind][tag])
        out.append(
            _result(
                "contribution-table",
                f"{kind} {tag}",
                poly == expected,
                "" if poly == expected else f"{poly} != {expected}",
            )
        )
    # coverage: every row of each figure's table must have been exercised
    coverage = {
        "generic": list(_TABLE_ROWS_GENERIC),
        "one": list(_TABLE_ROWS_ONE),
        "n": ["II", "III", "V", "VI"],
    }
    for kind, tags in coverage.items():
        for tag in tags:
            covered = (kind, tag) in seen_types
            out.append(
                _result("contribution-coverage", f"{kind} {tag}", covered, "not realized")
            )
    return out


def check_sgn_law(curve_files: dict | None = None) -> list[dict]:
    """The Z/2 bookkeeping of the braid action on endpoint-0 curves.

    sgn is invariant under sigma_j for j >= 2 and changes under sigma_1 by
    the parity of (#P_1 + #P_2): the P_1 count feeds through the global <1>
    twist of sigma_1 and the P_2 count through the odd half of the
    _1P (x) P_2 decomposition.  Endpoint-0 curves cross d_1 an odd number of
    times, so there the flip happens exactly when the P_2 count is even --
    the P_2-parity rule of the grading-invariance lemma, with the direction
    fixed by its own worked computation (the basic-curve case flips with no
    P_2 present) rather than by the misprinted final case display.
    """
    curves = curve_files if curve_files is not None else load_suite()
    out = []
    for name, curve in sorted(curves.items()):
        if 0 not in curve.endpoints:
            continue
        L = lb(curve)
        base = sgn(L)
        p1 = sum(1 for ts in L.terms.values() for t in ts if t.vertex == 1)
        p2 = sum(1 for ts in L.terms.values() for t in ts if t.vertex == 2)
        ok0 = p1 % 2 == 1  # endpoint-0 curves cross d_1 oddly often
        out.append(
            _result("sgn-law", f"{name} odd d1-crossings", ok0, f"#P1={p1}")
        )
        for j in range(1, curve.n + 1):
            got = sgn(minimize(apply_generator(L, j, 1)))
            expected = (base + p1 + p2) % 2 if j == 1 else base
            out.append(
                _result(
                    "sgn-law",
                    f"{name} sigma_{j}",
                    got == expected,
                    "" if got == expected else f"sgn={got} expected={expected}",
                )
            )
    return out


# -- TL and Soergel-type relations ------------------------------------------------------


def check_tl(n: int) -> list[dict]:
    expectations = []
    for j in range(1, n + 1):
        expectations.append(((j, j), f"U{j}(-1) (+) U{j}(1)"))
    for j in range(1, n + 1):
        for k in range(j + 2, n + 1):
            expectations.append(((j, k), "0"))
    for j in range(2, n + 1):
        for k in (j - 1, j + 1):
            if 2 <= k <= n:
                expectations.append(((j, k, j), f"U{j}"))
    if n >= 2:
        expectations.append(((1, 2, 1, 2), "U1 U2 (+) U1 U2"))
        expectations.append(((2, 1, 2, 1), "U2 U1 (+) U2 U1"))
    out = []
    for indices, expected in expectations:
        dec = u_tensor_decompose(n, indices)
        got = dec.render() if dec is not None else "undetermined"
        word = " ".join(f"U{i}" for i in indices)
        out.append(_result("tl", f"n={n}: {word}", got == expected, f"got {got}"))
    return out


def check_soergel(n: int, scalars="paper") -> list[dict]:
    report = relation_suite(n, scalars)
    return [
        _result("soergel-relations", f"n={n}: {name}", ok) for name, ok in report.items()
    ]


# -- Cartan / intersection form -----------------------------------------------------------


def check_cartan(n_values: list[int]) -> list[dict]:
    out = []
    for n in n_values:
        alg = build_algebra("B", n, "pathlen")
        two = alg.grdim_matrix("TwoSided")
        left = alg.grdim_matrix("LeftModule")
        # the type B intersection form (diag -2, -4, ..., off-diagonal 2) and
        # the type B Cartan matrix exactly as displayed in the corollaries
        inter = [[0] * n for _ in range(n)]
        cartan = [[0] * n for _ in range(n)]
        for i in range(n):
            inter[i][i] = -2 if i == 0 else -4
            cartan[i][i] = 2
            for k in (i - 1, i + 1):
                if 0 <= k < n:
                    inter[i][k] = 2
                    cartan[i][k] = -2 if (i, k) == (1, 0) else -1
        got_two = [[e.evaluate(0, -1, 1) for e in row] for row in two]
        got_left = [[e.evaluate(0, -1, 1) for e in row] for row in left]
        ok_two = got_two == [[-v for v in row] for row in inter]
        ok_left = got_left == cartan
        out.append(
            _result(
                "cartan",
                f"n={n} intersection form",
                ok_two,
                "" if ok_two else repr(got_two),
            )
        )
        out.append(
            _result("cartan", f"n={n} Cartan matrix", ok_left, "" if ok_left else repr(got_left))
        )
    return out


# -- faithfulness sample --------------------------------------------------------------------


def reduced_words(n: int, maxlen: int):
    """Freely reduced nonempty words over the generators and their inverses."""
    letters = [(j, s) for j in range(1, n + 1) for s in (1, -1)]
    for length in range(1, maxlen + 1):
        for combo in itertools.product(letters, repeat=length):
            if any(
                combo[i][0] == combo[i + 1][0] and combo[i][1] == -combo[i + 1][1]
                for i in range(length - 1)
            ):
                continue
            yield combo


def faithfulness_sample(n: int, maxlen: int) -> list[dict]:
    alg = build_algebra("B", n)
    start = sum_of_projectives(alg)
    ident = identity_matrix("B", n)
    out = []
    for combo in reduced_words(n, maxlen):
        word = BraidWord("B", n, combo)
        if not (word_matrix(word) == ident):
            out.append(_result("faithfulness", f"B{n}: w={word}", True))
            continue
        C = apply_word(start, word)
        verdict = iso_test(C, start, "Fingerprint")
        if verdict not in (ISO, NONISO):
            verdict = iso_test(C, start, "Exhaustive")
        out.append(
            _result(
                "faithfulness",
                f"B{n}: w={word}",
                verdict == NONISO,
                f"no certificate ({verdict})" if verdict != NONISO else "",
            )
        )
    return out
