import json
import subprocess
import sys

from zigcat.cli import main
from zigcat.curves import load_suite
from zigcat.textio import parse_complex
from zigcat.zigzag import build_algebra


def run_cli(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr().out
    return code, out


def test_act_r_convention_reproduces_relation_chain(capsys):
    code, out = run_cli(
        capsys, "act", "--type", "B", "--n", "2", "--word", "2 1 2",
        "--start", "1", "--minimize", "--convention", "r",
    )
    assert code == 0
    assert out.strip() == "deg -2: P1{1}<1>"


def test_act_sigma_convention(capsys):
    code, out = run_cli(
        capsys, "act", "--n", "2", "--word", "1", "--start", "1", "--minimize"
    )
    assert code == 0
    assert out.strip() == "deg -1: P1{1}<1>"


def test_act_structured_roundtrips(capsys):
    code, out = run_cli(
        capsys, "--format", "structured", "act", "--n", "2", "--word", "2 1",
        "--start", "1", "--minimize",
    )
    assert code == 0
    payload = json.loads(out)
    alg = build_algebra("B", 2)
    lines = [
        " | ".join(
            f"deg {d}: " + " + ".join(ts) for d, ts in payload["terms"].items()
        )
    ]
    for key, val in payload["diff"].items():
        lines.append(f"d{key}: {val}")
    C = parse_complex(alg, "\n".join(lines))
    assert C.render() in lines[0]


def test_burau_matches_display(capsys):
    code, out = run_cli(capsys, "burau", "--type", "B", "--n", "3", "--word", "1")
    assert code == 0
    assert out.splitlines()[0].strip() == "[-q*s, -1 - s, 0]"


def test_algebra_info(capsys):
    code, out = run_cli(capsys, "algebra", "info", "--type", "B", "--n", "3")
    assert code == 0
    assert "dimension 18" in out
    assert "hom tables" in out


def test_curve_commands(tmp_path, capsys):
    curve = load_suite()["b2_n3"]
    path = tmp_path / "b2.json"
    curve.save(path)
    code, out = run_cli(capsys, "curve", "lb", str(path))
    assert code == 0 and out.strip() == "deg 0: P2"
    code, out = run_cli(capsys, "curve", "itrigr", "--j", "2", str(path))
    assert code == 0 and "1 + q3 + q2 + q2*q3" in out


def test_check_exit_codes(capsys):
    code, _ = run_cli(capsys, "check", "typeb-chain", "--n", "2")
    assert code == 0
    code, _ = run_cli(capsys, "check", "tl", "--n", "2")
    assert code == 0


def test_check_structured_report(capsys):
    code, out = run_cli(
        capsys, "--format", "structured", "check", "cartan", "--n", "2"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["failures"] == 0
    assert all(
        set(r) == {"check", "instance", "verdict", "witness"} for r in payload["results"]
    )


def test_equivariance_jobs_flag(capsys):
    code, out = run_cli(
        capsys, "check", "equivariance", "--n", "2", "--maxlen", "1", "--jobs", "2"
    )
    assert code == 0
    assert "8/8 passed" in out


def test_console_entrypoint():
    proc = subprocess.run(
        [sys.executable, "-m", "zigcat.cli", "check", "typeb-chain", "--n", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "1/1 passed" in proc.stdout
