import io
import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from lmocasson.cli import main, parse_report

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_invariants_trefoil():
    code, out, _ = run("invariants", str(DATA / "trefoil_plus1.json"), "--json")
    assert code == 0
    report = parse_report(out)
    assert report["lambdaSurgery"] == 1
    assert report["z1ThetaCoefficient"] == Fraction(1, 2)
    assert "znResults" not in report


def test_invariants_b2_example():
    code, out, _ = run("invariants", str(DATA / "borromean_b2.json"), "--json")
    assert code == 0
    report = parse_report(out)
    assert report["lambdaLemma1"] == report["lambdaSurgery"] == 1
    assert report["z1ThetaCoefficient"] == Fraction(1, 2)
    assert [e["thetaPowerProjection"] for e in report["znResults"]] == [Fraction(1, 2),
                                                                       Fraction(1, 8)]


def test_table_output():
    code, out, _ = run("invariants", str(DATA / "unknot_zero.json"))
    assert code == 0
    assert "-1/12" in out and "1/24" in out


def test_json_round_trip_is_exact():
    _, out, _ = run("invariants", str(DATA / "whitehead_b2.json"), "--json")
    report = parse_report(out)
    raw = json.loads(out)
    for key in ("lambdaSurgery", "lambdaLemma1", "z1ThetaCoefficient"):
        assert isinstance(report[key], Fraction)
        assert str(report[key]) == raw[key]


def test_output_is_deterministic():
    first = run("invariants", str(DATA / "whitehead_b2.json"), "--json")
    second = run("invariants", str(DATA / "whitehead_b2.json"), "--json")
    assert first == second


def test_parse_error_exit(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"components": 2, "framings": [1]}')
    code, out, err = run("invariants", str(bad))
    assert code == 2 and not out and err.startswith("error:")
    assert run("invariants", str(tmp_path / "missing.json"))[0] == 2


def test_zn_degree_one():
    code, out, _ = run("zn", str(DATA / "borromean_b2.json"), "--degree", "1")
    assert code == 0
    assert out.splitlines() == ["1/2 · Θ", "Theta^1 projection: 1/2"]


def test_zn_vanishing_lambda(tmp_path):
    f = tmp_path / "zero.json"
    f.write_text('{"components": 3, "framings": [0, 0, 5]}')
    code, out, _ = run("zn", str(f), "--degree", "2")
    assert code == 0
    assert out.splitlines() == ["0", "Theta^2 projection: 0"]


@pytest.mark.parametrize("argv", [("zn", "trefoil_plus1.json", "--degree", "1"),
                                  ("zn", "borromean_b2.json", "--degree", "4")])
def test_zn_precondition_exit(argv):
    code, out, err = run(argv[0], str(DATA / argv[1]), *argv[2:])
    assert code == 3 and not out and "error:" in err


def test_verify_suite():
    code, out, _ = run("verify", "--suite", "lemma2", "--max-n", "4")
    assert code == 0
    assert out.rstrip().endswith("checks passed")
    assert "FAIL" not in out


def test_verify_is_seed_deterministic():
    a = run("verify", "--suite", "theorem2", "--trials", "20", "--seed", "42")
    b = run("verify", "--suite", "theorem2", "--trials", "20", "--seed", "42")
    assert a == b and a[0] == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lmocasson", "invariants",
                           str(DATA / "trefoil_plus1.json"), "--json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["lambdaSurgery"] == "1"
