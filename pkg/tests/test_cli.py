import json
import os
import shutil
import subprocess
import sys
from fractions import Fraction

import pytest

from jacksov import cli
from jacksov.qop import ZPoly
from jacksov.serialize import from_json, to_json
from jacksov.sympoly import m_basis


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out.strip() else None), out.err


def test_jack_command(capsys):
    code, out, _ = run(capsys, "jack", "--n", "2", "--lambda", "2,0")
    assert code == 0
    coeffs = {tuple(t["partition"]): t["coeff"] for t in out["jack"]["coefficients"]}
    assert coeffs[(1, 1)] == {"num": ["0/1", "2/1"], "den": ["1/1", "1/1"]}


def test_jack_pads_with_zeros(capsys):
    code, out, _ = run(capsys, "jack", "--n", "3", "--lambda", "2", "--g", "1")
    assert code == 0 and out["jack"]["lambda"] == [2, 0, 0] and out["g"] == "1/1"


def test_q_eigenvalue_command(capsys):
    code, out, _ = run(capsys, "q-eigenvalue", "--n", "2", "--lambda", "1,0")
    assert code == 0 and out["agree"]
    assert from_json(out["q"]) == ZPoly([Fraction(1, 2), Fraction(1, 2)])
    assert all(from_json(d).is_zero() for d in out["differences"].values())


def test_qz_apply_command(capsys, tmp_path):
    poly = json.dumps(to_json(m_basis((1, 0))))
    code, out, _ = run(capsys, "qz-apply", "--n", "2", "--poly", poly)
    assert code == 0
    powers = {t["power"] for t in out["result"]["z_coeffs"]}
    assert powers == {0, 1}
    f = tmp_path / "p.json"
    f.write_text(poly)
    code, out2, _ = run(capsys, "qz-apply", "--poly", f"@{f}", "--g", "2")
    assert code == 0 and out2["g"] == "2/1"


def test_separate_and_reconstruct(capsys):
    code, out, _ = run(capsys, "separate", "--lambda", "2,1,0", "--g", "1/2")
    assert code == 0 and out["chain_agrees"] and out["factorisation_holds"]
    assert len(out["factored"]["factors"]) == 3
    code, out, _ = run(capsys, "reconstruct", "--n", "3", "--lambda", "2,1")
    assert code == 0 and out["equals_jack"]


def test_quad_verify_command(capsys):
    code, out, _ = run(capsys, "quad-verify", "--g", "2", "--nodes", "32")
    assert code == 0 and out["summary"]["passed"] and out["summary"]["failures"] == 0
    code, out, _ = run(capsys, "quad-verify", "--g", "2", "--nodes", "2", "--tol", "1e-14")
    assert code == 1 and out["summary"]["failures"] > 0


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "--max-weight", "3", "--max-n", "2", "--g", "2", "--skip-quad")
    assert code == 0 and out["passed"] and out["first_failure"] is None
    names = [s["suite"] for s in out["suites"]]
    assert names[:2] == ["sympoly.round_trip", "jack.eigen"]


def test_identity_failure_exits_one(capsys, monkeypatch):
    monkeypatch.setattr(cli, "q_eigenvalue_eta", lambda lam, field: ZPoly([1]))
    code, out, _ = run(capsys, "q-eigenvalue", "--lambda", "1,0")
    assert code == 1 and not out["agree"]


def test_verify_failure_names_identity(capsys, monkeypatch):
    from jacksov import verify
    monkeypatch.setattr(verify, "reconstruct", lambda lam, field: None)
    code, out, _ = run(capsys, "verify", "--max-weight", "1", "--max-n", "2", "--skip-quad",
                       "--only", "sov.reconstruction")
    assert code == 1
    first = out["first_failure"]
    assert first["identity"].startswith("Jack polynomials rebuilt")
    assert len(first["expected_digest"]) == 16


@pytest.mark.parametrize("argv", [
    ["jack", "--lambda", "1,2"],
    ["jack", "--lambda", "x"],
    ["jack", "--lambda", "2,1", "--g", "1/0"],
    ["jack", "--lambda", "3,2,1", "--n", "2"],
    ["qz-apply", "--poly", "{not json"],
    ["quad-verify", "--tol", "-1"],
    ["verify", "--only", "nonsense"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_two(capsys, argv):
    assert cli.main(argv) == 2


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    assert cli.main(["--output", str(target), "jack", "--lambda", "1,0"]) == 0
    assert json.loads(target.read_text())["jack"]["lambda"] == [1, 0]
    assert cli.main(["jack", "--lambda", "1,1", "-o", str(target)]) == 0
    assert json.loads(target.read_text())["jack"]["lambda"] == [1, 1]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "jacksov", "q-eigenvalue", "--lambda", "1,1"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["agree"]


@pytest.mark.skipif(shutil.which("jacksov") is None, reason="console script not installed")
def test_console_script_and_threads():
    env = dict(os.environ, JACKSOV_THREADS="2")
    res = subprocess.run(["jacksov", "quad-verify", "--g", "1", "--nodes", "24"], capture_output=True, text=True, env=env)
    assert res.returncode == 0
