import json
import subprocess
import sys

import pytest

from tropdisc.cli import EXIT_MISMATCH, EXIT_OK, EXIT_PIPELINE, EXIT_USAGE, main
from tropdisc.data import PAPER_DISCRIMINANT, PAPER_SYSTEM


def run_cli(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_derive_structured(capsys):
    code, out, _ = run_cli(capsys, "derive", "--input", PAPER_SYSTEM, "--format", "structured")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["schema_version"] == 1
    assert data["derive"]["U"][3] == [2, 2, 4]
    assert data["derive"]["Phi"][0] == ["1/2", "1/2", "1"]


def test_oracle_compare_human(capsys):
    code, out, _ = run_cli(capsys, "oracle-compare", "--input", PAPER_SYSTEM,
                           "--poly", PAPER_DISCRIMINANT)
    assert code == EXIT_OK
    assert "matched: 10, oracle-only: 0, fan-only: 0" in out


def test_oracle_mismatch_exit_code(capsys, tmp_path):
    poly = tmp_path / "wrong.txt"
    poly.write_text("x1 + x2 + x3 + 1")
    code, _, err = run_cli(capsys, "oracle-compare", "--input", PAPER_SYSTEM, "--poly", poly)
    assert code == EXIT_MISMATCH
    assert "oracle mismatch" in err


def test_hk_verify_residual_failure(capsys, tmp_path):
    poly = tmp_path / "wrong.txt"
    poly.write_text("x1 + x2 + x3 + 1")
    code, _, _ = run_cli(capsys, "hk-verify", "--input", PAPER_SYSTEM, "--poly", poly)
    assert code == 4


@pytest.mark.parametrize("argv", [
    ["frobnicate", "--input", "x.json"],
    ["derive"],
    ["hk-verify", "--input", str(PAPER_SYSTEM)],
    ["derive", "--input", "/nonexistent.json"],
    ["derive", "--input", str(PAPER_SYSTEM), "--tol", "0"],
])
def test_usage_errors(capsys, argv):
    assert run_cli(capsys, *argv)[0] == EXIT_USAGE


def test_invalid_system_is_usage_error(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"equations": [{"omega": [1, 1], "lambda": [[1, 0]]},
                                             {"omega": [2, 2], "lambda": [[0, 1]]}]}))
    code, _, err = run_cli(capsys, "derive", "--input", bad)
    assert code == EXIT_USAGE and "singular" in err


def test_pipeline_error(capsys, tmp_path):
    # flat support: the oracle cannot build facets
    poly = tmp_path / "flat.txt"
    poly.write_text("x1 + x2")
    code, _, _ = run_cli(capsys, "oracle-compare", "--input", PAPER_SYSTEM, "--poly", poly)
    assert code == EXIT_PIPELINE


def test_out_file(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, stdout, _ = run_cli(capsys, "normals", "--input", PAPER_SYSTEM,
                              "--format", "structured", "--out", out)
    assert code == EXIT_OK and stdout == ""
    assert json.loads(out.read_text())["normals"]["direct_normals"][3]["primitive"] == [-1, -1, -2]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tropdisc", "tropicalize", "--input",
                           str(PAPER_SYSTEM)], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "cones: 16   rays: 10" in proc.stdout
