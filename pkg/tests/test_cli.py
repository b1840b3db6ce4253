"""Command-line interface: artifacts, determinism, and exit codes."""

import json
import subprocess
import sys

PAPER_MATRIX = "1' 0 2\n2 1 2'\n1' 1' 0"


def run_cli(*args, input_text=None):
    return subprocess.run(
        [sys.executable, "-m", "tschur.cli", *args],
        capture_output=True,
        text=True,
        input=input_text,
    )


def test_rsk_worked_example():
    res = run_cli("rsk", "--matrix", PAPER_MATRIX)
    assert res.returncode == 0
    out = res.stdout
    assert "1 1 1 2 2 2 2 2 3 3" in out
    assert "1' 3 3 1 1 2 3' 3 1' 2'" in out
    assert "1' 1 1 2' 3' 3" in out
    assert "shape: (6, 2, 2)" in out
    assert "lambda_1 = 6   lis(w) = 6" in out


def test_rsk_reads_stdin_and_rejects_garbage():
    res = run_cli("rsk", input_text="0")
    assert res.returncode == 0
    bad = run_cli("rsk", "--matrix", "1 q")
    assert bad.returncode == 2
    assert "bad token" in bad.stderr


def test_dist_csv_and_metadata():
    res = run_cli(
        "dist", "--m", "2", "--n", "2", "--alpha", "1/2", "--t=-1", "--h-max", "3"
    )
    assert res.returncode == 0
    lines = res.stdout.splitlines()
    meta = [l for l in lines if l.startswith("#")]
    assert any("alpha = 1/2" in l for l in meta)
    data = [l for l in lines if not l.startswith("#")]
    assert data[0] == "h,cdf"
    # h=0 row is P(empty) = (81/625)... at t=-1, alpha=1/2: (3/4 * 3/5)^... check value
    h0 = float(data[1].split(",")[1])
    assert abs(h0 - 81 / 625) < 1e-15


def test_dist_json_format():
    res = run_cli(
        "dist", "--m", "2", "--n", "2", "--alpha", "0.5", "--h-max", "2",
        "--format", "json",
    )
    doc = json.loads(res.stdout)
    assert doc["meta"]["command"] == "dist"
    assert len(doc["cdf"]) == 3


def test_sample_deterministic_bytes():
    args = (
        "sample", "--m", "2", "--n", "2", "--alpha", "0.4", "--t=-1",
        "--samples", "200", "--seed", "11",
    )
    a = run_cli(*args)
    b = run_cli(*args)
    assert a.returncode == 0
    assert a.stdout == b.stdout
    total = sum(int(l.split(",")[1]) for l in a.stdout.splitlines() if l[:1].isdigit())
    assert total == 200


def test_constants_json():
    res = run_cli("constants", "--alpha", "0.5", "--tau", "1", "--t", "0")
    doc = json.loads(res.stdout)
    assert abs(doc["c1"] - 2.0) < 1e-12
    assert set(doc) == {"alpha", "tau", "t", "z0", "c", "sigma3", "g", "c1", "c2"}


def test_tw_rows_monotone():
    res = run_cli("tw", "--s-grid=-2,0,2")
    rows = [l for l in res.stdout.splitlines() if not l.startswith("#")][1:]
    vals = [float(r.split(",")[1]) for r in rows]
    assert len(vals) == 3
    assert vals[0] < vals[1] < vals[2]


def test_converge_writes_files(tmp_path):
    prefix = str(tmp_path / "exp")
    res = run_cli(
        "converge", "--alpha", "0.5", "--tau", "1", "--t", "0",
        "--n-list", "6", "--s-grid=-1,1", "--out", prefix,
    )
    assert res.returncode == 0
    rows = (tmp_path / "exp_rows.csv").read_text()
    summary = (tmp_path / "exp_summary.csv").read_text()
    assert rows.splitlines()[-1].startswith("6,")
    assert "sup_distance" in summary


def test_verify_quick_passes():
    res = run_cli("verify")
    assert res.returncode == 0, res.stdout + res.stderr
    assert "all suites passed" in res.stdout
    assert "FAIL" not in res.stdout


def test_usage_error_exit_code():
    res = run_cli("dist", "--m", "2")
    assert res.returncode == 2
