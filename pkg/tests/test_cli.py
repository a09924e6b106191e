import json
import subprocess
import sys

import pytest

from tptoeplitz.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "--gamma", "1", "-n", "3")
    assert code == 0
    assert out.split() == ["1", "1/2", "1/6"]


def test_expand_float(capsys):
    code, out, _ = run(capsys, "expand", "--gamma", "1", "-n", "3", "--float", "--bits", "64")
    assert code == 0 and "0.1666" in out


def test_truncate_json(capsys, tmp_path):
    path = tmp_path / "u.json"
    assert main(["truncate", "--alpha", "1/2", "--beta", "1/3", "-n", "2", "--out", str(path)]) == 0
    obj = json.loads(path.read_text())
    assert obj["c"] == ["5/6", "5/12"]


def test_dq_and_chart(capsys):
    code, out, _ = run(capsys, "dq", "--gamma", "1", "-n", "3")
    assert "q: 3, 4, 3" in out
    code, out, _ = run(capsys, "chart", "--gamma", "1", "-n", "2", "--out", "json")
    assert json.loads(out)["v"] == [["1", "2"], ["2"]]


def test_check_toeplitz(capsys, tmp_path):
    good = tmp_path / "good.json"
    good.write_text(json.dumps([["1", "1/2", "1/3"], ["1/2", "1/3"], ["1/3"]]))
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([["1", "1/2", "1/3"], ["1/2", "1/5"], ["1/3"]]))
    code, out, _ = run(capsys, "check-toeplitz", "--chart", str(good))
    assert code == 0 and "true" in out
    code, out, _ = run(capsys, "check-toeplitz", "--chart", str(bad))
    assert "false" in out


def test_solve_q(capsys):
    code, out, _ = run(capsys, "solve-q", "--q", "2,2", "--tol", "1e-10", "--out", "json")
    assert code == 0
    c = [float(x) for x in json.loads(out)["c"]]
    assert abs(c[0] - 1) < 1e-9 and abs(c[1] - 0.5) < 1e-9


def test_solve_q_nonconvergence_exit_code(capsys):
    code, _, err = run(capsys, "solve-q", "--q", "3,1,4,1,5", "--max-iter", "1")
    assert code == 3 and "error" in err


def test_schubert_and_thoma(capsys):
    code, out, _ = run(capsys, "schubert", "--w", "2,3,1")
    assert code == 0 and "x1*x2 + q1" in out
    code, out, _ = run(capsys, "thoma", "--alpha", "1/2,1/2", "--cycle", "2,1,1")
    assert code == 0 and "1/2" in out


def test_vk_sweep_csv(capsys):
    code, out, _ = run(capsys, "vk-sweep", "--n", "4,6", "--out", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "n,shape,value,target,abs_err,a_ratios,b_ratios"
    assert "1/5" in out


def test_sweeps(capsys):
    geo = ["--geometric", "1/2,2/5,1/3,1/4,8"]
    for cmd in ("sweep-d", "sweep-q", "sweep-chern", "sweep-schubert"):
        code, out, _ = run(capsys, cmd, *geo, "--n", "4,6", "--out", "csv")
        assert code == 0, cmd
        assert out.splitlines()[0] == "n,quantity,value,target,abs_err"


def test_sweep_jobs_deterministic(capsys):
    argv = ["sweep-d", "--geometric", "1/2,2/5,1/3,1/4,8", "--n", "4..8", "--out", "csv"]
    _, one, _ = run(capsys, *argv)
    _, two, _ = run(capsys, *argv, "--jobs", "2")
    assert one == two


def test_tropical_commands(capsys):
    code, out, _ = run(capsys, "trop-invert", "--lambda", "4,2,0,-2,-4", "--out", "json")
    assert code == 0
    rows = json.loads(out)["filling"]
    assert {x for row in rows for x in row} == {"1"}
    code, out, _ = run(capsys, "trop-weight", "--diagonal", "1/2,1/2")
    assert code == 0 and "-1" in out
    code, out, _ = run(capsys, "trop-e", "--A", "0,5", "--B", "1,5")
    assert code == 0
    code, out, _ = run(capsys, "trop-sweep", "--A", "1", "--B", "1", "--n", "10,100")
    assert code == 0
    code, out, _ = run(capsys, "detrop-check", "--A", "0,1", "--B", "1/2,2")
    assert code == 0 and "false" not in out.lower()


def test_validation_errors(capsys, tmp_path):
    code, _, err = run(capsys, "trop-invert", "--lambda", "1,1")
    assert code == 2
    cfg = tmp_path / "p.json"
    cfg.write_text(json.dumps({"schema": 2, "alpha": ["1/2"]}))
    code, _, err = run(capsys, "expand", "--params", str(cfg), "-n", "2")
    assert code == 2 and "schema" in err
    cfg.write_text(json.dumps({"alpha": ["x"]}))
    code, _, err = run(capsys, "expand", "--params", str(cfg), "-n", "2")
    assert code == 2 and "alpha" in err
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2


def test_selftest_entry_point():
    res = subprocess.run([sys.executable, "-m", "tptoeplitz", "selftest"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.count("PASS") == 8
