import json
import subprocess
import sys

import pytest

from hurwitz.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv, expected", [
    (["--genus", "1", "--profile", "2,1", "--method", "oracle", "--normalization", "raw"], "9"),
    (["--genus", "0", "--profile", "4,2,1", "--method", "recursion", "--normalization", "hat"], "1"),
    (["--genus", "2", "--profile", "2", "--method", "closed-form", "--normalization", "hat"], "1/384"),
    (["--genus", "1", "--profile", "1,1", "--method", "recursion", "--normalization", "prime"], "1"),
    (["--genus", "2", "--profile", "2", "--method", "closed-form", "--normalization", "raw"], "1/2"),
])
def test_compute(capsys, argv, expected):
    code, out, _ = run(capsys, "compute", *argv)
    assert code == 0
    assert out == expected + "\n"


@pytest.mark.parametrize("g, profile", [(0, "3,1"), (1, "2,1,1"), (2, "2,2"), (1, "4")])
@pytest.mark.parametrize("norm", ["raw", "prime", "hat"])
def test_methods_agree(capsys, g, profile, norm):
    outs = set()
    methods = ["oracle", "recursion"] + (["closed-form"] if g in (0, 2) else [])
    for method in methods:
        code, out, _ = run(capsys, "compute", "--genus", str(g), "--profile", profile,
                           "--method", method, "--normalization", norm)
        assert code == 0
        outs.add(out)
    assert len(outs) == 1


def test_closed_form_unsupported_genus(capsys):
    code, _, err = run(capsys, "compute", "--genus", "1", "--profile", "2", "--method", "closed-form")
    assert code == 4
    assert "genus" in err


def test_oracle_budget_exceeded(capsys):
    code, out, err = run(capsys, "compute", "--genus", "3", "--profile", "4,1", "--method", "oracle",
                         "--budget", "1000")
    assert code == 3
    assert out == ""
    assert "1000" in err


@pytest.mark.parametrize("argv", [
    ["compute", "--genus", "1", "--profile", "0,1"],
    ["compute", "--genus", "-1", "--profile", "2"],
    ["compute", "--genus", "1", "--profile", "2", "--method", "magic"],
    ["compute", "--profile", "2"],
    ["table", "--max-n", "2"],
])
def test_bad_flags_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


@pytest.mark.parametrize("argv", [
    ["theorem1", "--max-genus", "2", "--max-n", "5"],
    ["eq4"],
    ["cutjoin", "--max-n", "4", "--max-genus", "2"],
    ["genus2", "--max-n", "6"],
    ["pde", "--max-degree", "4", "--max-order", "5"],
])
def test_verify_passes(capsys, argv):
    code, out, _ = run(capsys, "verify", *argv)
    assert code == 0
    assert "FAIL" not in out


def test_verify_eq4_report(capsys):
    _, out, _ = run(capsys, "verify", "eq4")
    assert out.splitlines()[0] == "residual polynomial = 0"
    assert out.strip().endswith("eq4: 21/21 passed")


def test_verify_cutjoin_reports_skips(capsys):
    code, out, _ = run(capsys, "verify", "cutjoin", "--max-n", "3", "--max-genus", "2", "--budget", "100")
    assert code == 0
    assert "[skip] g=2 b=1,1,1" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    from hurwitz import closedform
    from fractions import Fraction
    monkeypatch.setattr(closedform, "genus2_hat", lambda b: Fraction(0))
    code, out, _ = run(capsys, "verify", "genus2", "--max-n", "2")
    assert code == 1
    assert "[FAIL] b=2 closed-form=0 recursion=1/384" in out


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--max-n", "2", "--max-genus", "1", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "g,b,n,q,r,H,Hprime,Hhat"
    assert len(lines) == 7
    assert '1,"2",2,1,2,1/2,1/2,1/8' in lines


def test_table_single_row(capsys):
    _, out, _ = run(capsys, "table", "--max-n", "1", "--max-genus", "0")
    assert out.splitlines()[1:] == ['0,"1",1,1,0,1,1,1']


def test_table_json(capsys, tmp_path):
    path = tmp_path / "t.json"
    code, out, _ = run(capsys, "table", "--max-n", "3", "--max-genus", "1", "--format", "json",
                       "--out", str(path))
    assert code == 0 and out == ""
    rows = json.loads(path.read_text())
    row = next(r for r in rows if r["g"] == 1 and r["b"] == "2,1")
    assert row["H"] == "9"
    assert row == {"g": 1, "b": "2,1", "n": 3, "q": 2, "r": 3, "H": "9", "Hprime": "9", "Hhat": "1/6"}
    assert all(isinstance(r[k], int) for r in rows for k in ("g", "n", "q", "r"))
    assert all(isinstance(r[k], str) for r in rows for k in ("b", "H", "Hprime", "Hhat"))


def test_table_unwritable(capsys, tmp_path):
    code, _, err = run(capsys, "table", "--max-n", "2", "--max-genus", "1",
                       "--out", str(tmp_path / "missing" / "t.csv"))
    assert code == 2
    assert "cannot write" in err


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "hurwitz", *argv], capture_output=True, check=False)


def test_output_byte_identical_across_runs_and_threads():
    a = _cli("table", "--max-n", "5", "--max-genus", "2", "--format", "csv")
    b = _cli("table", "--max-n", "5", "--max-genus", "2", "--format", "csv")
    assert a.returncode == 0 and a.stdout == b.stdout
    c1 = _cli("verify", "cutjoin", "--max-n", "4", "--max-genus", "1", "--threads", "1")
    c3 = _cli("verify", "cutjoin", "--max-n", "4", "--max-genus", "1", "--threads", "3")
    assert c1.returncode == 0 and c1.stdout == c3.stdout
    o1 = _cli("compute", "--genus", "1", "--profile", "3,1", "--method", "oracle", "--threads", "1")
    o4 = _cli("compute", "--genus", "1", "--profile", "3,1", "--method", "oracle", "--threads", "4")
    # H_1(4|3,1) = 36, also checked against naive enumeration in test_oracle
    assert o1.stdout == o4.stdout == b"36\n"
