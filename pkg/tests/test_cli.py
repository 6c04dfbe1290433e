import io
import json
import subprocess
import sys

import pytest

from hooklab import genfuns
from hooklab.cli import main
from hooklab.verify import flip_coefficient


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue().splitlines(), err.getvalue()


def test_count_table_value():
    assert run("count", "--t", "2", "--n", "16")[:2] == (0, ["14"])


def test_count_methods_agree():
    for t in range(1, 11):
        for n in range(31):
            values = {run("count", "--t", str(t), "--n", str(n), "--method", m)[1][0]
                      for m in ("oracle", "formula", "series")}
            assert len(values) == 1, (t, n, values)


def test_decompose_worked_example():
    code, lines, _ = run("decompose", "--partition", "7,7,5,4,3,2,2", "--t", "4")
    assert code == 0
    record = json.loads(lines[0])
    assert record["core"] == "3,2,1"
    assert record["quotient"] == ["-", "3", "1,1,1", "-"]
    assert record["words"]["partition"] == "1100101.0101100"
    assert record["words"]["core"] == "101.010"
    assert record["self_conjugate_check"] == "pass"


def test_enumerate_empty_sc():
    code, lines, _ = run("enumerate", "--n", "0", "--class", "sc")
    assert code == 0
    assert [json.loads(line)["partition"] for line in lines] == ["-"]


def test_enumerate_with_hooks():
    code, lines, _ = run("enumerate", "--n", "16", "--class", "sc", "--hooks")
    records = [json.loads(line) for line in lines]
    assert len(records) == 5
    assert records[0]["partition"] == "8,2,1,1,1,1,1,1"
    assert sum(r["hooks"].count(2) for r in records) == 14


def test_enumerate_all_is_reverse_lex():
    _, lines, _ = run("enumerate", "--n", "4")
    assert [json.loads(line)["partition"] for line in lines] == ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]


def test_series_output():
    code, lines, _ = run("series", "--which", "sc", "--qmax", "4")
    assert code == 0
    assert json.loads(lines[0]) == [
        {"q": 0, "x": 0, "coeff": "1"},
        {"q": 1, "x": 0, "coeff": "1"},
        {"q": 3, "x": 0, "coeff": "1"},
        {"q": 4, "x": 0, "coeff": "1"},
    ]
    code, lines, _ = run("series", "--which", "a_star", "--t", "2", "--qmax", "16")
    assert {"q": 16, "x": 0, "coeff": "14"} in json.loads(lines[0])


@pytest.mark.parametrize("which", ["hstar", "thm11", "han", "gks", "gen1", "d1", "d2"])
def test_every_series_choice_runs(which):
    code, lines, _ = run("series", "--which", which, "--t", "3", "--qmax", "8")
    assert code == 0
    assert isinstance(json.loads(lines[0]), list)


def test_series_needs_t():
    assert run("series", "--which", "thm11")[0] == 2


def test_qmax_env_default(monkeypatch):
    monkeypatch.setenv("HOOKLAB_QMAX_DEFAULT", "3")
    _, lines, _ = run("series", "--which", "sc")
    assert max(term["q"] for term in json.loads(lines[0])) == 3


def test_table():
    code, lines, _ = run("table", "--n", "16")
    rows = [json.loads(line) for line in lines]
    assert [r["a_star"] for r in rows] == [14, 14, 12, 12, 8, 6, 2, 8, 1, 0, 1, 0, 1, 0, 1, 0]
    assert rows[-1]["t"] == ">=16"


def test_verify_passes():
    code, lines, err = run("verify", "--target", "thm1.1", "--t", "2,3", "--qmax", "14")
    assert code == 0 and err == ""
    assert [json.loads(line)["status"] for line in lines] == ["pass", "pass"]


def test_verify_failure_exit_code(monkeypatch):
    real = genfuns.thm11_rhs
    monkeypatch.setattr(genfuns, "thm11_rhs", lambda t, N: flip_coefficient(real(t, N), 5, 1))
    code, lines, err = run("verify", "--target", "thm1.1", "--t", "2", "--qmax", "10")
    assert code == 1
    mismatch = json.loads(err.splitlines()[0])["mismatch"]
    assert (mismatch["q"], mismatch["x"]) == (5, 1)


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--t", "0", "--n", "3"],
        ["count", "--t", "2", "--n", "-1"],
        ["count", "--t", "2"],
        ["count", "--t", "2", "--n", "4", "--bogus", "1"],
        ["decompose", "--partition", "1,2", "--t", "2"],
        ["verify", "--target", "nope"],
        ["frobnicate"],
    ],
)
def test_bad_flags_exit_2(argv):
    assert run(*argv)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hooklab", "count", "--t", "8", "--n", "16"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "8"
