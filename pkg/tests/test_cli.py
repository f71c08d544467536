from __future__ import annotations

import json
import subprocess
import sys

import pytest

from hodgeint.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, text", [
    (["compute", "--g", "2", "--lambda", "2", "--psi", "2"], "7/5760"),
    (["compute", "--g", "0", "--lambda", "0", "--psi", "1,0,0,0"], "1"),
    (["compute", "--g", "0", "--lambda", "0", "--psi", "3,0,0"], "0"),
    (["compute", "--g", "1", "--psi", "1,1,1"], "1/12"),
])
def test_compute(capsys, argv, text):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out == text + "\n"


def test_compute_json_sorts_psi(capsys):
    code, out, _ = run(capsys, "--format", "json", "compute", "--g", "1", "--lambda", "0", "--psi", "1,2,0")
    assert code == 0
    assert json.loads(out) == {"g": 1, "lambda": 0, "psi": [2, 1, 0], "value": "1/12"}


@pytest.mark.parametrize("argv", [
    ["compute", "--g", "0", "--psi", "0,0"],
    ["compute", "--g", "x", "--psi", "1"],
    ["compute", "--g", "1", "--psi", "-1,2"],
    ["compute", "--g", "-1", "--psi", "1"],
    ["relation", "--g", "1", "--e", "1,1", "--d", "1"],
    ["table", "--dims", "0"],
    ["bogus"],
    [],
])
def test_bad_input(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert err.startswith("error: ") and err.count("\n") == 1


def test_window_diagnostic_names_minimal_degree(capsys):
    _, _, err = run(capsys, "relation", "--g", "1", "--e", "1,1", "--d", "1")
    assert "minimal legal d is 2" in err


@pytest.mark.parametrize("d, count", [(1, 3), (2, 8), (4, 32)])
def test_table_counts(capsys, tmp_path, d, count):
    out_path = tmp_path / "t.txt"
    code, _, _ = run(capsys, "table", "--dims", str(d), "--output", str(out_path))
    assert code == 0
    assert len(out_path.read_text().splitlines()) == count


def test_table_stdout_matches_file(capsys, tmp_path):
    out_path = tmp_path / "t.txt"
    run(capsys, "table", "--dims", "3", "--output", str(out_path))
    _, out, _ = run(capsys, "table", "--dims", "3")
    assert out == out_path.read_text()


def test_table_io_error(capsys, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    code, _, err = run(capsys, "table", "--dims", "1", "--output", str(blocker / "sub" / "t.txt"))
    assert code == 4 and err.startswith("error: ")


def test_bad_cache_is_io_error(capsys, tmp_path):
    cache = tmp_path / "c.txt"
    cache.write_text("not a record\n")
    code, _, err = run(capsys, "--cache", str(cache), "compute", "--g", "1", "--psi", "1")
    assert code == 4 and f"{cache}:1" in err


def test_cache_flag_and_env(capsys, tmp_path, monkeypatch):
    cache = tmp_path / "c.txt"
    run(capsys, "--cache", str(cache), "compute", "--g", "1", "--lambda", "1", "--psi", "0")
    assert "1 1 [0] = 1/24" in cache.read_text()
    env_cache = tmp_path / "env.txt"
    monkeypatch.setenv("HODGEINT_CACHE", str(env_cache))
    run(capsys, "compute", "--g", "1", "--psi", "1")
    assert env_cache.exists()


def test_escalation_exit_code(capsys, monkeypatch):
    import hodgeint.cli as cli
    from hodgeint.engine import Engine

    monkeypatch.setattr(cli.Engine, "from_environment", classmethod(lambda cls, p=None: Engine(ceiling_margin=-2)))
    code, _, err = run(capsys, "compute", "--g", "1", "--lambda", "1", "--psi", "0")
    assert code == 3 and err.startswith("error: ")


def test_relation_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "relation", "--g", "1", "--e", "1,1", "--d", "3")
    assert code == 0
    assert json.loads(out) == {"d": 3, "unknowns": ["1 0 [1,1,1]"], "coefficients": ["6"], "constant": "-1/2"}


def test_relation_text(capsys):
    _, out, _ = run(capsys, "relation", "--g", "0", "--e", "0,0,0", "--d", "3")
    assert out == "d=3: 6*<0 0 [1,0,0,0]> + -6 = 0\n"


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--dims", "4")
    assert code == 0 and out.splitlines()[-1] == "32/32 matched"
    assert run(capsys, "verify", "--genus0", "--max-n", "7")[0] == 0
    assert run(capsys, "verify", "--hurwitz", "--max-d", "6")[0] == 0
    assert run(capsys, "verify", "--lambda-g", "--max-dim", "5")[0] == 0
    code, out, _ = run(capsys, "--format", "json", "verify", "--lambda-gm1", "--max-g", "2")
    assert code == 0 and json.loads(out)["matched"] == 2


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    from fractions import Fraction

    from hodgeint import reference
    from hodgeint.hodge import HodgeKey

    monkeypatch.setitem(reference.WORKED_VALUES, HodgeKey(1, 1, (0,)), Fraction(1, 12))
    code, out, _ = run(capsys, "verify", "--dims", "1")
    assert code == 1 and "FAIL" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hodgeint", "compute", "--g", "2", "--lambda", "1", "--psi", "3"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout == "1/480\n"
