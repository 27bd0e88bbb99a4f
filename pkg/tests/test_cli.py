import io
import json
import subprocess
import sys

import pytest

from hitcalc import cli


@pytest.fixture(autouse=True)
def _cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("HITCALC_CACHE_DIR", str(tmp_path / "cache"))


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out)
    return code, out.getvalue()


def test_dim_text_and_json():
    assert run("-q", "dim", "-t", "5", "-n", "14") == (0, "320\n")
    code, text = run("-q", "dim", "-t", "5", "-n", "14", "--json")
    rec = json.loads(text)
    assert code == 0
    assert rec == {"schema": "hitcalc/1", "t": 5, "n": 14, "monomials": 3060, "hit_rank": 2740, "dim": 320}


def test_dim_uses_cache(tmp_path):
    run("-q", "dim", "-t", "4", "-n", "9")
    assert (tmp_path / "cache" / "basis-t4-n9.txt").exists()
    code, text = run("-q", "cache", "inspect")
    assert code == 0 and "basis-t4-n9.txt" in text
    code, text = run("-q", "cache", "clear")
    assert "removed 1" in text


def test_no_cache_writes_nothing(tmp_path):
    run("-q", "--no-cache", "dim", "-t", "3", "-n", "7")
    assert not (tmp_path / "cache").exists()


def test_trace_json():
    code, text = run("-q", "trace", "-t", "3", "-n", "7", "--json")
    rec = json.loads(text)
    assert rec["sources"] == [28, 21, 10]
    assert rec["dim"] == 10
    code2, text2 = run("-q", "dim", "-t", "3", "-n", "7", "--trace")
    assert text2.splitlines()[-1] == "10"


def test_basis_filters(tmp_path, capsys):
    code, text = run("-q", "basis", "-t", "5", "-n", "14", "--omega", "2,2,2", "--part", "positive")
    assert code == 0
    lines = text.splitlines()
    assert all(len(line.split()) == 5 and "0" not in line.split() for line in lines)
    assert f"{len(lines)} admissible monomials" in capsys.readouterr().err
    dest = tmp_path / "out.txt"
    code, text = run("-q", "basis", "-t", "5", "-n", "14", "--out", str(dest))
    assert text == "320\n" and len(dest.read_text().splitlines()) == 320
    assert run("-q", "basis", "-t", "5", "-n", "14", "--omega", "2,2")[0] == 1


def test_kameko_split_and_iso():
    code, text = run("-q", "kameko", "-t", "5", "-n", "13", "--split")
    assert code == 0
    assert "kernel 616" in text and "split 330 + 1 + 215 + 70 = 616" in text
    code, text = run("-q", "kameko", "-t", "5", "-n", "139", "--json")
    assert json.loads(text)["isomorphism"] is True


def test_invariants():
    code, text = run("-q", "invariants", "-t", "5", "-n", "14")
    assert code == 0 and text.splitlines()[0] == "1"
    code, text = run("-q", "invariants", "-t", "5", "-n", "14", "--omega", "2,4,1", "--json")
    assert json.loads(text)["dim"] == 0
    assert run("-q", "invariants", "-t", "3", "-n", "5", "--group", "bogus")[0] == 1


def test_maps_arguments_and_stdin(monkeypatch):
    assert run("maps", "q", "-l", "2", "1 2") == (0, "1 0 2\n")
    assert run("maps", "psi", "-l", "1", "-L", "2,3,4", "12 6 9") == (0, "7 8 4 8\n")
    assert run("maps", "lift", "-l", "1", "-d", "2", "1 2") == (0, "3 1 2\n")
    monkeypatch.setattr(sys, "stdin", io.StringIO("# comment\n1 2\n0 3\n"))
    assert run("maps", "p", "-l", "1", "-L", "2") == (0, "3\n3\n")


def test_conjecture():
    code, text = run("-q", "conjecture", "-t", "5", "-n", "14", "--omega", "2,4,1")
    assert code == 0 and "vacuously" in text
    assert run("-q", "conjecture", "-t", "1", "-n", "3")[0] == 1


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["nonsense"], io.StringIO())
    assert exc.value.code == 1
    assert run("-q", "dim", "-t", "0", "-n", "3")[0] == 1
    with pytest.raises(SystemExit) as exc:
        cli.main(["--max-mem", "lots", "dim", "-t", "2", "-n", "2"], io.StringIO())
    assert exc.value.code == 1


def test_memory_guard(capsys):
    assert run("--max-mem", "1M", "dim", "-t", "5", "-n", "31")[0] == 3
    assert "resource limit" in capsys.readouterr().err


def test_parse_size():
    assert cli.parse_size("2G") == 2 << 30
    assert cli.parse_size("512M") == 512 << 20
    assert cli.parse_size("1.5GiB") == 3 << 29
    assert cli.parse_size("4096") == 4096


def test_verify_mismatch_exit(monkeypatch):
    from hitcalc import verify

    bad = [verify.Check("deliberate", 1, lambda: 2)]
    monkeypatch.setattr(verify, "checks_for", lambda suite: bad)
    code, text = run("verify", "quick")
    assert code == 2
    assert "FAIL  deliberate" in text and "0/1 checks passed" in text


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "hitcalc", "-q", "dim", "-t", "3", "-n", "7"],
        capture_output=True,
        text=True,
        env={"HITCALC_CACHE_DIR": str(tmp_path), "PATH": "/usr/bin:/bin"},
    )
    assert proc.returncode == 0
    assert proc.stdout == "10\n"


def test_outputs_are_deterministic(tmp_path):
    first = run("-q", "--no-cache", "basis", "-t", "4", "-n", "11")
    second = run("-q", "basis", "-t", "4", "-n", "11")
    third = run("-q", "basis", "-t", "4", "-n", "11")  # from the cache
    assert first == second == third
    a = run("-q", "invariants", "-t", "4", "-n", "7", "--json")
    b = run("-q", "invariants", "-t", "4", "-n", "7", "--json")
    assert a == b
