import json
import os
import signal
import subprocess
import sys
import time

import pytest

from pcverify.cli import main, parse_int


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def records(out):
    return [json.loads(line) for line in out.splitlines()]


def test_parse_int():
    assert parse_int("10_000") == 10000
    assert parse_int("1e6") == 10**6
    assert parse_int("2E3") == 2000
    assert parse_int("-5") == -5


def test_verify_ok(capsys):
    code, out, _ = run(capsys, "verify", "c2.18.i", "4", "2_000")
    recs = records(out)
    assert code == 0
    assert len(recs) == 1998
    assert recs[5] == {"type": "verdict", "id": "c2.18.i", "n": 9, "verdict": "Holds",
                       "witness": {"q": 5, "p": 7}, "probabilistic": False}
    assert recs[-1]["type"] == "summary"
    assert recs[-1]["tallies"]["Holds"] == 1997
    assert "elapsed_us" not in recs[0]


def test_verify_first_witness(capsys):
    code, out, _ = run(capsys, "verify", "c3.7.i", "1", "22110", "--witnesses", "first")
    recs = records(out)
    assert code == 0
    assert recs[0]["n"] == 22110 and recs[0]["verdict"] == "Holds"
    assert recs[1]["first_holds"] == 22110


def test_verify_fails_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "c2.14.iii", "1", "200", "--witnesses", "failures")
    assert code == 0
    code, out, _ = run(capsys, "verify", "c3.21.i", "1", "20", "--witnesses", "failures")
    recs = records(out)
    assert code == 1
    assert [r["n"] for r in recs if r["type"] == "verdict"] == recs[-1]["counterexamples"]


def test_verify_exhausted_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "c2.18.i", "100", "110", "--budget", "1", "--witnesses", "none")
    assert code == 2
    assert records(out)[-1]["exhausted"]


@pytest.mark.parametrize("argv", [
    ["verify", "c2.18.i", "10", "5"],
    ["verify", "c9.99", "1", "5"],
    ["verify", "c2.18.i", "x", "5"],
    ["verify", "c2.18.i", "1", "5", "--witnesses", "some"],
    ["verify", "c2.18.i", "1", "5", "--jobs", "0"],
    ["sequence", "c2.10", "witness-count", "5"],
    ["chain", "1", "100"],
    ["frobnicate"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 3
    assert "error" in err


def test_memory_budget_fails_fast(capsys):
    t0 = time.perf_counter()
    code, out, err = run(capsys, "verify", "c3.15.iii", "1", "10000", "--memory-mb", "100")
    assert code == 3
    assert out == ""
    assert "--memory-mb" in err
    assert time.perf_counter() - t0 < 2


def test_timing_flag(capsys):
    code, out, _ = run(capsys, "verify", "c2.18.i", "4", "20", "--timing")
    recs = records(out)
    assert all("elapsed_us" in r for r in recs[:-1])
    assert "elapsed_s" in recs[-1]


def test_table_format(capsys):
    code, out, _ = run(capsys, "verify", "c2.10", "2", "5", "--format", "table")
    lines = out.splitlines()
    assert lines[0].split() == ["n", "verdict", "witness"]
    assert lines[1].split()[:2] == ["2", "Holds"]
    assert lines[-1].startswith("summary c2.10 n=2..5")


def test_sequence(capsys):
    code, out, _ = run(capsys, "sequence", "c2.1.i", "witness-count", "20")
    assert code == 0
    assert out.split() == "1 2 2 1 4 2 1 2 2 4 4 1 4 2 5 6 6 2 5".split()
    code, out, _ = run(capsys, "sequence", "c2.1.i", "witness-count-strict", "2", "--format", "json")
    assert records(out) == [{"type": "term", "id": "c2.1.i.a", "stat": "witness-count-strict", "n": 2, "term": 0}]


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "--format", "json")
    recs = records(out)
    assert code == 0 and len(recs) == 139
    assert {"id", "anchor", "quote", "kind", "domain_start", "exceptions", "paper_verified_bound",
            "desk_bound"} <= set(recs[0])
    code, out, _ = run(capsys, "catalog")
    row = next(line for line in out.splitlines() if line.startswith("c2.25 "))
    assert "norm not exceeding kn is a prime congruent to 1 modulo 4" in row


def test_chain(capsys):
    code, out, _ = run(capsys, "chain", "2", "100")
    assert code == 0 and records(out)[0]["chain"] == [5, 7]
    code, out, _ = run(capsys, "chain", "5", "100", "--format", "plain")
    assert code == 2 and out.startswith("Exhausted")


def test_tables_and_cache(capsys, tmp_path, monkeypatch):
    path = tmp_path / "s.pcv"
    code, out, _ = run(capsys, "tables", "150", "--out", str(path))
    assert code == 0 and records(out)[0]["pi"] == 35
    code, out, _ = run(capsys, "tables", "1e6", "-o", str(path))
    assert records(out)[0]["pi"] == 78498
    monkeypatch.setenv("PCVERIFY_CACHE", str(path))
    code, cached, _ = run(capsys, "verify", "c2.18.i", "4", "500")
    monkeypatch.delenv("PCVERIFY_CACHE")
    code2, fresh, _ = run(capsys, "verify", "c2.18.i", "4", "500")
    assert code == code2 == 0 and cached == fresh
    path.write_bytes(b"junk" + path.read_bytes()[4:])
    code, _, err = run(capsys, "verify", "c2.18.i", "4", "500", "--cache", str(path))
    assert code == 3 and str(path) in err and "bad magic" in err


def test_checkpoint_mismatch(capsys, tmp_path):
    ck = tmp_path / "c.json"
    assert run(capsys, "verify", "c2.18.i", "4", "300", "--checkpoint", str(ck))[0] == 0
    code, _, err = run(capsys, "verify", "c2.18.i", "4", "301", "--checkpoint", str(ck))
    assert code == 3 and "range end" in err


def _cli(*args, **kw):
    return [sys.executable, "-m", "pcverify", *args]


def test_sigkill_and_resume(tmp_path):
    args = ["verify", "c2.18.i", "4", "150000", "--witnesses", "failures"]
    ref = subprocess.run(_cli(*args), capture_output=True, text=True, check=True).stdout
    ck = tmp_path / "run.ckpt"
    proc = subprocess.Popen(_cli(*args, "--checkpoint", str(ck), "--checkpoint-every", "2000"),
                            stdout=subprocess.DEVNULL)
    deadline = time.time() + 60
    while time.time() < deadline and not ck.exists():
        time.sleep(0.05)
    time.sleep(0.3)
    proc.send_signal(signal.SIGKILL)
    proc.wait()
    assert proc.returncode == -signal.SIGKILL
    cursor = json.loads(ck.read_text())["next_n"]
    assert 4 < cursor <= 150001
    out = subprocess.run(_cli(*args, "--checkpoint", str(ck)), capture_output=True, text=True, check=True).stdout
    assert out == ref
    assert not any(p.name.startswith("run.ckpt.") for p in tmp_path.iterdir())


def test_console_script_entry_point():
    res = subprocess.run(_cli("catalog", "--format", "plain"), capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.splitlines()[0] == "c2.1.i.a"
    env = dict(os.environ)
    res = subprocess.run(_cli("verify", "c2.18.i", "9", "3"), capture_output=True, text=True, env=env)
    assert res.returncode == 3
