import json
import subprocess
import sys

import pytest

from permpoly.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main, sweep_cases

KEYS = {"cmd", "inputs", "result", "status", "runtime_ms"}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines()]


def test_cn_all_agree(capsys):
    code, recs = run(capsys, "cn", "--p", "3", "--e", "7", "--a", "2")
    assert code == EXIT_OK
    (rec,) = recs
    assert set(rec) == KEYS and rec["status"] == "ok"
    methods = rec["result"]["methods"]
    assert {m["value"] for m in methods.values()} == {1}
    assert set(methods) == {"brute", "multinomial", "borrow-set", "closed-form"}


def test_cn_closed_form_section62(capsys):
    code, recs = run(capsys, "cn", "--p", "3", "--k", "2", "--e", "5", "--a", "4",
                     "--method", "closed-form")
    assert code == EXIT_OK
    r = recs[0]["result"]
    assert r["section"] == "6.2"
    assert r["methods"]["closed-form"]["N"] == 80
    assert r["methods"]["closed-form"]["value"] == 2


def test_cn_usage_errors(capsys):
    assert main(["cn", "--p", "3", "--e", "2", "--a", "3"]) == EXIT_USAGE
    assert main(["cn", "--p", "4", "--e", "2", "--a", "3"]) == EXIT_USAGE
    assert main(["cn", "--p", "3", "--e", "2"]) == EXIT_USAGE
    assert main(["bogus"]) == EXIT_USAGE
    assert main(["cn", "--method", "nope"]) == EXIT_USAGE
    capsys.readouterr()


def test_cn_section3_is_skipped(capsys):
    code, recs = run(capsys, "cn", "--p", "3", "--e", "9", "--a", "2")
    assert code == EXIT_OK and recs[0]["status"] == "skipped"


def test_tables(capsys):
    code, recs = run(capsys, "tables", "--which", "cor5.4")
    assert code == EXIT_OK
    rows = recs[0]["result"]["rows"]
    assert rows[0]["value"] == 35 and rows[0]["factored"] == "5*7"
    code, recs = run(capsys, "tables", "--which", "cor6.4")
    assert recs[0]["result"]["rows"][1]["factored"] == "2*5*7"
    code, recs = run(capsys, "tables", "--which", "cor4.4")
    assert recs[0]["result"]["rows"][3]["value"] % 81 == 0
    code, recs = run(capsys, "tables")
    assert [r["inputs"]["which"] for r in recs] == ["cor4.4", "cor5.4", "cor6.4"]


def test_hasse(capsys):
    code, recs = run(capsys, "hasse", "--p", "3", "--e", "8", "--a", "2")
    assert code == EXIT_OK and recs[0]["result"]["certified"]
    assert main(["hasse", "--p", "3", "--e", "7", "--a", "2"]) == EXIT_USAGE
    capsys.readouterr()


def test_lemma(capsys):
    code, recs = run(capsys, "lemma", "--id", "7.1", "--p", "5", "--e", "3")
    assert code == EXIT_OK and recs[0]["result"]["closed"] == [[1, 0, 3]]
    code, recs = run(capsys, "lemma", "--id", "6.5", "--p", "3", "--e", "4")
    assert code == EXIT_OK
    assert recs[0]["result"]["closed"] == [[2, 4, 2], [5, 0, 3]]
    assert recs[0]["result"]["brute"] == recs[0]["result"]["closed"]
    assert main(["lemma", "--id", "8.1", "--p", "3", "--e", "4"]) == EXIT_USAGE
    capsys.readouterr()


def test_field(capsys):
    code, recs = run(capsys, "field", "--p", "2", "--e", "3")
    assert recs[0]["result"]["modulus"] == [1, 1, 0, 1]
    assert main(["field", "--p", "3", "--e", "30", "--max-card", "1000"]) == EXIT_USAGE
    capsys.readouterr()


def test_sweep_small(capsys):
    code, recs = run(capsys, "sweep", "--max-card", str(3**8), "--primes", "3", "--no-timing")
    assert code == EXIT_OK
    assert recs and all(r["status"] == "ok" for r in recs)
    keys = [(r["inputs"]["q"], r["inputs"]["e"], r["inputs"]["a"]) for r in recs]
    assert keys == sorted(keys)


def test_sweep_even(capsys):
    code, recs = run(capsys, "sweep", "--max-card", "1024", "--primes", "2", "--include-even")
    assert code == EXIT_OK
    a2 = [r for r in recs if r["inputs"]["q"] == 2 and r["inputs"]["a"] == 2]
    assert a2 and all(r["result"]["is_pp"] for r in a2)
    code, recs = run(capsys, "sweep", "--max-card", "1024", "--primes", "2")
    assert recs == []


def test_sweep_empty(capsys):
    code, recs = run(capsys, "sweep", "--primes", "")
    assert code == EXIT_OK and recs == []


def test_sweep_cases():
    cases = sweep_cases(100, [2, 3], True)
    assert (4, 3, 1) in cases and (9, 2, 4) in cases and (3, 4, 10) in cases
    assert all(q**e <= 100 for q, e, _ in cases)


def test_deterministic_and_out_file(capsys, tmp_path):
    argv = ["sweep", "--max-card", "729", "--primes", "3", "--no-timing", "--threads", "3"]
    out = tmp_path / "r.jsonl"
    main(argv + ["--out", str(out)])
    first = capsys.readouterr().out
    main(argv[:-2])
    second = capsys.readouterr().out
    assert first == second
    assert out.read_text() == first


def test_mismatch_exit_code(capsys, monkeypatch):
    import permpoly.cli as cli
    from permpoly.ppcheck import PPVerdict

    monkeypatch.setattr(cli, "is_pp", lambda spec, a: PPVerdict(spec.q, spec.e, a, True, False))
    assert main(["sweep", "--max-card", "9", "--primes", "3"]) == EXIT_MISMATCH
    assert '"status":"mismatch"' in capsys.readouterr().out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "permpoly", "hasse", "--p", "3", "--e", "8",
                           "--a", "2", "--no-timing"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "ok"
