"""Report serialization and the command-line entry point."""

import json
import subprocess
import sys

import pytest

from sccckit import from_json, run_suite, fdhilb
from sccckit.cli import main
from sccckit.report import CheckResult, VerificationReport
from sccckit.errors import InvariantViolation


def small_report():
    return run_suite("born", fdhilb(), trials=5, seed=1, max_dim=2)


def test_report_round_trips_through_json():
    rep = small_report()
    again = from_json(rep.to_json())
    assert again.to_dict() == rep.to_dict()
    assert again.schema == 1


def test_report_text_mentions_every_check():
    rep = small_report()
    text = rep.to_text()
    for r in rep.results:
        assert r.check_name in text


def test_report_counts_and_ok():
    rep = small_report()
    counts = rep.counts()
    assert counts["fail"] == 0
    assert sum(counts.values()) == len(rep.results)
    assert rep.ok


def test_empty_report_is_valid():
    rep = VerificationReport(suite="born", model="fdhilb", seed=0,
                             tolerance=1e-9, trials=0, results=[])
    assert rep.ok
    assert from_json(rep.to_json()).to_dict() == rep.to_dict()


def test_failures_must_carry_witnesses():
    with pytest.raises(InvariantViolation):
        CheckResult("x", "law", "fail", None)
    with pytest.raises(InvariantViolation):
        CheckResult("x", "law", "meh", {})


def test_cli_verify_runs_green(capsys):
    rc = main(["verify", "sccc", "--model", "fdhilb", "--trials", "5",
               "--max-dim", "3", "--seed", "1"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "suite=sccc" in out and "fail" in out  # the counts line


def test_cli_json_runs_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["verify", "wproj", "--model", "fdhilb", "--trials", "5",
            "--max-dim", "2", "--seed", "3", "--json"]
    assert main(args + [str(a)]) == 0
    assert main(args + [str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    parsed = json.loads(a.read_text())
    assert parsed["schema"] == 1 and parsed["suite"] == "wproj"


def test_cli_json_to_stdout(capsys):
    rc = main(["verify", "born", "--model", "rel", "--trials", "4",
               "--max-dim", "2", "--json"])
    assert rc == 0
    out = capsys.readouterr().out
    rep = from_json(out)
    assert rep.model == "rel" and rep.ok


def test_cli_env_seed(monkeypatch, capsys):
    monkeypatch.setenv("SCCCKIT_SEED", "42")
    assert main(["verify", "born", "--trials", "4", "--max-dim", "2",
                 "--json"]) == 0
    seeded = json.loads(capsys.readouterr().out)
    assert seeded["seed"] == 42
    monkeypatch.setenv("SCCCKIT_SEED", "oops")  # garbage falls back to 0
    assert main(["verify", "born", "--trials", "4", "--max-dim", "2",
                 "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["seed"] == 0


def test_cli_rejects_unknown_model(capsys):
    assert main(["verify", "sccc", "--model", "nope"]) == 2
    assert "nope" in capsys.readouterr().err


def test_cli_rejects_quotient_model_for_plain_suites(capsys):
    assert main(["verify", "sccc", "--model", "wproj:fdhilb"]) == 2
    assert "wproj" in capsys.readouterr().err


def test_cli_reports_failures_in_exit_code(monkeypatch, capsys):
    bad = VerificationReport(
        suite="born", model="fdhilb", seed=0, tolerance=1e-9, trials=1,
        results=[CheckResult("broken", "law", "fail", {"why": "forced"})])
    monkeypatch.setattr("sccckit.cli.run_suite",
                        lambda *a, **kw: bad)
    assert main(["verify", "born"]) == 1


def test_cli_teleport_with_custom_state(capsys):
    rc = main(["protocol", "teleport", "--state", "[[0,0],[1,0]]", "--json"])
    assert rc == 0
    rep = from_json(capsys.readouterr().out)
    assert rep.suite == "teleport" and rep.ok


def test_cli_teleport_rejects_bad_state(capsys):
    assert main(["protocol", "teleport", "--state", "[[1,0]]"]) == 2
    assert main(["protocol", "teleport", "--state", "not json"]) == 2


def test_module_entry_point_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "sccckit", "verify", "born", "--model", "rel",
         "--trials", "3", "--max-dim", "2"],
        capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0, proc.stderr
    assert "suite=born" in proc.stdout
