import json

import pytest

from eightpoints.cache import CUBIC, KEMPE_BINDING, QUINTIC
from eightpoints.cli.main import EXIT_PASS, EXIT_USAGE, list_claims, main
from eightpoints.cli.registry import CLAIMS, ClaimContext, ClaimSpec, RunConfig, required_artifacts, resolve_claims
from eightpoints.cli.runner import run_claim, run_claims
from eightpoints.errors import UnknownClaimError
from eightpoints.reports import FAIL

def test_registry_lists_every_claim(capsys):
    """Test that --list prints one line per registered claim."""
    assert main(["--list"]) == EXIT_PASS
    out = capsys.readouterr().out
    assert len(out.splitlines()) == len(CLAIMS) == 21
    assert "M8-SEC21" in out
    assert list_claims() == out

def test_list_subcommand(capsys):
    """Test the list subcommand as an alias of --list."""
    assert main(["list"]) == EXIT_PASS
    assert "N8-QUINTIC" in capsys.readouterr().out

def test_resolve_claims():
    """Test 'all' expansion, registry order and unknown ids."""
    assert resolve_claims(["all"]) == list(CLAIMS)
    assert resolve_claims([]) == list(CLAIMS)
    assert resolve_claims(["N8-HILB", "M8-HILB"]) == ["M8-HILB", "N8-HILB"]
    with pytest.raises(UnknownClaimError):
        resolve_claims(["M8-HILB", "M9-HILB"])

def test_required_artifacts():
    """Test that artifacts are collected once, in first-use order."""
    assert required_artifacts(["M8-HILB"]) == []
    assert required_artifacts(["M8-SING", "M8-SYZ", "N8-QSING"]) == [KEMPE_BINDING, CUBIC, QUINTIC]

def test_unknown_claim_is_a_usage_error(tmp_path):
    """Test exit status 2 for an unregistered claim id."""
    assert main(["--cache", str(tmp_path), "run", "NOT-A-CLAIM"]) == EXIT_USAGE

def test_bad_primes_are_rejected():
    """Test that a non-prime modulus stops argument parsing."""
    with pytest.raises(SystemExit) as excinfo:
        main(["--prime", "4,5", "run", "TAB-SSYT"])
    assert excinfo.value.code == 2

def test_jobs_must_be_positive():
    """Test that zero workers is a usage error."""
    with pytest.raises(SystemExit) as excinfo:
        main(["--jobs", "0", "run", "TAB-SSYT"])
    assert excinfo.value.code == 2

def test_run_writes_reports(tmp_path):
    """Test that a passing run exits 0 and writes a JSON report array."""
    out = tmp_path / "reports.json"
    metrics = tmp_path / "metrics.prom"
    argv = ["--out", str(out), "--cache", str(tmp_path / "cache"), "--metrics", str(metrics), "run", "TAB-SSYT", "M8-BETTI"]
    assert main(argv) == EXIT_PASS
    reports = json.loads(out.read_text())
    assert [r["claim_id"] for r in reports] == ["M8-BETTI", "TAB-SSYT"]
    assert all(r["status"] == "pass" for r in reports)
    assert reports[1]["citation"] == CLAIMS["TAB-SSYT"].citation
    assert "eightpoints_claims_total" in metrics.read_text()

def test_failing_claim_becomes_a_report(monkeypatch, stub_cache):
    """Test that an exception inside a claim yields a fail report."""
    def broken(ctx):
        raise ZeroDivisionError("division by zero")

    monkeypatch.setitem(CLAIMS, "TAB-SSYT", ClaimSpec("broken claim", broken))
    report = run_claim("TAB-SSYT", ClaimContext(RunConfig(jobs=1), stub_cache))
    assert report.status == FAIL
    assert report.observed == {"error": "ZeroDivisionError: division by zero"}
    assert report.citation == "broken claim"

def test_run_claims_sorts_reports(stub_cache):
    """Test that concurrently run claims come back sorted by id."""
    reports = run_claims(["M8-HILB", "M8-BETTI"], RunConfig(jobs=2), cache=stub_cache)
    assert [r.claim_id for r in reports] == ["M8-BETTI", "M8-HILB"]
    assert all(r.passed for r in reports)

def test_cache_show(tmp_path):
    """Test that cache show lists every artifact as missing in an empty cache."""
    out = tmp_path / "show.json"
    assert main(["--out", str(out), "--cache", str(tmp_path / "cache"), "cache", "show"]) == EXIT_PASS
    rows = json.loads(out.read_text())
    assert {row["name"]: row["status"] for row in rows} == {
        KEMPE_BINDING: "missing",
        CUBIC: "missing",
        QUINTIC: "missing",
    }

def test_cache_clean(tmp_path):
    """Test that cache clean removes the directory."""
    cache = tmp_path / "cache"
    cache.mkdir()
    (cache / "manifest.json").write_text("{}")
    assert main(["--cache", str(cache), "cache", "clean"]) == EXIT_PASS
    assert not cache.exists()
