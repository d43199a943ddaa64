import json
from fractions import Fraction

import numpy as np
import pytest

from eightpoints import config
from eightpoints.errors import ConfigurationError
from eightpoints.metrics import claims_total, export_metrics
from eightpoints.reports import FAIL, PASS, VerificationReport, dumps_reports, make_report, to_jsonable
from eightpoints.seeding import derive_seed, stream_key, substream

def test_default_primes_are_valid():
    """Test that the default prime pair passes validation."""
    assert config.validate_primes(config.PRIMES) == (2147483647, 2147483629)

@pytest.mark.parametrize(
    "primes",
    [(2147483647,), (101, 101), (101, 100), (4294967311, 101), (101, 103, 107)],
)
def test_invalid_primes(primes):
    """Test that bad prime pairs raise a configuration error."""
    with pytest.raises(ConfigurationError):
        config.validate_primes(primes)

@pytest.mark.parametrize("composite", [1, 9, 2147483645, 2147483643])
def test_composite_modulus_is_rejected(composite):
    """Test that a composite below 2**31 is refused next to a valid prime."""
    with pytest.raises(ConfigurationError):
        config.validate_primes((2147483647, composite))

def test_small_primes_are_accepted():
    """Test that any two distinct word-sized primes are a valid pair."""
    assert config.validate_primes((97, 2)) == (97, 2)

def test_make_report_status():
    """Test pass on equal JSON forms and fail otherwise."""
    assert make_report("X", {"rank": 14}, {"rank": 14}).status == PASS
    assert make_report("X", (1, 2), [1, 2]).passed
    failed = make_report("X", {"rank": 14}, {"rank": 13}, seed=7, primes=(5, 7), warnings=["low rank"])
    assert failed.status == FAIL
    assert failed.to_dict()["primes"] == [5, 7]
    assert failed.to_dict()["warnings"] == ["low rank"]

def test_to_jsonable():
    """Test conversion of fractions, tuples, integer keys and numpy scalars."""
    value = {1: (Fraction(3, 4), Fraction(6, 3)), "n": np.int64(5), "ok": True}
    assert to_jsonable(value) == {"1": ["3/4", 2], "n": 5, "ok": True}

def test_dumps_reports_sorted_by_claim():
    """Test that serialised reports are ordered by claim id and can drop runtimes."""
    reports = [
        VerificationReport("N8-HILB", PASS, 1, 1, runtime_ms=12),
        VerificationReport("M8-HILB", PASS, 1, 1, runtime_ms=30),
    ]
    rows = json.loads(dumps_reports(reports))
    assert [r["claim_id"] for r in rows] == ["M8-HILB", "N8-HILB"]
    assert rows[0]["runtime_ms"] == 30
    assert "runtime_ms" not in json.loads(dumps_reports(reports, include_runtime=False))[0]

def test_substreams_are_reproducible():
    """Test that a named substream depends only on the master seed and the name."""
    a = substream(1, "m8.kempe").integers(0, 1000, size=5)
    b = substream(1, "m8.kempe").integers(0, 1000, size=5)
    assert list(a) == list(b)
    assert derive_seed(1, "n8.quintic") == derive_seed(1, "n8.quintic")
    assert derive_seed(1, "n8.quintic") != derive_seed(2, "n8.quintic")
    assert stream_key("a") != stream_key("b")

def test_export_metrics(tmp_path):
    """Test that metrics are written in the Prometheus text format."""
    claims_total.labels(claim="TEST", status=PASS).inc()
    path = tmp_path / "eightpoints.prom"
    export_metrics(str(path))
    assert 'eightpoints_claims_total{claim="TEST",status="pass"}' in path.read_text()

def test_export_metrics_unwritable_path(tmp_path):
    """Test that an unwritable metrics path is logged, not raised."""
    export_metrics(str(tmp_path / "missing" / "eightpoints.prom"))
