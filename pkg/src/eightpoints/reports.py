"""Verification reports: one record per checked claim."""

from __future__ import annotations

import json
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


@dataclass
class VerificationReport:
    claim_id: str
    status: str
    expected: Any
    observed: Any
    citation: str = ""
    seed: int = 0
    primes: List[int] = field(default_factory=list)
    runtime_ms: int = 0
    warnings: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> Dict[str, Any]:
        return {
            "claim_id": self.claim_id,
            "status": self.status,
            "expected": to_jsonable(self.expected),
            "observed": to_jsonable(self.observed),
            "citation": self.citation,
            "seed": self.seed,
            "primes": list(self.primes),
            "runtime_ms": self.runtime_ms,
            "warnings": list(self.warnings),
        }


def make_report(
    claim_id: str,
    expected: Any,
    observed: Any,
    *,
    seed: int = 0,
    primes: Sequence[int] = (),
    citation: str = "",
    warnings: Sequence[str] = (),
) -> VerificationReport:
    """Build a report whose status is pass iff expected equals observed."""
    status = PASS if to_jsonable(expected) == to_jsonable(observed) else FAIL
    return VerificationReport(
        claim_id=claim_id,
        status=status,
        expected=expected,
        observed=observed,
        citation=citation,
        seed=seed,
        primes=list(primes),
        warnings=list(warnings),
    )


def to_jsonable(value: Any) -> Any:
    """Convert tuples, Fractions and numpy scalars to plain JSON values."""
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if hasattr(value, "item"):
        return value.item()
    return value


def dumps_reports(reports: Sequence[VerificationReport], include_runtime: bool = True) -> str:
    """Serialize reports as a JSON array sorted by claim id."""
    rows = []
    for report in sorted(reports, key=lambda r: r.claim_id):
        row = report.to_dict()
        if not include_runtime:
            row.pop("runtime_ms")
        rows.append(row)
    return json.dumps(rows, indent=2, sort_keys=True, ensure_ascii=False) + "\n"

