"""Run claims concurrently and collect their reports."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

from eightpoints.cache import ArtifactCache
from eightpoints.cli.registry import CLAIMS, ClaimContext, RunConfig, required_artifacts, resolve_claims
from eightpoints.metrics import claim_runtime_seconds, claims_total, last_run_passed
from eightpoints.reports import FAIL, VerificationReport, make_report

logger = logging.getLogger(__name__)


def run_claim(claim_id: str, ctx: ClaimContext) -> VerificationReport:
    """Run one claim; an exception becomes a fail report instead of escaping."""
    spec = CLAIMS[claim_id]
    start = time.perf_counter()
    try:
        report = spec.runner(ctx)
    except Exception as e:
        logger.error(f"Claim {claim_id} raised: {e}", exc_info=True)
        report = make_report(claim_id, "no error", {"error": f"{type(e).__name__}: {e}"})
        report.status = FAIL
    elapsed = time.perf_counter() - start
    report.citation = spec.citation
    report.runtime_ms = int(elapsed * 1000)
    prefixes = tuple(spec.needs) + ("artifact manifest",)
    if spec.needs:
        report.warnings.extend(w for w in ctx.cache.warnings if w.startswith(prefixes) and w not in report.warnings)
    claims_total.labels(claim=claim_id, status=report.status).inc()
    claim_runtime_seconds.labels(claim=claim_id).observe(elapsed)
    logger.info(f"Claim {claim_id}: {report.status} in {report.runtime_ms} ms")
    return report


def run_claims(names: Sequence[str], run: RunConfig, cache: Optional[ArtifactCache] = None) -> List[VerificationReport]:
    """Materialise the artifacts the claims need, then run the claims on a thread pool."""
    claims = resolve_claims(names)
    cache = cache or ArtifactCache(run.cache_dir, master_seed=run.master_seed)
    for artifact in required_artifacts(claims):
        try:
            cache.get_or_build(artifact)
        except Exception as e:
            # claims needing it will fail on their own attempt
            logger.error(f"Could not build artifact {artifact}: {e}", exc_info=True)
    ctx = ClaimContext(run=run, cache=cache)
    logger.info(f"Running {len(claims)} claims with {run.jobs} workers")
    with ThreadPoolExecutor(max_workers=run.jobs) as pool:
        reports = list(pool.map(lambda c: run_claim(c, ctx), claims))
    reports.sort(key=lambda r: r.claim_id)
    last_run_passed.set(1 if all(r.passed for r in reports) else 0)
    return reports
