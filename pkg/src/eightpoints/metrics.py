import logging

from prometheus_client import CollectorRegistry, Counter, Gauge, Histogram, write_to_textfile

logger = logging.getLogger(__name__)

METRICS_PREFIX = "eightpoints_"

registry = CollectorRegistry()

claims_total = Counter(
    f"{METRICS_PREFIX}claims_total", "Claim verifications finished", ["claim", "status"], registry=registry
)
claim_runtime_seconds = Histogram(
    f"{METRICS_PREFIX}claim_runtime_seconds",
    "Wall time per claim verification",
    ["claim"],
    buckets=[0.1, 1, 5, 30, 60, 300, 900, 1800],
    registry=registry,
)
artifact_rebuilds_total = Counter(
    f"{METRICS_PREFIX}artifact_rebuilds_total", "Artifacts rebuilt after a miss or checksum mismatch", ["artifact"],
    registry=registry,
)
rank_computations_total = Counter(
    f"{METRICS_PREFIX}rank_computations_total", "Rank computations by kind", ["kind"], registry=registry
)
last_run_passed = Gauge(f"{METRICS_PREFIX}last_run_passed", "1 if every claim of the last run passed", registry=registry)


def export_metrics(path: str) -> None:
    """Write the registry for the node-exporter textfile collector."""
    try:
        write_to_textfile(path, registry)
        logger.info(f"Metrics written to {path}")
    except OSError as e:
        logger.error(f"Failed to write metrics to {path}: {e}", exc_info=True)
