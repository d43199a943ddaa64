from eightpoints.cli.main import main
from eightpoints.cli.registry import CLAIMS, ClaimSpec, RunConfig, resolve_claims
from eightpoints.cli.runner import run_claim, run_claims

__all__ = ["main", "CLAIMS", "ClaimSpec", "RunConfig", "resolve_claims", "run_claim", "run_claims"]
