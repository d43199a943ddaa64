"""Command line: run claims, manage the artifact cache, list the registry.

Exit status: 0 when every claim passes, 1 when any fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import List, Optional, Sequence

from eightpoints import config
from eightpoints.cache import ArtifactCache
from eightpoints.cli.registry import CLAIMS, RunConfig
from eightpoints.cli.runner import run_claims
from eightpoints.errors import ConfigurationError, UnknownClaimError
from eightpoints.metrics import export_metrics
from eightpoints.reports import dumps_reports

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _primes(text: str):
    try:
        primes = tuple(int(p) for p in text.split(",") if p.strip())
        return config.validate_primes(primes)
    except (ValueError, ConfigurationError) as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eightpoints",
        description="Verify invariant-theoretic claims about eight points on the line and in space.",
    )
    parser.add_argument("--seed", type=int, default=config.MASTER_SEED, help=f"master seed (default {config.MASTER_SEED})")
    parser.add_argument("--prime", type=_primes, default=config.PRIMES, help="two primes p1,p2 for modular ranks")
    parser.add_argument("--trials", type=int, default=None, help="override per-claim sample counts")
    parser.add_argument("--out", default="-", help="report file, '-' for standard output (default)")
    parser.add_argument("--cache", default=config.CACHE_DIR, help=f"artifact directory (default {config.CACHE_DIR})")
    parser.add_argument("--jobs", type=int, default=config.JOBS, help=f"claims run concurrently (default {config.JOBS})")
    parser.add_argument("--metrics", default=config.METRICS_FILE, help="write Prometheus metrics to this textfile")
    parser.add_argument("--log-level", default=config.LOG_LEVEL, help=f"logging level (default {config.LOG_LEVEL})")
    parser.add_argument("--list", action="store_true", help="print the claim registry and exit")

    sub = parser.add_subparsers(dest="command")
    run = sub.add_parser("run", help="verify claims")
    run.add_argument("claims", nargs="*", default=["all"], help="claim ids, or 'all'")
    cache = sub.add_parser("cache", help="manage cached artifacts")
    cache.add_argument("action", choices=["build", "clean", "show"])
    sub.add_parser("list", help="print the claim registry")
    return parser


def run_config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        master_seed=args.seed,
        primes=tuple(args.prime),
        trials=args.trials,
        cache_dir=args.cache,
        output=args.out,
        jobs=args.jobs,
        metrics_file=args.metrics,
    )


def list_claims() -> str:
    lines = [f"{claim_id:<16} {spec.citation}" for claim_id, spec in CLAIMS.items()]
    return "\n".join(lines) + "\n"


def _write(text: str, path: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    logger.info(f"Reports written to {path}")


def cmd_run(claims: Sequence[str], run: RunConfig) -> int:
    try:
        reports = run_claims(claims, run)
    except UnknownClaimError as e:
        logger.error(str(e))
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    _write(dumps_reports(reports), run.output)
    if run.metrics_file:
        export_metrics(run.metrics_file)
    failed = [r.claim_id for r in reports if not r.passed]
    if failed:
        logger.warning(f"Failed claims: {', '.join(failed)}")
        return EXIT_FAIL
    return EXIT_PASS


def cmd_cache(action: str, run: RunConfig) -> int:
    cache = ArtifactCache(run.cache_dir, master_seed=run.master_seed)
    if action == "clean":
        cache.clean()
        return EXIT_PASS
    if action == "build":
        cache.build()
    _write(json.dumps(cache.show(), indent=2, sort_keys=True) + "\n", run.output)
    return EXIT_PASS


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=str(args.log_level).upper(), format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        config.validate_config()
    except ConfigurationError:
        return EXIT_USAGE

    if args.list or args.command == "list":
        sys.stdout.write(list_claims())
        return EXIT_PASS
    run = run_config_from_args(args)
    if args.command == "cache":
        return cmd_cache(args.action, run)
    claims = args.claims if args.command == "run" else ["all"]
    return cmd_run(claims, run)


if __name__ == "__main__":
    sys.exit(main())
