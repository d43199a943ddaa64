import os
import logging
from typing import Tuple

from dotenv import load_dotenv
from sympy import isprime

from eightpoints.errors import ConfigurationError

load_dotenv()

logger = logging.getLogger(__name__)

# Reproducibility
MASTER_SEED = int(os.getenv("EIGHTPOINTS_SEED", "20240608"))

# Modular arithmetic: the two largest primes below 2**31
DEFAULT_PRIMES = "2147483647,2147483629"
PRIMES: Tuple[int, ...] = tuple(
    int(p) for p in os.getenv("EIGHTPOINTS_PRIMES", DEFAULT_PRIMES).split(",") if p.strip()
)

# Artifact cache
CACHE_DIR = os.getenv("EIGHTPOINTS_CACHE_DIR", ".eightpoints-cache")
ARTIFACT_KEY = os.getenv("EIGHTPOINTS_ARTIFACT_KEY", "")

# Sampling
COORD_BOUND = int(os.getenv("EIGHTPOINTS_COORD_BOUND", "20"))
REJECTION_BUDGET = int(os.getenv("EIGHTPOINTS_REJECTION_BUDGET", "1000"))

# Orchestration
JOBS = int(os.getenv("EIGHTPOINTS_JOBS", "4"))
METRICS_FILE = os.getenv("EIGHTPOINTS_METRICS_FILE", "")
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()


def validate_primes(primes: Tuple[int, ...]) -> Tuple[int, int]:
    """Check a prime pair for modular rank certification."""
    if len(primes) != 2 or primes[0] == primes[1]:
        logger.critical(f"Expected two distinct primes, got {primes}")
        raise ConfigurationError(f"Expected two distinct primes, got {primes}")
    for p in primes:
        # p**2 must fit in a signed 64-bit word for numpy elimination
        if p >= 2**31 or not isprime(p):
            logger.critical(f"{p} is not a prime below 2**31")
            raise ConfigurationError(f"{p} is not a prime below 2**31")
    return primes[0], primes[1]


def validate_config() -> None:
    """Validate environment variables at startup."""
    validate_primes(PRIMES)
    if COORD_BOUND < 1:
        logger.critical(f"EIGHTPOINTS_COORD_BOUND must be positive, got {COORD_BOUND}")
        raise ConfigurationError("EIGHTPOINTS_COORD_BOUND must be positive")
    if JOBS < 1:
        logger.critical(f"EIGHTPOINTS_JOBS must be at least 1, got {JOBS}")
        raise ConfigurationError("EIGHTPOINTS_JOBS must be at least 1")
    optional_vars = {
        "EIGHTPOINTS_SEED": str(MASTER_SEED),
        "EIGHTPOINTS_PRIMES": DEFAULT_PRIMES,
        "EIGHTPOINTS_CACHE_DIR": CACHE_DIR,
    }
    for var, default in optional_vars.items():
        if not os.getenv(var):
            logger.warning(f"{var} not set, using default: {default}")
    if not ARTIFACT_KEY:
        logger.info("EIGHTPOINTS_ARTIFACT_KEY not set, artifact manifests are checksummed but unsigned")
