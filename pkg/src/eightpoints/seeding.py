"""Named random substreams derived from a master seed."""

import hashlib

import numpy as np


def stream_key(name: str) -> int:
    """Stable 64-bit key for a stream name."""
    return int.from_bytes(hashlib.sha256(name.encode()).digest()[:8], "big")


def substream(master_seed: int, name: str) -> np.random.Generator:
    """Independent generator for one named consumer of randomness."""
    return np.random.default_rng(np.random.SeedSequence([master_seed, stream_key(name)]))


def derive_seed(master_seed: int, name: str) -> int:
    """A plain integer seed for APIs that take one (e.g. sample_configuration)."""
    return int(substream(master_seed, name).integers(0, 2**62))
