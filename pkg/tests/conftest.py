import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))

from eightpoints.cache import ArtifactCache
from eightpoints.m8.binding import bind_kempe_labels
from eightpoints.m8.cubic import build_cubic_explicit
from eightpoints.n8.basis import degree1_tableau_basis

TEST_SEED = 20240608
TEST_PRIMES = (2147483647, 2147483629)

@pytest.fixture(scope="session")
def kempe_basis():
    """The Kempe binding, searched once per test session."""
    return bind_kempe_labels()

@pytest.fixture(scope="session")
def cubic():
    """The skew cubic in normal form."""
    return build_cubic_explicit()

@pytest.fixture(scope="session")
def n8_basis():
    """The 14 semistandard degree-one tableaux of eight points in P^3."""
    return degree1_tableau_basis()

@pytest.fixture
def stub_builders():
    """Cheap builders that count how often they run."""
    calls = {}

    def make(name, text):
        def builder(master_seed):
            calls[name] = calls.get(name, 0) + 1
            return text
        builder.__name__ = f"_build_{name.split('.')[0]}"
        return builder

    builders = {
        "kempe_binding.json": make("kempe_binding.json", '{"stub": true}\n'),
        "cubic.poly": make("cubic.poly", "#variables\tx,y\n1\t2,1\n-3\t0,3\n"),
        "quintic.poly": make("quintic.poly", "#variables\tx,y\n1\t5,0\n"),
    }
    return builders, calls

@pytest.fixture
def cache_dir(tmp_path):
    """An empty directory for artifacts."""
    return str(tmp_path / "artifacts")

@pytest.fixture
def stub_cache(cache_dir, stub_builders):
    """An unsigned cache whose builders are cheap stubs."""
    builders, _ = stub_builders
    return ArtifactCache(cache_dir, key="", master_seed=TEST_SEED, builders=builders)
