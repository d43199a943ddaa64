import inspect

import pytest

from eightpoints.n8.generation import (
    GENERATOR_PRODUCTS,
    graded_products,
    generator_values,
    generator_weights,
    n8_hilbert_report,
    nprime_hilbert_report,
    nprime_numerator,
    verify_generation_degrees_1_2,
)
from eightpoints.n8.secant_identity import (
    binomial_on_secant,
    segre_side,
    verify_secant_identity,
)
from eightpoints.exactcore.linalg import RankCertificate
from eightpoints.symrep.group_action import identity
from eightpoints.tableaux.evaluation import EvaluationMatrix
from eightpoints.tableaux.configuration import sample_configuration

PRIMES = (2147483647, 2147483629)

def test_generator_weights():
    """Test 14 generators of degree one and 21 of degree two."""
    weights = generator_weights()
    assert weights.count(1) == 14
    assert weights.count(2) == 21

@pytest.mark.parametrize("degree", [2, 3, 4])
def test_graded_product_counts(degree):
    """Test the number of generator products in each degree."""
    assert len(graded_products(generator_weights(), degree)) == GENERATOR_PRODUCTS[degree]

def test_graded_products_have_the_right_weight():
    """Test that every product has total weight equal to its degree."""
    weights = (1, 1, 2)
    assert graded_products(weights, 2) == [(2,), (0, 0), (0, 1), (1, 1)]

def test_generator_values_shape():
    """Test that generator values come as one row per generator."""
    configurations = [sample_configuration(4, 8, (1, i)) for i in range(3)]
    rows = generator_values(configurations)
    assert len(rows) == 35
    assert all(len(r) == 3 for r in rows)

def test_generation_in_degree_three():
    """Test that products of degree-one and degree-two generators span R_3."""
    report = verify_generation_degrees_1_2((3,), primes=PRIMES)
    assert report.observed["products_3"] == 854
    assert report.observed["rank_3"] == 790
    assert report.observed["degree1_only_rank_2"] == 105
    assert report.passed, report.observed

@pytest.mark.slow
def test_generation_in_degree_four():
    """Test that the 4816 generator products span the 3731-dimensional R_4."""
    report = verify_generation_degrees_1_2((4,), primes=PRIMES)
    assert report.observed["rank_4"] == 3731

def test_n8_hilbert_series():
    """Test the N8 numerator, degree 112 and a-invariant -4."""
    report = n8_hilbert_report(max_degree=6, check_through=6)
    assert report.passed, report.observed
    assert report.observed["degree"] == 112

def test_nprime_hilbert_function_through_degree_three():
    """Test the ranks 14, 105 and 560 of Sym^k R_1 on N'8."""
    report = nprime_hilbert_report(max_degree=3, primes=PRIMES)
    assert report.observed["ranks"] == {"1": 14, "2": 105, "3": 560}
    assert report.observed["relations"] == {"1": 0, "2": 0, "3": 0}
    assert report.observed["numerator"] == [1, 4, 10, 20, 21]
    assert report.observed["degree"] == 56
    assert report.passed, report.observed

@pytest.mark.slow
def test_nprime_has_fourteen_quartic_relations():
    """Test rank 2366 in degree four, leaving 14 quartic relations."""
    report = nprime_hilbert_report(max_degree=4, primes=PRIMES)
    assert report.observed["ranks"]["4"] == 2366
    assert report.observed["relations"]["4"] == 14

def test_secant_identity_single_point():
    """Test the secant identity at one hand-picked point."""
    p = [0, 1, 2, 3, 5, 7, 11, 13]
    q = [4, -1, 6, 0, -2, 9, 1, 8]
    for t in (1, -3, 7):
        assert binomial_on_secant(p, q, t, identity(8)) == segre_side(p, q, t, identity(8))
    assert binomial_on_secant(p, q, 0, identity(8)) == 0

def test_secant_identity_report():
    """Test the randomized secant identity with relabellings and the p <-> q symmetry."""
    report = verify_secant_identity(trials=15, translates=2, swap_trials=5)
    assert report.observed["mismatches"] == 0
    assert report.observed["checks"] == 45
    assert report.passed, report.observed

def test_nprime_numerator_from_ranks():
    """Test the numerator 1 + 4t + 10t^2 + 20t^3 + 21t^4 from the Hilbert values of N'8."""
    assert nprime_numerator({"1": 14, "2": 105, "3": 560, "4": 2366}) == [1, 4, 10, 20, 21]
    assert nprime_numerator({"1": 14}) == [1, 4, 10, 20, 21]

def test_nprime_degree_follows_the_measured_ranks(monkeypatch):
    """Test that a rank one short in degree one moves the degree away from 56."""
    monkeypatch.setattr(EvaluationMatrix, "rank", lambda self, primes, exact_fallback=True: RankCertificate(13))
    report = nprime_hilbert_report(max_degree=1, primes=PRIMES)
    assert report.observed["ranks"] == {"1": 13}
    assert report.observed["degree"] == 140
    assert not report.passed

def test_generation_checks_degrees_three_and_four_by_default():
    """Test that the default degrees cover both k = 3 and k = 4."""
    default = inspect.signature(verify_generation_degrees_1_2).parameters["degrees"].default
    assert tuple(default) == (3, 4)
