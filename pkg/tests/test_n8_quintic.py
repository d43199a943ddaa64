import pytest

from eightpoints.errors import DegenerateSampleError
from eightpoints.n8.quintic import (
    SKEW_DIMENSION,
    construct_skew_quintic,
    quintic_report,
    skew_check,
    skew_quintic_span,
    verify_quintic_singular_on_nprime,
)

@pytest.fixture(scope="module")
def construction():
    """The skew quintic built from the default seed."""
    return construct_skew_quintic()

@pytest.mark.slow
def test_span_budget_exhaustion(n8_basis):
    """Test that a seed budget too small to reach the full skew span raises."""
    with pytest.raises(DegenerateSampleError):
        skew_quintic_span(n8_basis, seed=1, budget=SKEW_DIMENSION - 1)

@pytest.mark.slow
def test_quintic_is_unique_and_skew(construction):
    """Test that the evaluation kernel is one-dimensional and the quintic is skew."""
    assert construction.kernel_dimension == 1
    assert len(construction.skew_span) == SKEW_DIMENSION
    assert construction.quintic.is_homogeneous(5)
    assert construction.quintic.content() == 1
    assert skew_check(construction.quintic) == {"transposition": True, "rotation": True}
    assert construction.warnings == []

@pytest.mark.slow
def test_quintic_report(construction):
    """Test that the quintic claim passes, with sign multiplicities 4 and 3."""
    report = quintic_report(construction)
    assert report.passed, report.observed
    assert report.observed["sign_in_sym5_r1"] == 4
    assert report.observed["sign_in_r5_n8"] == 3

@pytest.mark.slow
def test_nprime_is_in_the_singular_locus(construction):
    """Test that every partial of the quintic vanishes on N'8."""
    report = verify_quintic_singular_on_nprime(construction.quintic, trials=5)
    assert report.observed["zeros"] == 70
    assert report.passed, report.observed

@pytest.mark.slow
@pytest.mark.parametrize("seed", [1, 2, 3])
def test_quintic_does_not_depend_on_the_seed(construction, seed):
    """Test that other seeds produce the same normalised quintic."""
    assert construct_skew_quintic(seed=seed).quintic == construction.quintic
