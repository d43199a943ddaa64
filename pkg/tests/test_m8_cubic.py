import pytest

from eightpoints.exactcore.polynomial import SparsePolynomial
from eightpoints.m8.action import action_generators
from eightpoints.m8 import cubic as cubic_module
from eightpoints.m8.cubic import (
    build_cubic_skew_average,
    cubic_average_report,
    cubic_identities,
    cubic_skew_report,
    is_skew,
    proportionality,
    skew_defect,
)
from eightpoints.m8.kempe import KEMPE_NAMES, kempe_coordinates
from eightpoints.m8.syzygies import (
    linear_syzygy_rows,
    verify_kempe_generation,
    verify_m8_in_singular_locus,
    verify_no_linear_syzygies,
)
from eightpoints.tableaux.configuration import sample_configuration

PRIMES = (2147483647, 2147483629)

def test_cubic_normal_form(cubic, kempe_basis):
    """Test the term count, the binomial partial and Euler's identity."""
    facts = cubic_identities(cubic, kempe_basis)
    assert facts == {
        "terms": 28,
        "dC_dY3_is_binomial": True,
        "skew_under_transposition": True,
        "skew_under_rotation": True,
        "euler_identity": True,
    }
    assert cubic.is_homogeneous(3)
    assert cubic.coefficient_of("X1", "X1", "X2") == 1
    assert cubic.coefficient_of("Z1", "Z2", "Z3") == -1

def test_skew_report_passes(cubic, kempe_basis):
    """Test that the cubic skewness claim passes."""
    report = cubic_skew_report(kempe_basis, cubic)
    assert report.passed, report.observed

def test_non_skew_cubic_is_detected(kempe_basis):
    """Test that a single monomial is not skew."""
    monomial = SparsePolynomial.from_monomial_string(KEMPE_NAMES, ("X1", "X2", "Z1"))
    transposition, rotation = action_generators(kempe_basis)
    assert not is_skew(monomial, (transposition, rotation))
    assert not skew_defect(monomial, rotation).is_zero()

def test_skew_average_recovers_the_cubic(cubic, kempe_basis):
    """Test that skew-averaging a cubic monomial over S_8 gives a nonzero multiple of the cubic."""
    averaged, scalar = build_cubic_skew_average(kempe_basis)
    assert not averaged.is_zero()
    assert scalar != 0
    assert averaged == cubic.scale(scalar)
    assert cubic_average_report(kempe_basis).passed

def test_average_report_reads_the_scalar_independently(cubic, kempe_basis):
    """Test that the reported scalar agrees with the X1^2 X2 coefficient ratio."""
    report = cubic_average_report(kempe_basis)
    assert report.passed, report.observed
    assert report.observed["scalar"] == report.expected["scalar"] != "0"

def test_average_report_rejects_a_wrong_scalar(cubic, kempe_basis, monkeypatch):
    """Test that a scalar disagreeing with the averaged polynomial fails the claim."""
    monkeypatch.setattr(cubic_module, "build_cubic_skew_average", lambda basis: (cubic.scale(3), 2))
    report = cubic_average_report(kempe_basis)
    assert report.observed["scalar"] == "2"
    assert report.expected["scalar"] == "3"
    assert not report.passed

def test_proportionality():
    """Test the scalar relating proportional polynomials, and 0 otherwise."""
    x, y = SparsePolynomial.generators(("x", "y"))
    assert proportionality(x.scale(-6) + y.scale(4), x.scale(3) - y.scale(2)) == -2
    assert proportionality(x + y, x - y) == 0

def test_cubic_vanishes_with_its_partials_on_m8(cubic, kempe_basis):
    """Test that the cubic and every partial vanish at Kempe points."""
    report = verify_m8_in_singular_locus(kempe_basis, cubic, trials=5)
    assert report.passed, report.observed
    point = kempe_coordinates(sample_configuration(2, 8, 17), kempe_basis)
    assert cubic.evaluate(point) == 0

def test_partials_have_no_linear_syzygies(cubic):
    """Test that the 196 products x_i dC/dx_j are independent."""
    assert len(linear_syzygy_rows(cubic)) == 196
    report = verify_no_linear_syzygies(cubic, PRIMES)
    assert report.passed, report.observed
    assert report.observed["partials_rank"] == 14

def test_kempe_monomials_span_degree_two(kempe_basis):
    """Test that quadratic monomials in the Kempe coordinates span R_2."""
    report = verify_kempe_generation(kempe_basis, degrees=(2,), primes=PRIMES)
    assert report.observed == {"rank_2": 91}
    assert report.passed

@pytest.mark.slow
def test_kempe_monomials_span_degree_three(kempe_basis):
    """Test that cubic monomials in the Kempe coordinates span R_3."""
    report = verify_kempe_generation(kempe_basis, degrees=(3,), primes=PRIMES)
    assert report.observed == {"rank_3": 364}
