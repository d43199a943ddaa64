import pytest

from eightpoints.errors import InconsistentSystemError
from eightpoints.m8 import hilbert as m8_hilbert
from eightpoints.m8.hilbert import (
    BettiTable,
    betti_report,
    derive_betti_table,
    hilbert_report,
    m8_hilbert_function,
)
from eightpoints.m8.secant import (
    HESSIAN_DEGREE,
    factor_pattern,
    possible_factor_degrees,
    secant_slice_analysis,
    subset_sums,
    ternary_in_c,
)
from eightpoints.exactcore.polynomial import SparsePolynomial
from eightpoints.exactcore.univariate import UnivariatePolynomial
from eightpoints.tableaux.ssyt import count_ssyt

@pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
def test_hilbert_function_matches_tableau_counts(k):
    """Test the closed formula against semistandard tableau counts."""
    assert m8_hilbert_function(k) == count_ssyt(2, 8, k)

def test_hilbert_report():
    """Test numerator, degree 40, Gorenstein symmetry and a-invariant -2."""
    report = hilbert_report(check_through=8)
    assert report.passed, report.observed
    assert report.observed["numerator"] == [1, 8, 22, 8, 1]
    assert report.observed["degree"] == 40
    assert report.observed["degree_from_polynomial"] == 40

def test_degree_is_read_from_the_hilbert_polynomial(monkeypatch):
    """Test that a different leading coefficient changes the fifth difference of the Hilbert polynomial."""
    formula = m8_hilbert.m8_hilbert_function
    monkeypatch.setattr(m8_hilbert, "m8_hilbert_function", lambda k: formula(k) + k**5)
    report = hilbert_report(check_through=8)
    assert report.observed["degree_from_polynomial"] == 160
    assert not report.passed

def test_betti_table():
    """Test the derived Betti table of the 14 quadrics."""
    table = derive_betti_table()
    assert table.row(2)[2:7] == (175, 512, 700, 512, 175)
    assert table.get(1, 1) == 14 and table.get(7, 3) == 14
    assert table.get(0, 0) == 1 and table.get(8, 4) == 1
    assert table.get(2, 1) == 0
    assert table.is_symmetric()
    assert "175" in table.format()
    assert betti_report().passed

def test_betti_table_rejects_inconsistent_hilbert_function():
    """Test that a wrong Hilbert function is refused."""
    with pytest.raises(InconsistentSystemError):
        derive_betti_table(lambda k: m8_hilbert_function(k) + (1 if k == 5 else 0))

def test_betti_table_json():
    """Test that rows serialise keyed by row index."""
    table = BettiTable({(0, 0): 1, (1, 1): 3})
    assert table.to_json()["1"][1] == 3
    assert table.total(1) == 3

def test_subset_sums_and_factor_patterns():
    """Test factor-degree bookkeeping on a reducible polynomial."""
    assert subset_sums([1, 2]) == {0, 1, 2, 3}
    # (x^2 + 1)(x^3 - 2x + 7): every pattern is a refinement of (2, 3)
    s = UnivariatePolynomial([1, 0, 1]) * UnivariatePolynomial([7, -2, 0, 1])
    patterns, degrees = possible_factor_degrees(s, minimum_primes=3, maximum_primes=6)
    assert 2 in degrees and 3 in degrees
    assert all(sum(p) == 5 for p in patterns.values())

def test_irreducible_polynomial_excludes_every_proper_degree():
    """Test that x^5 - x - 1, irreducible over Q, leaves no proper factor degree."""
    s = UnivariatePolynomial([-1, -1, 0, 0, 0, 1])
    _, degrees = possible_factor_degrees(s)
    assert degrees == []

def test_factor_pattern_skips_unsuitable_primes():
    """Test that a prime dividing the leading coefficient is skipped."""
    assert factor_pattern(UnivariatePolynomial([1, 1, 1009]), 1009) is None

def test_ternary_in_c():
    """Test specialising a ternary form to b = 1 and a fixed a."""
    a, b, c = SparsePolynomial.generators(("a", "b", "c"))
    f = a * a * c + b * c * c + 3 * a * b * b
    assert ternary_in_c(f, 2) == UnivariatePolynomial([6, 4, 1])

@pytest.mark.slow
def test_secant_variety_has_degree_21(cubic):
    """Test that the Hessian meets a plane section of the cubic in a doubled degree-21 curve."""
    report = secant_slice_analysis(cubic, planes=1)
    conclusions = report.observed["conclusions"]
    assert conclusions["resultant_degree"] == 3 * HESSIAN_DEGREE
    assert conclusions["squarefree_degree"] == 21
    assert conclusions["square_times_constant"]
    assert report.passed, report.observed
