import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eightpoints.exactcore.series import (
    a_invariant,
    expand_hilbert_series,
    finite_difference,
    is_palindromic,
    one_minus_t_power,
    polynomial_ring_dimension,
    series_numerator,
)

def test_one_minus_t_power():
    """Test the binomial coefficients of (1 - t)^3."""
    assert one_minus_t_power(3) == [1, -3, 3, -1]

def test_polynomial_ring_has_trivial_numerator():
    """Test that a polynomial ring in r variables has numerator 1."""
    values = [polynomial_ring_dimension(4, k) for k in range(8)]
    assert series_numerator(values, 4) == [1]
    assert polynomial_ring_dimension(4, -1) == 0

def test_m8_numerator_from_counts():
    """Test the numerator 1 + 8t + 22t^2 + 8t^3 + t^4 from the first Hilbert values of M8."""
    counts = [1, 14, 91, 364, 1085]
    numerator = series_numerator(counts, 6)
    assert numerator == [1, 8, 22, 8, 1]
    assert is_palindromic(numerator)
    assert a_invariant(numerator, 6) == -2
    assert expand_hilbert_series(numerator, 6, 5) == counts

def test_n8_series_expansion():
    """Test that the N8 numerator expands to the tableau counts."""
    expanded = expand_hilbert_series([1, 4, 31, 40, 31, 4, 1], 10, 7)
    assert expanded == [1, 14, 126, 790, 3731, 14196, 45724]
    assert a_invariant([1, 4, 31, 40, 31, 4, 1], 10) == -4

def test_nprime_series_expansion():
    """Test the Hilbert function 1, 14, 105, 560, 2366 of N'8."""
    assert expand_hilbert_series([1, 4, 10, 20, 21], 10, 5) == [1, 14, 105, 560, 2366]
    assert sum([1, 4, 10, 20, 21]) == 56

def test_finite_difference_of_ring_dimensions():
    """Test that the second difference of dim of forms in three variables is 1."""
    values = [polynomial_ring_dimension(3, k) for k in range(5, 8)]
    assert finite_difference(values, 2) == 1
    assert finite_difference([0, 1, 8, 27], 3) == 6
    with pytest.raises(ValueError):
        finite_difference(values, 3)

@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=1, max_size=6).filter(lambda h: h[-1] != 0), st.integers(1, 6))
def test_numerator_round_trip(numerator, r):
    """Test that expanding a series and reading back its numerator is the identity."""
    values = expand_hilbert_series(numerator, r, len(numerator) + r + 2)
    assert series_numerator(values, r) == numerator
