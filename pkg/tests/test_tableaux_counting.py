from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eightpoints.errors import DegenerateSampleError, DimensionMismatchError
from eightpoints.exactcore.linalg import ModularMatrix
from eightpoints.tableaux.configuration import evaluate_invariant, is_generic, sample_configuration, sample_configurations
from eightpoints.tableaux.evaluation import EvaluationMatrix, products_of_degree
from eightpoints.tableaux.matchings import (
    Matching,
    expand_in_matching_basis,
    matching_to_tableau,
    noncrossing_matchings,
    perfect_matchings,
    uncross,
)
from eightpoints.tableaux.ssyt import count_ssyt, enumerate_ssyt, iter_ssyt
from eightpoints.tableaux.tableau import TableauSum

PRIMES = (2147483647, 2147483629)

@pytest.mark.parametrize(
    "m, d, expected",
    [(2, 1, 14), (2, 2, 91), (2, 3, 364), (4, 1, 14), (4, 2, 126), (4, 3, 790)],
)
def test_ssyt_counts(m, d, expected):
    """Test the dimensions of R_d for eight points on the line and in space."""
    assert count_ssyt(m, 8, d) == expected

def test_ssyt_count_degree_four_in_space():
    """Test the 3731 semistandard 4 x 8 tableaux."""
    assert count_ssyt(4, 8, 4) == 3731

def test_enumeration_agrees_with_count():
    """Test that enumeration yields exactly the counted, distinct, semistandard tableaux."""
    count, tableaux = enumerate_ssyt(4, 8, 2)
    tableaux = list(tableaux)
    assert len(tableaux) == count == 126
    assert len(set(tableaux)) == count
    assert all(t.is_semistandard() for t in tableaux)
    assert tableaux == sorted(tableaux, key=lambda t: t.columns)

def test_ssyt_rejects_impossible_shapes():
    """Test that m must divide d * n."""
    with pytest.raises(DimensionMismatchError):
        count_ssyt(3, 8, 1)
    assert list(iter_ssyt(2, 8, 0))[0].columns == ()

def test_matching_counts():
    """Test 105 perfect and 14 non-crossing matchings of eight points."""
    assert len(perfect_matchings(8)) == 105
    assert len(noncrossing_matchings(8)) == 14

def test_matching_parse_and_orientation():
    """Test parsing and the sign of flipped edges."""
    g = Matching.parse("1-2 3-4 5-6 7-8")
    assert g.is_noncrossing() and str(g) == "1-2 3-4 5-6 7-8"
    sign, h = Matching.from_edges([(2, 1), (4, 3), (5, 6), (7, 8)])
    assert sign == 1 and h == g
    sign, _ = Matching.from_edges([(2, 1), (3, 4), (5, 6), (7, 8)])
    assert sign == -1
    with pytest.raises(DimensionMismatchError):
        Matching.parse("1-2 3-4 5-6")

def test_uncrossing_single_crossing():
    """Test the three-term relation on a matching with one crossing."""
    g = Matching.parse("1-3 2-4 5-6 7-8")
    expansion = uncross(g)
    assert expansion == {Matching.parse("1-2 3-4 5-6 7-8"): 1, Matching.parse("1-4 2-3 5-6 7-8"): 1}

@settings(max_examples=30, deadline=None)
@given(st.sampled_from(perfect_matchings(8)), st.integers(0, 10**6))
def test_uncrossing_preserves_values(g, seed):
    """Test that a matching and its non-crossing expansion agree at a configuration."""
    c = sample_configuration(2, 8, seed)
    basis = noncrossing_matchings(8)
    vector = expand_in_matching_basis(TableauSum.from_raw(list(g.edges), 8), basis)
    total = 0
    for coeff, h in zip(vector, basis):
        sign, t = matching_to_tableau(h)
        total += coeff * sign * evaluate_invariant(t, c)
    sign, t = matching_to_tableau(g)
    assert total == sign * evaluate_invariant(t, c)

def test_sampling_is_deterministic_and_generic():
    """Test that a seed fixes the configuration and every four points are independent."""
    a = sample_configuration(4, 8, (5, 1))
    b = sample_configuration(4, 8, (5, 1))
    assert a == b
    assert is_generic([list(p) for p in a.points], 4)
    batch = sample_configurations(2, 8, 3, 9)
    assert len(batch) == 3 and batch[0] == sample_configuration(2, 8, (9, 0))

def test_sampling_budget_exhaustion():
    """Test that an impossible request exhausts the rejection budget."""
    with pytest.raises(DegenerateSampleError):
        sample_configuration(4, 8, 1, bound=0, budget=3)

def test_evaluation_matrix_rank_of_line_quadrics():
    """Test that Sym^2 of the 14 matchings has rank 91 = dim R_2 of M8."""
    basis = noncrossing_matchings(8)
    tableaux = [matching_to_tableau(g) for g in basis]
    configurations = [sample_configuration(2, 8, (3, i)) for i in range(111)]
    values = [[s * evaluate_invariant(t, c) for c in configurations] for s, t in tableaux]
    matrix = EvaluationMatrix(values, products_of_degree(range(14), 2))
    assert matrix.nrows == 105 and matrix.ncols == 111
    certificate = matrix.rank(PRIMES)
    assert certificate.rank == 91
    assert certificate.agreed

def test_evaluation_matrix_modular_matches_exact():
    """Test that modular products reduce the exact products."""
    matrix = EvaluationMatrix([[2, -3], [5, 7]], [(0,), (0, 1), (1, 1)])
    exact = matrix.exact()
    assert exact.rows == ((2, -3), (10, -21), (25, 49))
    assert matrix.modular(11).data.tolist() == [[2, 8], [10, 1], [3, 5]]

def test_modular_reduction_inverts_denominators():
    """Test that a rational value reduces through the inverse of its denominator."""
    matrix = EvaluationMatrix([[Fraction(1, 2), 3]], [(0,)])
    assert matrix.modular(7).data.tolist() == [[4, 3]]
    assert ModularMatrix.from_rows([[Fraction(1, 2), Fraction(-2, 3)]], 7).data.tolist() == [[4, 4]]

def test_evaluation_matrix_rejects_unknown_generator():
    """Test that a product naming a missing generator is rejected."""
    with pytest.raises(DimensionMismatchError):
        EvaluationMatrix([[1, 2]], [(0, 1)])
