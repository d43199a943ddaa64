import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eightpoints.errors import DimensionMismatchError, ZeroInvariantError
from eightpoints.symrep.group_action import compose
from eightpoints.tableaux.configuration import Configuration, evaluate_columns, evaluate_invariant, sample_configuration
from eightpoints.tableaux.straighten import first_violation, straighten, straighten_tableau
from eightpoints.tableaux.tableau import (
    Tableau,
    TableauSum,
    from_rows,
    inversion_parity,
    normalize,
    relabel,
    tableau_product,
)

permutations_of_8 = st.permutations(list(range(1, 9))).map(tuple)

def test_normalize_sorts_columns_with_sign():
    """Test that sorting a column contributes its sign and column order is free."""
    sign, t = normalize([(2, 1), (3, 4), (6, 5), (7, 8)], 8)
    assert sign == 1
    assert t.columns == ((1, 2), (3, 4), (5, 6), (7, 8))
    sign, _ = normalize([(2, 1), (3, 4), (5, 6), (7, 8)], 8)
    assert sign == -1

def test_repeated_entry_in_column_is_zero():
    """Test that a column with a repeated entry raises ZeroInvariantError."""
    with pytest.raises(ZeroInvariantError):
        normalize([(1, 1), (2, 3)], 3)
    assert TableauSum.from_raw([(1, 1), (2, 2)], 2).is_zero()

def test_content_must_be_balanced():
    """Test that every label must occur equally often."""
    with pytest.raises(DimensionMismatchError):
        Tableau(2, 4, ((1, 2), (1, 3)))
    with pytest.raises(DimensionMismatchError):
        Tableau(2, 4, ((3, 4), (1, 2)))

def test_from_rows_and_format():
    """Test building from rows and printing rows back."""
    sign, t = from_rows([(1, 3, 5, 7), (2, 4, 6, 8)], 8)
    assert sign == 1 and t.degree == 1
    assert t.format() == "1 3 5 7\n2 4 6 8"
    assert t.is_semistandard()

def test_product_concatenates_columns():
    """Test that the product of tableaux concatenates their columns."""
    _, s = normalize([(1, 2), (3, 4)], 4)
    _, t = normalize([(1, 3), (2, 4)], 4)
    product = tableau_product(s, t)
    assert product.degree == 2
    assert product.columns == ((1, 2), (1, 3), (2, 4), (3, 4))
    assert s * t == product

def test_tableau_sum_arithmetic():
    """Test that like terms combine and cancel."""
    _, t = normalize([(1, 2), (3, 4)], 4)
    s = TableauSum.of(t, 3) - TableauSum.of(t, 3)
    assert s.is_zero()
    assert TableauSum.of(t, 2).scale(3) == TableauSum.of(t, 6)

def test_first_violation():
    """Test detection of the leftmost row violation."""
    assert first_violation(((1, 2), (3, 4))) is None
    assert first_violation(((1, 4), (2, 3))) == (0, 1)

def test_plucker_relation_by_straightening():
    """Test the three-term relation [14][23] = [13][24] - [12][34]."""
    _, crossing = normalize([(1, 4), (2, 3)], 4)
    result = straighten_tableau(crossing)
    _, a = normalize([(1, 3), (2, 4)], 4)
    _, b = normalize([(1, 2), (3, 4)], 4)
    assert result == TableauSum({a: 1, b: -1})

def test_straightened_terms_are_semistandard():
    """Test that straightening only produces semistandard tableaux."""
    s = TableauSum.from_raw([(1, 5, 6, 8), (2, 3, 4, 7)], 8) + TableauSum.from_raw([(4, 5, 6, 8), (1, 2, 3, 7)], 8)
    for t, _ in straighten(s).items():
        assert t.is_semistandard()

def test_relabel_requires_matching_size():
    """Test that a permutation of the wrong size is rejected."""
    _, t = normalize([(1, 2), (3, 4)], 4)
    with pytest.raises(DimensionMismatchError):
        relabel(t, (1, 2, 3))

def test_inversion_parity():
    """Test permutation signs from inversion counts."""
    assert inversion_parity((1, 2, 3)) == 1
    assert inversion_parity((2, 1, 3)) == -1
    assert inversion_parity((3, 1, 2)) == 1

@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 3))
def test_straightening_preserves_values(seed, which):
    """Test that a tableau and its straightened form agree at a random configuration."""
    raw = [
        [(5, 2, 7, 1), (8, 3, 6, 4)],
        [(1, 2, 3, 8), (4, 5, 6, 7)],
        [(2, 4, 6, 8), (1, 3, 5, 7)],
        [(3, 4, 7, 8), (1, 2, 5, 6)],
    ][which]
    c = sample_configuration(4, 8, seed)
    s = TableauSum.from_raw(raw, 8)
    assert evaluate_invariant(straighten(s), c) == evaluate_columns(raw, c)

@settings(max_examples=25, deadline=None)
@given(permutations_of_8, st.integers(0, 10**6))
def test_relabelling_matches_configuration_relabelling(g, seed):
    """Test that relabelling a tableau by g equals relabelling the points by g."""
    _, t = normalize([(1, 2), (3, 5), (4, 8), (6, 7)], 8)
    c = sample_configuration(2, 8, seed)
    sign, image = relabel(t, g)
    assert sign * evaluate_invariant(image, c.relabel(g)) == evaluate_invariant(t, c)

@settings(max_examples=25, deadline=None)
@given(permutations_of_8, permutations_of_8)
def test_relabelling_is_an_action(g, h):
    """Test that relabelling by gh equals relabelling by h then by g."""
    s = TableauSum.from_raw([(1, 2, 3, 4), (5, 6, 7, 8)], 8)
    assert s.relabel(compose(g, h)) == s.relabel(h).relabel(g)

def test_configuration_rejects_zero_point():
    """Test that the zero tuple is not accepted as a point."""
    with pytest.raises(DimensionMismatchError):
        Configuration.of([(0, 0), (1, 2)])

def test_scaling_a_point_scales_the_invariant():
    """Test that a degree-d invariant scales by lambda^d when one point is scaled."""
    c = sample_configuration(2, 8, 11)
    _, t = normalize([(1, 2), (3, 4), (5, 6), (7, 8)], 8)
    assert evaluate_invariant(t, c.scaled(3, 5)) == 5 * evaluate_invariant(t, c)

def test_minors_table():
    """Test that the cached minors are the brackets of increasing subsets."""
    c = Configuration.of([(1, 0), (0, 1), (1, 1), (1, 2)])
    assert len(c.minors) == 6
    assert c.minors[(1, 2)] == 1
    assert c.minors[(3, 4)] == 1
    assert c.minors[(2, 3)] == -1
    assert c.bracket((2, 1)) == -1
