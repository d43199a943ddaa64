from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eightpoints.errors import DimensionMismatchError
from eightpoints.symrep.characters import (
    character_table,
    decompose,
    exterior_square_character,
    inner_product,
    irreducible,
    multiplicity,
    sign_character,
    symmetric_power_character,
    trivial_character,
)
from eightpoints.symrep.checks import (
    EXPECTED_DECOMPOSITIONS,
    EXPECTED_MULTIPLICITIES,
    decomposition_facts,
    dimensions,
    multiplicity_facts,
    n8_final_check,
    n8_sign_multiplicities,
)
from eightpoints.symrep.partitions import (
    class_size,
    conjugate,
    format_partition,
    parse_partition,
    partitions,
    power_class,
    z_value,
)
from eightpoints.symrep.plethysm import invariant_ring_character

def test_partition_counts_and_class_sizes():
    """Test that S_8 has 22 classes whose sizes add to 8!."""
    assert len(partitions(8)) == 22
    assert sum(class_size(mu) for mu in partitions(8)) == factorial(8)
    assert z_value((2, 2, 1)) == 8

def test_partition_helpers():
    """Test formatting, parsing, conjugation and powers of cycle types."""
    assert format_partition((4, 4)) == "4+4"
    assert parse_partition("2+4+2") == (4, 2, 2)
    assert conjugate((4, 4)) == (2, 2, 2, 2)
    assert power_class((4, 2), 2) == (2, 2, 1, 1)

def test_column_orthogonality():
    """Test that the sum of squared degrees is the group order."""
    table = character_table(8)
    assert sum(chi.dimension**2 for chi in table.values()) == factorial(8)

def test_irreducible_dimensions():
    """Test the hook-length dimensions of the shapes that matter here."""
    assert irreducible((4, 4)).dimension == 14
    assert irreducible((2, 2, 2, 2)).dimension == 14
    assert irreducible((3, 1, 1, 1, 1, 1)).dimension == 21
    assert sign_character(8).dimension == 1

def test_character_table_size_guard():
    """Test that oversized character tables are refused."""
    with pytest.raises(DimensionMismatchError):
        character_table(13)

@settings(max_examples=30, deadline=None)
@given(st.sampled_from(partitions(8)), st.sampled_from(partitions(8)))
def test_row_orthogonality(a, b):
    """Test <chi_a, chi_b> = delta_ab for irreducible characters of S_8."""
    assert inner_product(irreducible(a), irreducible(b)) == (1 if a == b else 0)

@settings(max_examples=30, deadline=None)
@given(st.sampled_from(partitions(8)))
def test_sign_twist_conjugates_the_shape(shape):
    """Test that tensoring with the sign transposes the Young diagram."""
    twisted = irreducible(shape) * sign_character(8)
    assert multiplicity(conjugate(shape), twisted) == 1

def test_symmetric_and_exterior_square_dimensions():
    """Test dim Sym^2 = 105 and dim wedge^2 = 91 for a 14-dimensional representation."""
    v = irreducible((4, 4))
    assert symmetric_power_character(v, 2).dimension == 105
    assert exterior_square_character(v).dimension == 91
    assert symmetric_power_character(v, 2) + exterior_square_character(v) == v * v

def test_trivial_in_symmetric_square_of_self_dual():
    """Test that a real irreducible has exactly one invariant in its symmetric square."""
    v = irreducible((4, 4))
    assert multiplicity((8,), symmetric_power_character(v, 2)) == 1
    assert multiplicity((8,), trivial_character(8)) == 1

def test_invariant_ring_characters_are_the_expected_irreducibles():
    """Test R_1 of M8 is V_{4,4} and R_1 of N8 is V_{2,2,2,2}."""
    assert invariant_ring_character(2, 8, 1) == irreducible((4, 4))
    assert invariant_ring_character(4, 8, 1) == irreducible((2, 2, 2, 2))

def test_dimensions_from_characters():
    """Test that character dimensions reproduce the tableau counts."""
    assert dimensions(2, 8, 3) == (1, 14, 91, 364)
    assert dimensions(4, 8, 3) == (1, 14, 126, 790)

def test_decompositions():
    """Test the multiplicity-free decompositions of Sym^2, wedge^2, R_2 and I_2."""
    facts = decomposition_facts()
    assert facts == EXPECTED_DECOMPOSITIONS
    assert decompose(invariant_ring_character(2, 8, 2)).dimension() == 91

def test_multiplicities():
    """Test the sign and V_{4,4} multiplicities."""
    assert multiplicity_facts() == EXPECTED_MULTIPLICITIES

def test_no_skew_quintic_uses_degree_two_generators():
    """Test that sign never occurs in W * Sym^3 R_1 or Sym^2 W * R_1."""
    counts = n8_sign_multiplicities()
    assert counts["w_times_sym3_r1"] == 0
    assert counts["sym2_w_times_r1"] == 0
    assert counts["sym5_r1_control"] == 4
    assert n8_final_check()
