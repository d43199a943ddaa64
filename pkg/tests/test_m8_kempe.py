import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eightpoints.errors import DimensionMismatchError
from eightpoints.m8.action import action_generators, adjacent_transposition_actions, s8_action
from eightpoints.m8.binding import binomial_holds, candidate_bindings, is_consistent
from eightpoints.m8.kempe import KEMPE_NAMES, KempeBasis, kempe_coordinates, rotation_orbits
from eightpoints.symrep.group_action import compose, rotation
from eightpoints.tableaux.configuration import sample_configuration
from eightpoints.tableaux.matchings import noncrossing_matchings

permutations_of_8 = st.permutations(list(range(1, 9))).map(tuple)

def test_rotation_orbits_have_sizes_2_4_8():
    """Test that the rotation splits the 14 non-crossing matchings into orbits of sizes 2, 4 and 8."""
    assert [len(o) for o in rotation_orbits(rotation(8))] == [2, 4, 8]

def test_binding_names_and_orbits(kempe_basis):
    """Test that the bound letters follow the rotation orbits."""
    assert kempe_basis.names == KEMPE_NAMES
    assert set(kempe_basis.matchings) == set(noncrossing_matchings(8))
    assert kempe_basis.orbit_sizes(rotation(8)) == {"X": 2, "Y": 4, "Z": 8}

def test_binding_is_consistent(kempe_basis, cubic):
    """Test that the selected binding satisfies the binomial identity and skewness."""
    assert binomial_holds(kempe_basis, cubic)
    assert is_consistent(kempe_basis, cubic)

def test_binding_serialisation(kempe_basis):
    """Test that the JSON form reproduces the binding."""
    assert KempeBasis.loads(kempe_basis.dumps()) == kempe_basis

def test_candidate_bindings_are_deterministic():
    """Test that the candidate enumeration order is fixed."""
    first = [b.to_json() for _, b in zip(range(5), candidate_bindings())]
    second = [b.to_json() for _, b in zip(range(5), candidate_bindings())]
    assert first == second

def test_basis_validation():
    """Test that a binding must use 14 distinct non-crossing matchings with unit signs."""
    matchings = noncrossing_matchings(8)
    with pytest.raises(DimensionMismatchError):
        KempeBasis(matchings[:13])
    with pytest.raises(DimensionMismatchError):
        KempeBasis(matchings, (2,) + (1,) * 13)

def test_kempe_coordinates_need_eight_points_on_the_line(kempe_basis):
    """Test that configurations in P^3 are rejected."""
    with pytest.raises(DimensionMismatchError):
        kempe_coordinates(sample_configuration(4, 8, 1), kempe_basis)

def test_adjacent_actions_are_involutions(kempe_basis):
    """Test that every adjacent transposition squares to the identity on R_1."""
    for a in adjacent_transposition_actions(kempe_basis):
        assert (a @ a).is_identity()

def test_generator_actions(kempe_basis):
    """Test that the rotation has order eight on R_1."""
    _, r = action_generators(kempe_basis)
    power = r
    for _ in range(7):
        power = power @ r
    assert power.is_identity()

@settings(max_examples=20, deadline=None)
@given(permutations_of_8, permutations_of_8)
def test_s8_action_is_a_homomorphism(kempe_basis, g, h):
    """Test that the action matrix of gh is the product of those of g and h."""
    assert (s8_action(g, kempe_basis) @ s8_action(h, kempe_basis)).entries == s8_action(compose(g, h), kempe_basis).entries

@settings(max_examples=15, deadline=None)
@given(permutations_of_8, st.integers(0, 10**6))
def test_action_matches_relabelled_configuration(kempe_basis, g, seed):
    """Test that g acting on R_1 agrees with relabelling the points of a configuration."""
    c = sample_configuration(2, 8, seed)
    action = s8_action(g, kempe_basis)
    before = kempe_coordinates(c, kempe_basis)
    after = kempe_coordinates(c.relabel(g), kempe_basis)
    # (g.x_v)(g c) = x_v(c)
    for v in range(14):
        assert sum(action.entries[w][v] * after[w] for w in range(14)) == before[v]
