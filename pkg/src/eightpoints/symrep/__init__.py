from eightpoints.symrep.characters import (
    CharacterVector,
    RepDecomposition,
    character_table,
    decompose,
    exterior_square_character,
    inner_product,
    irreducible,
    multiplicity,
    sign_character,
    symmetric_power_character,
    tensor_character,
    trivial_character,
)
from eightpoints.symrep.group_action import (
    ActionMatrix,
    Permutation,
    act,
    act_on_polynomial,
    adjacent_transposition,
    compose,
    inverse,
    rotation,
    sign,
    skew_average,
)
from eightpoints.symrep.partitions import Partition, format_partition, parse_partition, partitions
from eightpoints.symrep.plethysm import invariant_ring_character, plethysm_power_sum
from eightpoints.symrep.so_annihilator import so_annihilator_dimension

__all__ = [
    "ActionMatrix",
    "CharacterVector",
    "Partition",
    "Permutation",
    "RepDecomposition",
    "act",
    "act_on_polynomial",
    "adjacent_transposition",
    "character_table",
    "compose",
    "decompose",
    "exterior_square_character",
    "format_partition",
    "inner_product",
    "invariant_ring_character",
    "inverse",
    "irreducible",
    "multiplicity",
    "parse_partition",
    "partitions",
    "plethysm_power_sum",
    "rotation",
    "sign",
    "sign_character",
    "skew_average",
    "so_annihilator_dimension",
    "symmetric_power_character",
    "tensor_character",
    "trivial_character",
]
