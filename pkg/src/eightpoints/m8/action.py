"""S_8 acting on R_1 of eight points on the line, in the Kempe basis."""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import List, Tuple

from eightpoints.errors import DimensionMismatchError
from eightpoints.m8.kempe import KempeBasis
from eightpoints.symrep.group_action import (
    ActionMatrix,
    Permutation,
    action_table,
    matrix_from_columns,
)

logger = logging.getLogger(__name__)


@lru_cache(maxsize=4096)
def s8_action(g: Permutation, basis: KempeBasis) -> ActionMatrix:
    """Relabel each basis matching by g, re-orient its edges and uncross.

    Column v of the result holds g.x_v in the Kempe coordinates.
    """
    g = tuple(g)
    if sorted(g) != list(range(1, 9)):
        raise DimensionMismatchError(f"{g} is not a permutation of 1..8")
    columns = []
    for v, matching in enumerate(basis.matchings):
        flip, image = matching.relabel(g)
        columns.append(basis.expand(image, flip * basis.signs[v]))
    return matrix_from_columns(g, columns)


def adjacent_transposition_actions(basis: KempeBasis) -> List[ActionMatrix]:
    """Action matrices of s_1 = (1 2), ..., s_7 = (7 8)."""
    return action_table(lambda g: s8_action(g, basis), 8)


def action_generators(basis: KempeBasis) -> Tuple[ActionMatrix, ActionMatrix]:
    """The transposition (1 2) and the rotation i -> i+1, which generate S_8."""
    return s8_action((2, 1, 3, 4, 5, 6, 7, 8), basis), s8_action((2, 3, 4, 5, 6, 7, 8, 1), basis)
