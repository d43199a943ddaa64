"""Degree-one invariants of eight points in P^3.

R_1 has the 14 semistandard 4 x 2 tableaux as a basis; each is named after
its first column, e.g. T1234 for the tableau with columns 1234 and 5678.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, List, Tuple

from eightpoints.errors import DimensionMismatchError
from eightpoints.symrep.group_action import ActionMatrix, Permutation, action_table, matrix_from_columns
from eightpoints.tableaux.configuration import Configuration, evaluate_invariant
from eightpoints.tableaux.ssyt import iter_ssyt
from eightpoints.tableaux.straighten import straighten
from eightpoints.tableaux.tableau import Tableau, TableauSum, relabel

logger = logging.getLogger(__name__)


def tableau_name(t: Tableau) -> str:
    return "T" + "".join(str(x) for x in t.columns[0])


@dataclass(frozen=True)
class N8Basis:
    tableaux: Tuple[Tableau, ...]

    def __post_init__(self):
        if len(self.tableaux) != 14:
            raise DimensionMismatchError(f"R_1 of eight points in P^3 is 14-dimensional, got {len(self.tableaux)}")
        if any(t.m != 4 or t.n != 8 or t.degree != 1 or not t.is_semistandard() for t in self.tableaux):
            raise DimensionMismatchError("basis elements must be semistandard 4 x 2 tableaux")

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(tableau_name(t) for t in self.tableaux)

    @cached_property
    def _position(self) -> Dict[Tableau, int]:
        return {t: i for i, t in enumerate(self.tableaux)}

    def position_of(self, t: Tableau) -> int:
        return self._position[t]

    def expand(self, s: TableauSum) -> Dict[int, int]:
        """Coordinates of a degree-one sum, straightened into the basis."""
        out: Dict[int, int] = {}
        for t, c in straighten(s).items():
            out[self._position[t]] = c
        return out

    def coordinates(self, configuration: Configuration) -> Tuple[int, ...]:
        return degree1_coordinates(configuration, self)


@lru_cache(maxsize=None)
def degree1_tableau_basis() -> N8Basis:
    return N8Basis(tuple(iter_ssyt(4, 8, 1)))


def degree1_coordinates(configuration: Configuration, basis: N8Basis) -> Tuple[int, ...]:
    """Values of the 14 basis tableaux: the image of a configuration in P^13."""
    if configuration.m != 4 or configuration.n != 8:
        raise DimensionMismatchError("degree-one coordinates need eight points in P^3")
    return tuple(evaluate_invariant(t, configuration) for t in basis.tableaux)


@lru_cache(maxsize=4096)
def s8_action_n8(g: Permutation, basis: N8Basis) -> ActionMatrix:
    """Relabel each basis tableau by g and straighten; column v holds g.x_v."""
    g = tuple(g)
    if sorted(g) != list(range(1, 9)):
        raise DimensionMismatchError(f"{g} is not a permutation of 1..8")
    columns: List[Dict[int, int]] = []
    for t in basis.tableaux:
        sign, image = relabel(t, g)
        columns.append(basis.expand(TableauSum.of(image, sign)))
    return matrix_from_columns(g, columns)


def adjacent_transposition_actions_n8(basis: N8Basis) -> List[ActionMatrix]:
    return action_table(lambda g: s8_action_n8(g, basis), 8)
