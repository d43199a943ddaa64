"""The fourteen Kempe coordinates of eight points on the line.

R_1 of eight points in P^1 has the 14 non-crossing matchings as a basis. The
named coordinates X1, X2, Y1..Y4, Z1..Z8 follow the rotation orbits of the
matchings (sizes 2, 4 and 8); within an orbit the index advances with the
rotation i -> i+1. Each coordinate may carry a sign relative to its matching
invariant prod [ij] over its edges.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

from eightpoints.errors import DimensionMismatchError
from eightpoints.exactcore.polynomial import SparsePolynomial
from eightpoints.tableaux.configuration import Configuration, evaluate_invariant
from eightpoints.tableaux.matchings import Matching, matching_to_tableau, noncrossing_matchings, uncross
from eightpoints.tableaux.tableau import Permutation, TableauSum

logger = logging.getLogger(__name__)

KEMPE_NAMES: Tuple[str, ...] = (
    ("X1", "X2")
    + tuple(f"Y{i}" for i in range(1, 5))
    + tuple(f"Z{i}" for i in range(1, 9))
)
ORBIT_SIZES = {"X": 2, "Y": 4, "Z": 8}


@dataclass(frozen=True)
class KempeBasis:
    """Ordered binding of the 14 names to non-crossing matchings, with signs."""

    matchings: Tuple[Matching, ...]
    signs: Tuple[int, ...] = field(default=(1,) * 14)

    def __post_init__(self):
        if len(self.matchings) != len(KEMPE_NAMES) or len(self.signs) != len(KEMPE_NAMES):
            raise DimensionMismatchError("a Kempe basis binds exactly 14 matchings")
        if len(set(self.matchings)) != len(self.matchings):
            raise DimensionMismatchError("Kempe matchings must be pairwise distinct")
        if not all(m.is_noncrossing() for m in self.matchings):
            raise DimensionMismatchError("Kempe matchings must be non-crossing")
        if any(s not in (1, -1) for s in self.signs):
            raise DimensionMismatchError("Kempe signs must be +1 or -1")

    @property
    def names(self) -> Tuple[str, ...]:
        return KEMPE_NAMES

    @cached_property
    def _position(self) -> Dict[Matching, int]:
        return {m: i for i, m in enumerate(self.matchings)}

    def index(self, name: str) -> int:
        return KEMPE_NAMES.index(name)

    def matching(self, name: str) -> Matching:
        return self.matchings[self.index(name)]

    def position_of(self, matching: Matching) -> int:
        return self._position[matching]

    def tableau_sum(self, name: str) -> TableauSum:
        """The invariant bound to a name, sign included."""
        i = self.index(name)
        sign, t = matching_to_tableau(self.matchings[i])
        return TableauSum.of(t, sign * self.signs[i])

    def expand(self, matching: Matching, sign: int = 1) -> Dict[int, int]:
        """Coordinates of sign * [matching] in the named basis, as {index: coefficient}."""
        out: Dict[int, int] = {}
        for target, c in uncross(matching).items():
            w = self._position[target]
            out[w] = out.get(w, 0) + sign * c * self.signs[w]
        return {w: c for w, c in out.items() if c}

    def coordinates(self, configuration: Configuration) -> Tuple[int, ...]:
        return kempe_coordinates(configuration, self)

    def realize(self, f: SparsePolynomial) -> TableauSum:
        """The tableau sum a polynomial in the Kempe names stands for (unstraightened)."""
        if f.variables != KEMPE_NAMES:
            raise DimensionMismatchError("polynomial is not over the Kempe names")
        factors = [self.tableau_sum(name) for name in KEMPE_NAMES]
        total = TableauSum()
        for exps, coeff in f.sorted_terms():
            term = None
            for i, k in enumerate(exps):
                for _ in range(k):
                    term = factors[i] if term is None else term * factors[i]
            total = total + term.scale(coeff)
        return total

    def orbit_sizes(self, rotation: Permutation) -> Dict[str, int]:
        """Size of each letter's orbit under a rotation, read off the bound matchings."""
        sizes = {}
        for letter in ORBIT_SIZES:
            start = self.matching(f"{letter}1")
            seen = [start]
            current = start
            while True:
                _, current = current.relabel(rotation)
                if current == start:
                    break
                seen.append(current)
            bound = {self.matching(n) for n in KEMPE_NAMES if n.startswith(letter)}
            sizes[letter] = len(seen) if set(seen) == bound else -1
        return sizes

    def to_json(self) -> Dict[str, Dict[str, object]]:
        return {
            name: {"edges": [list(e) for e in m.edges], "sign": s}
            for name, m, s in zip(KEMPE_NAMES, self.matchings, self.signs)
        }

    @classmethod
    def from_json(cls, payload: Dict[str, Dict[str, object]]) -> "KempeBasis":
        matchings: List[Matching] = []
        signs: List[int] = []
        for name in KEMPE_NAMES:
            entry = payload[name]
            matchings.append(Matching(tuple(tuple(e) for e in entry["edges"])))
            signs.append(int(entry["sign"]))
        return cls(tuple(matchings), tuple(signs))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def loads(cls, text: str) -> "KempeBasis":
        return cls.from_json(json.loads(text))


def kempe_coordinates(configuration: Configuration, basis: KempeBasis) -> Tuple[int, ...]:
    """The 14 Kempe values of a configuration of eight points in P^1."""
    if configuration.m != 2 or configuration.n != 8:
        raise DimensionMismatchError("Kempe coordinates need eight points in P^1")
    values = []
    for name in KEMPE_NAMES:
        values.append(evaluate_invariant(basis.tableau_sum(name), configuration))
    return tuple(values)


def rotation_orbits(rotation: Permutation) -> List[Tuple[Matching, ...]]:
    """Orbits of the non-crossing matchings under a rotation, each sorted, ordered by size."""
    remaining = set(noncrossing_matchings(8))
    orbits = []
    while remaining:
        start = min(remaining)
        orbit = [start]
        _, current = start.relabel(rotation)
        while current != start:
            orbit.append(current)
            _, current = current.relabel(rotation)
        remaining -= set(orbit)
        orbits.append(tuple(sorted(orbit)))
    orbits.sort(key=lambda o: (len(o), o))
    return orbits


def orbit_chain(start: Matching, g: Permutation, length: int) -> Tuple[Matching, ...]:
    """start, g(start), g^2(start), ... as unsigned matchings."""
    chain = [start]
    for _ in range(length - 1):
        _, nxt = chain[-1].relabel(g)
        chain.append(nxt)
    return tuple(chain)


def matchings_from_edges(rows: Sequence[str]) -> Tuple[Matching, ...]:
    """Parse '1-2 3-4 5-6 7-8' style rows."""
    return tuple(Matching.parse(r) for r in rows)
