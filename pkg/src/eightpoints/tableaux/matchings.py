"""Perfect matchings of cyclically ordered points and the non-crossing basis.

For two-row tableaux of degree one every column is an edge, so a tableau is a
perfect matching with edges oriented upwards (i -> j, i < j). Crossing edges
are resolved with the three-term relation

    [ac][bd] = [ab][cd] + [ad][bc]      (a < b < c < d)

and each resolution lowers the total crossing number, so uncrossing ends in
the 14 non-crossing matchings on 8 points.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from eightpoints.errors import DimensionMismatchError
from eightpoints.tableaux.tableau import Tableau, TableauSum, normalize

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def crossing(e: Edge, f: Edge) -> bool:
    (a, b), (c, d) = sorted((e, f))
    return a < c < b < d


@dataclass(frozen=True, order=True)
class Matching:
    edges: Tuple[Edge, ...]
    n: int = 8

    def __post_init__(self):
        covered = sorted(x for e in self.edges for x in e)
        if covered != list(range(1, self.n + 1)):
            raise DimensionMismatchError(f"{self.edges} is not a perfect matching of 1..{self.n}")
        if any(i >= j for i, j in self.edges) or list(self.edges) != sorted(self.edges):
            raise DimensionMismatchError("edges must be oriented upwards and sorted")

    @classmethod
    def from_edges(cls, edges: Sequence[Sequence[int]], n: int = 8) -> Tuple[int, "Matching"]:
        """Orient every edge upwards; each flipped edge contributes a sign."""
        sign = 1
        oriented = []
        for i, j in edges:
            if i > j:
                i, j = j, i
                sign = -sign
            oriented.append((i, j))
        return sign, cls(tuple(sorted(oriented)), n)

    @classmethod
    def parse(cls, text: str, n: int = 8) -> "Matching":
        """Parse '1-2 3-4 ...'; edges must already point upwards."""
        edges = [tuple(int(x) for x in part.split("-")) for part in text.split()]
        sign, matching = cls.from_edges(edges, n)
        if sign != 1:
            raise DimensionMismatchError(f"edges of {text!r} are not oriented upwards")
        return matching

    def crossings(self) -> int:
        return sum(
            crossing(self.edges[i], self.edges[j])
            for i in range(len(self.edges))
            for j in range(i + 1, len(self.edges))
        )

    def is_noncrossing(self) -> bool:
        return self.crossings() == 0

    def relabel(self, g: Sequence[int]) -> Tuple[int, "Matching"]:
        return Matching.from_edges([(g[i - 1], g[j - 1]) for i, j in self.edges], self.n)

    def format(self) -> str:
        return " ".join(f"{i}-{j}" for i, j in self.edges)

    def __str__(self) -> str:
        return self.format()


@lru_cache(maxsize=None)
def perfect_matchings(n: int = 8) -> Tuple[Matching, ...]:
    """All perfect matchings of 1..n, sorted by edge list."""

    def extend(free: Tuple[int, ...]) -> List[List[Edge]]:
        if not free:
            return [[]]
        first, rest = free[0], free[1:]
        out = []
        for k, partner in enumerate(rest):
            for tail in extend(rest[:k] + rest[k + 1:]):
                out.append([(first, partner)] + tail)
        return out

    return tuple(sorted(Matching(tuple(sorted(edges)), n) for edges in extend(tuple(range(1, n + 1)))))


@lru_cache(maxsize=None)
def noncrossing_matchings(n: int = 8) -> Tuple[Matching, ...]:
    return tuple(m for m in perfect_matchings(n) if m.is_noncrossing())


@lru_cache(maxsize=None)
def uncross(matching: Matching) -> Dict[Matching, int]:
    """Integer expansion of a matching invariant in non-crossing matchings."""
    edges = matching.edges
    for x in range(len(edges)):
        for y in range(x + 1, len(edges)):
            if crossing(edges[x], edges[y]):
                (a, c), (b, d) = sorted((edges[x], edges[y]))
                others = [e for k, e in enumerate(edges) if k not in (x, y)]
                out: Dict[Matching, int] = defaultdict(int)
                for pair in (((a, b), (c, d)), ((a, d), (b, c))):
                    replaced = Matching(tuple(sorted(others + list(pair))), matching.n)
                    for key, coeff in uncross(replaced).items():
                        out[key] += coeff
                return {k: v for k, v in out.items() if v}
    return {matching: 1}


def matching_to_tableau(g: Matching) -> Tuple[int, Tableau]:
    """Two-row tableau whose columns are the edges."""
    return normalize(list(g.edges), g.n)


def tableau_to_matching(t: Tableau) -> Matching:
    if t.m != 2 or t.degree != 1:
        raise DimensionMismatchError("only degree-one two-row tableaux are matchings")
    return Matching(t.columns, t.n)


def expand_in_matching_basis(s: TableauSum, basis: Sequence[Matching]) -> List[int]:
    """Coefficient vector of a degree-one two-row sum in the given non-crossing basis."""
    index = {g: k for k, g in enumerate(basis)}
    vector = [0] * len(basis)
    for t, coeff in s.items():
        for g, c in uncross(tableau_to_matching(t)).items():
            if g not in index:
                raise DimensionMismatchError(f"{g} is not in the supplied basis")
            vector[index[g]] += coeff * c
    return vector
