"""Permutations, linear actions on degree-one invariants, and skew averaging.

A permutation of 1..n is the tuple g with g[i-1] = g(i); products compose
right to left, (g h)(i) = g(h(i)). An action matrix records g on a basis
x_1..x_k of degree-one invariants: column v holds the coordinates of g.x_v.
Polynomials in the x_v are acted on by the substitution x_v -> g.x_v.

Skew averaging sum_g sign(g) g.f over S_n uses the coset factorisation
S_k = disjoint union over j of c_{j,k} S_{k-1}, c_{j,k} = s_j s_{j+1} ... s_{k-1},
so the full signed sum is B_n ... B_3 B_2 with B_k = sum_j (-1)^(k-j) c_{j,k};
each B_k is a chain of adjacent transpositions.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, Sequence, Tuple

import numpy as np

from eightpoints.errors import DimensionMismatchError
from eightpoints.exactcore.polynomial import SparsePolynomial
from eightpoints.tableaux.tableau import Permutation, inversion_parity

logger = logging.getLogger(__name__)


# -----------------------
# Permutations
# -----------------------
def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def compose(g: Permutation, h: Permutation) -> Permutation:
    """g h: apply h first."""
    return tuple(g[h[i] - 1] for i in range(len(h)))


def inverse(g: Permutation) -> Permutation:
    out = [0] * len(g)
    for i, image in enumerate(g):
        out[image - 1] = i + 1
    return tuple(out)


def sign(g: Permutation) -> int:
    return inversion_parity(g)


def transposition(n: int, a: int, b: int) -> Permutation:
    out = list(range(1, n + 1))
    out[a - 1], out[b - 1] = b, a
    return tuple(out)


def adjacent_transposition(n: int, i: int) -> Permutation:
    """s_i = (i, i+1)."""
    return transposition(n, i, i + 1)


def cycle(n: int, *points: int) -> Permutation:
    """The cycle points[0] -> points[1] -> ... -> points[0]."""
    out = list(range(1, n + 1))
    for a, b in zip(points, points[1:] + points[:1]):
        out[a - 1] = b
    return tuple(out)


def rotation(n: int) -> Permutation:
    """i -> i+1 modulo n."""
    return cycle(n, *range(1, n + 1))


def adjacent_word(g: Permutation) -> List[int]:
    """Indices w with g = s_{w[0]} s_{w[1]} ... s_{w[-1]}."""
    current = list(g)
    applied: List[int] = []
    changed = True
    while changed:
        changed = False
        for i in range(len(current) - 1):
            if current[i] > current[i + 1]:
                # right multiplication by s_{i+1} swaps positions i, i+1
                current[i], current[i + 1] = current[i + 1], current[i]
                applied.append(i + 1)
                changed = True
    return list(reversed(applied))


def random_permutation(n: int, rng: np.random.Generator) -> Permutation:
    return tuple(int(x) + 1 for x in rng.permutation(n))


def parse_cycles(text: str, n: int) -> Permutation:
    """'(1 2)(3 4 5)' -> permutation of 1..n."""
    g = identity(n)
    for chunk in text.replace(")", " ").split("(")[1:]:
        points = tuple(int(x) for x in chunk.split())
        if len(points) > 1:
            g = compose(cycle(n, *points), g)
    return g


# -----------------------
# Linear actions
# -----------------------
@dataclass(frozen=True)
class ActionMatrix:
    """Integer matrix of a permutation on a basis of degree-one invariants."""

    g: Permutation
    entries: Tuple[Tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def columns(self) -> List[Dict[int, int]]:
        """Sparse columns: columns()[v] maps w -> coefficient of x_w in g.x_v."""
        k = self.size
        return [{w: self.entries[w][v] for w in range(k) if self.entries[w][v]} for v in range(k)]

    def __matmul__(self, other: "ActionMatrix") -> "ActionMatrix":
        if other.size != self.size:
            raise DimensionMismatchError("action matrices of different sizes")
        k = self.size
        product = tuple(
            tuple(sum(self.entries[i][t] * other.entries[t][j] for t in range(k)) for j in range(k))
            for i in range(k)
        )
        return ActionMatrix(compose(self.g, other.g), product)

    def is_identity(self) -> bool:
        return all(self.entries[i][j] == (1 if i == j else 0) for i in range(self.size) for j in range(self.size))

    def to_json(self) -> Dict[str, object]:
        return {"permutation": list(self.g), "matrix": [list(r) for r in self.entries]}


def matrix_from_columns(g: Permutation, columns: Sequence[Mapping[int, int]]) -> ActionMatrix:
    k = len(columns)
    entries = [[0] * k for _ in range(k)]
    for v, col in enumerate(columns):
        for w, c in col.items():
            entries[w][v] += c
    return ActionMatrix(g, tuple(tuple(r) for r in entries))


def act_on_polynomial(action: ActionMatrix, f: SparsePolynomial) -> SparsePolynomial:
    """g.f by the substitution x_v -> g.x_v."""
    if action.size != len(f.variables):
        raise DimensionMismatchError(f"{action.size}x{action.size} action on {len(f.variables)} variables")
    return f.linear_substitution(action.columns())


def act_by_word(adjacent: Sequence[ActionMatrix], word: Sequence[int], f: SparsePolynomial) -> SparsePolynomial:
    """s_{w[0]} ... s_{w[-1]} . f, applying the rightmost factor first."""
    for i in reversed(word):
        f = act_on_polynomial(adjacent[i - 1], f)
    return f


def act(adjacent: Sequence[ActionMatrix], g: Permutation, f: SparsePolynomial) -> SparsePolynomial:
    """g.f through a reduced word in adjacent transpositions."""
    return act_by_word(adjacent, adjacent_word(g), f)


def skew_average(adjacent: Sequence[ActionMatrix], f: SparsePolynomial) -> SparsePolynomial:
    """sum over S_n of sign(g) g.f, with n = len(adjacent) + 1."""
    n = len(adjacent) + 1
    current = f
    for k in range(2, n + 1):
        # B_k: u_k = v, u_j = -s_j u_{j+1}, B_k v = u_1 + ... + u_k
        u = current
        total = current
        for j in range(k - 1, 0, -1):
            u = -act_on_polynomial(adjacent[j - 1], u)
            total = total + u
        current = total
        logger.debug(f"Skew average: applied coset factor B_{k}, {len(current)} terms")
    return current


def action_table(build: Callable[[Permutation], ActionMatrix], n: int) -> List[ActionMatrix]:
    """Action matrices of s_1..s_{n-1}."""
    return [build(adjacent_transposition(n, i)) for i in range(1, n)]
