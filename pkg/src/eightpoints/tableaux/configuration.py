"""Point configurations and evaluation of tableau invariants."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, permutations
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np

from eightpoints import config
from eightpoints.errors import DegenerateSampleError, DimensionMismatchError
from eightpoints.exactcore.scalars import exact
from eightpoints.tableaux.tableau import Column, Tableau, TableauSum, inversion_parity

logger = logging.getLogger(__name__)

Seed = Union[int, Sequence[int]]


@lru_cache(maxsize=None)
def _signed_permutations(m: int) -> Tuple[Tuple[int, Tuple[int, ...]], ...]:
    return tuple((inversion_parity(p), p) for p in permutations(range(m)))


def leibniz_determinant(rows: Sequence[Sequence]) -> object:
    """Determinant by the permutation expansion; works over any commutative ring."""
    m = len(rows)
    total = 0
    for sign, perm in _signed_permutations(m):
        term = rows[0][perm[0]]
        for i in range(1, m):
            term = term * rows[i][perm[i]]
        total = total + term if sign > 0 else total - term
    return total


@dataclass(frozen=True)
class Configuration:
    """n points in P^(m-1), each a tuple of m homogeneous coordinates."""

    points: Tuple[Tuple[object, ...], ...]

    def __post_init__(self):
        widths = {len(p) for p in self.points}
        if len(widths) != 1:
            raise DimensionMismatchError("all points need the same number of coordinates")
        for p in self.points:
            if all(isinstance(x, int) or hasattr(x, "denominator") for x in p) and not any(p):
                raise DimensionMismatchError("the zero tuple is not a point")

    @classmethod
    def of(cls, points: Sequence[Sequence]) -> "Configuration":
        return cls(tuple(tuple(exact(x) if isinstance(x, (int, str)) or hasattr(x, "item") else x for x in p) for p in points))

    @property
    def m(self) -> int:
        return len(self.points[0])

    @property
    def n(self) -> int:
        return len(self.points)

    def bracket(self, column: Sequence[int]) -> object:
        """Determinant of the points named by a column, in the given order."""
        return leibniz_determinant([self.points[i - 1] for i in column])

    @cached_property
    def minors(self) -> Dict[Column, object]:
        """All brackets of increasing m-subsets; the fast path for canonical tableaux."""
        return {
            tuple(i + 1 for i in subset): self.bracket([i + 1 for i in subset])
            for subset in combinations(range(self.n), self.m)
        }

    def scaled(self, index: int, factor) -> "Configuration":
        """Multiply the coordinates of point `index` (1-based) by a scalar."""
        pts = list(self.points)
        pts[index - 1] = tuple(factor * x for x in pts[index - 1])
        return Configuration(tuple(pts))

    def relabel(self, g: Sequence[int]) -> "Configuration":
        """Configuration whose point g(i) is the old point i."""
        pts: List[Tuple] = [()] * self.n
        for i, p in enumerate(self.points):
            pts[g[i] - 1] = p
        return Configuration(tuple(pts))


def evaluate_columns(columns: Sequence[Sequence[int]], c: Configuration) -> object:
    """Product of column determinants for a raw (possibly unsorted) column array."""
    value = 1
    for col in columns:
        if len(col) != c.m:
            raise DimensionMismatchError(f"column of height {len(col)} on points of P^{c.m - 1}")
        value = value * c.bracket(col)
    return value


def evaluate_invariant(t: Union[Tableau, TableauSum], c: Configuration) -> object:
    """Exact value of a tableau (or a sum of tableaux) at a configuration."""
    if isinstance(t, TableauSum):
        total = 0
        for tab, coeff in t.items():
            total = total + coeff * evaluate_invariant(tab, c)
        return total
    if t.m != c.m or t.n != c.n:
        raise DimensionMismatchError(f"tableau for ({t.m},{t.n}) evaluated on ({c.m},{c.n}) configuration")
    minors = c.minors
    value = 1
    for col in t.columns:
        value = value * minors[col]
    return value


def is_generic(points: Sequence[Sequence[int]], m: int) -> bool:
    """Every m of the points are linearly independent."""
    for subset in combinations(range(len(points)), m):
        if leibniz_determinant([points[i] for i in subset]) == 0:
            return False
    return True


def sample_configuration(
    m: int,
    n: int,
    seed: Seed,
    mode: str = "generic",
    bound: int = config.COORD_BOUND,
    budget: int = config.REJECTION_BUDGET,
) -> Configuration:
    """Random integer configuration with every m points independent; deterministic per seed."""
    if mode != "generic":
        raise ValueError(f"unsupported sampling mode {mode!r}")
    rng = np.random.default_rng(seed)
    for attempt in range(budget):
        draw = rng.integers(-bound, bound + 1, size=(n, m))
        points = [[int(x) for x in row] for row in draw]
        if is_generic(points, m):
            if attempt:
                logger.debug(f"Configuration for seed {seed} accepted after {attempt} rejections")
            return Configuration(tuple(tuple(p) for p in points))
    logger.error(f"Rejection budget of {budget} exhausted for seed {seed}")
    raise DegenerateSampleError(f"no generic ({m},{n}) configuration within {budget} draws for seed {seed}")


def sample_configurations(m: int, n: int, count: int, seed: int) -> List[Configuration]:
    """A reproducible batch: the i-th configuration uses seed (seed, i)."""
    return [sample_configuration(m, n, (seed, i)) for i in range(count)]
