"""Evaluation matrices: products of generators sampled at configurations.

Row r is a product of generators (a multiset of generator indices), column c
a configuration; the entry is the product of the generators' values there.
The rank of the matrix is the dimension of the span of the row products, as
soon as there are enough generic columns.

Generator values are kept exact; products are formed modulo each prime in
numpy, so degree-4 products over thousands of configurations stay cheap.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from eightpoints.errors import DimensionMismatchError
from eightpoints.exactcore.linalg import ExactMatrix, ModularMatrix, RankCertificate, certified_rank, residue
from eightpoints.exactcore.scalars import ExactScalar
from eightpoints.tableaux.configuration import Configuration

logger = logging.getLogger(__name__)

Product = Tuple[int, ...]


def products_of_degree(indices: Sequence[int], count: int) -> List[Product]:
    """All multisets of `count` generator indices drawn from `indices`."""
    return list(combinations_with_replacement(sorted(indices), count))


@dataclass
class EvaluationMatrix:
    generator_values: List[List[ExactScalar]]
    products: List[Product]
    labels: List[str] = field(default_factory=list)

    def __post_init__(self):
        widths = {len(v) for v in self.generator_values}
        if len(widths) > 1:
            raise DimensionMismatchError("generators sampled at different numbers of configurations")
        top = len(self.generator_values)
        for prod in self.products:
            if any(not 0 <= i < top for i in prod):
                raise DimensionMismatchError(f"product {prod} names an unknown generator")

    @classmethod
    def sample(
        cls,
        generators: Sequence[Callable[[Configuration], ExactScalar]],
        configurations: Sequence[Configuration],
        products: Sequence[Product],
        labels: Optional[Sequence[str]] = None,
    ) -> "EvaluationMatrix":
        values = [[gen(c) for c in configurations] for gen in generators]
        return cls(values, list(products), list(labels or []))

    @property
    def nrows(self) -> int:
        return len(self.products)

    @property
    def ncols(self) -> int:
        return len(self.generator_values[0]) if self.generator_values else 0

    def modular(self, prime: int) -> ModularMatrix:
        base = np.array(
            [[residue(v, prime) for v in row] for row in self.generator_values], dtype=np.int64
        ).reshape(len(self.generator_values), self.ncols)
        out = np.ones((self.nrows, self.ncols), dtype=np.int64)
        for r, prod in enumerate(self.products):
            acc = out[r]
            for i in prod:
                acc = (acc * base[i]) % prime
            out[r] = acc
        return ModularMatrix(out, prime)

    def exact(self) -> ExactMatrix:
        rows = []
        for prod in self.products:
            row = []
            for c in range(self.ncols):
                value = 1
                for i in prod:
                    value *= self.generator_values[i][c]
                row.append(value)
            rows.append(row)
        return ExactMatrix.from_rows(rows)

    def rank(self, primes: Sequence[int], exact_fallback: bool = True) -> RankCertificate:
        """Two-prime rank; rank never exceeds min(rows, cols)."""
        certificate = certified_rank(self.modular, primes, self.exact if exact_fallback else None)
        logger.debug(f"Evaluation matrix {self.nrows}x{self.ncols}: rank {certificate.rank}")
        return certificate
