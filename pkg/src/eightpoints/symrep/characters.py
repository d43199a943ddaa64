"""Characters of the symmetric group.

Irreducible characters come from the Murnaghan-Nakayama rule on beta-sets:
removing a rim hook of length k moves one bead k places down, with sign
(-1)^(beads jumped over).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterator, Tuple

from eightpoints.errors import DimensionMismatchError, NonIntegralMultiplicityError
from eightpoints.exactcore.scalars import ExactScalar, exact
from eightpoints.symrep.partitions import (
    Partition,
    format_partition,
    partitions,
    power_class,
    z_value,
)

logger = logging.getLogger(__name__)

MAX_DEGREE = 12


def beta_set(shape: Partition) -> Tuple[int, ...]:
    length = len(shape)
    return tuple(sorted(part + length - 1 - i for i, part in enumerate(shape)))


@lru_cache(maxsize=None)
def bead_character(beads: Tuple[int, ...], cycles: Tuple[int, ...]) -> int:
    if not cycles:
        return 1
    k, rest = cycles[0], cycles[1:]
    occupied = set(beads)
    total = 0
    for b in beads:
        target = b - k
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for x in beads if target < x < b)
        moved = tuple(sorted((occupied - {b}) | {target}))
        value = bead_character(moved, rest)
        total += -value if jumped % 2 else value
    return total


def irreducible_value(shape: Partition, mu: Partition) -> int:
    """chi_shape at the class of cycle type mu."""
    if sum(shape) != sum(mu):
        raise DimensionMismatchError(f"{shape} and {mu} have different weights")
    return bead_character(beta_set(shape), tuple(sorted(mu, reverse=True)))


@dataclass(frozen=True)
class CharacterVector:
    """Class function on S_n, one value per partition of n in lexicographic order."""

    n: int
    values: Tuple[ExactScalar, ...]

    def __post_init__(self):
        if len(self.values) != len(partitions(self.n)):
            raise DimensionMismatchError(f"S_{self.n} has {len(partitions(self.n))} classes")

    @classmethod
    def from_function(cls, n: int, fn: Callable[[Partition], ExactScalar]) -> "CharacterVector":
        return cls(n, tuple(exact(fn(mu)) for mu in partitions(n)))

    def at(self, mu: Partition) -> ExactScalar:
        return self.values[_class_index(self.n)[tuple(sorted(mu, reverse=True))]]

    @property
    def dimension(self) -> ExactScalar:
        return self.values[0]

    def items(self) -> Iterator[Tuple[Partition, ExactScalar]]:
        return zip(partitions(self.n), self.values)

    def _check(self, other: "CharacterVector") -> None:
        if other.n != self.n:
            raise DimensionMismatchError(f"characters of S_{self.n} and S_{other.n}")

    def __add__(self, other: "CharacterVector") -> "CharacterVector":
        self._check(other)
        return CharacterVector(self.n, tuple(exact(a + b) for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "CharacterVector") -> "CharacterVector":
        self._check(other)
        return CharacterVector(self.n, tuple(exact(a - b) for a, b in zip(self.values, other.values)))

    def __mul__(self, other) -> "CharacterVector":
        """Pointwise product: the character of the tensor product."""
        if isinstance(other, CharacterVector):
            self._check(other)
            return CharacterVector(self.n, tuple(exact(a * b) for a, b in zip(self.values, other.values)))
        return CharacterVector(self.n, tuple(exact(a * other) for a in self.values))

    __rmul__ = __mul__


@lru_cache(maxsize=None)
def _class_index(n: int) -> Dict[Partition, int]:
    return {mu: i for i, mu in enumerate(partitions(n))}


@lru_cache(maxsize=None)
def character_table(n: int) -> Dict[Partition, CharacterVector]:
    """Irreducible characters of S_n keyed by shape."""
    if n > MAX_DEGREE:
        raise DimensionMismatchError(f"character tables are built for n <= {MAX_DEGREE}")
    return {
        shape: CharacterVector.from_function(n, lambda mu, shape=shape: irreducible_value(shape, mu))
        for shape in partitions(n)
    }


def irreducible(shape: Partition) -> CharacterVector:
    return character_table(sum(shape))[tuple(shape)]


def sign_character(n: int) -> CharacterVector:
    return irreducible((1,) * n)


def trivial_character(n: int) -> CharacterVector:
    return irreducible((n,))


def inner_product(chi: CharacterVector, psi: CharacterVector) -> Fraction:
    """<chi, psi> = sum over classes of chi * psi / z (characters are real)."""
    chi._check(psi)
    total = Fraction(0)
    for mu, a in chi.items():
        total += Fraction(a) * Fraction(psi.at(mu)) / z_value(mu)
    return total


def multiplicity(shape: Partition, chi: CharacterVector) -> int:
    value = inner_product(irreducible(shape), chi)
    if value.denominator != 1 or value < 0:
        raise NonIntegralMultiplicityError(f"multiplicity of {shape} is {value}")
    return int(value)


@dataclass
class RepDecomposition:
    multiplicities: Dict[Partition, int] = field(default_factory=dict)

    def dimension(self) -> int:
        return sum(mult * irreducible(shape).dimension for shape, mult in self.multiplicities.items())

    def support(self) -> Tuple[Partition, ...]:
        return tuple(sorted(self.multiplicities))

    def is_multiplicity_free(self) -> bool:
        return all(m == 1 for m in self.multiplicities.values())

    def character(self, n: int) -> CharacterVector:
        total = CharacterVector(n, (0,) * len(partitions(n)))
        for shape, mult in self.multiplicities.items():
            total = total + mult * irreducible(shape)
        return total

    def to_json(self) -> Dict[str, int]:
        """{'4+4': 1, ...} ordered by partition."""
        return {format_partition(shape): mult for shape, mult in sorted(self.multiplicities.items())}


def decompose(chi: CharacterVector) -> RepDecomposition:
    """Multiplicities of the irreducibles in a genuine character; reconstruction is checked."""
    mults = {}
    for shape in partitions(chi.n):
        value = multiplicity(shape, chi)
        if value:
            mults[shape] = value
    result = RepDecomposition(mults)
    if result.character(chi.n) != chi:
        raise NonIntegralMultiplicityError("decomposition does not reconstruct its character")
    return result


def symmetric_power_character(chi: CharacterVector, d: int) -> CharacterVector:
    """Sym^d chi(g) = sum over nu |- d of (1/z_nu) prod_i chi(g^nu_i)."""
    if d < 0:
        raise ValueError("negative symmetric power")

    def value(mu: Partition) -> Fraction:
        total = Fraction(0)
        for nu in partitions(d):
            term = Fraction(1, z_value(nu))
            for part in nu:
                term *= chi.at(power_class(mu, part))
            total += term
        return total

    return CharacterVector.from_function(chi.n, value)


def exterior_square_character(chi: CharacterVector) -> CharacterVector:
    """(chi(g)^2 - chi(g^2)) / 2."""
    return CharacterVector.from_function(
        chi.n, lambda mu: Fraction(chi.at(mu) ** 2 - chi.at(power_class(mu, 2)), 2)
    )


def tensor_character(chi: CharacterVector, psi: CharacterVector) -> CharacterVector:
    return chi * psi
