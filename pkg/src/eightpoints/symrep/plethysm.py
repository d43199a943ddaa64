"""Characters of rings of invariants of points, by Schur-Weyl duality.

The degree-d invariants of n points in P^(m-1) carry the S_n-character

    mu  ->  < p_mu[h_d], s_rect >,      rect = (dn/m)^m,

computed entirely in the power-sum basis: p_k[h_d] = sum over nu |- d of
p_{k nu} / z_nu, and < p_rho, s_rect > is the rectangle character at rho.
Multiplicities of V_lambda are then plain inner products.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Dict

from eightpoints.errors import DimensionMismatchError
from eightpoints.symrep.characters import CharacterVector, beta_set, bead_character
from eightpoints.symrep.partitions import Partition, partitions, z_value

logger = logging.getLogger(__name__)

PowerSumExpansion = Dict[Partition, Fraction]


@lru_cache(maxsize=None)
def _h_in_power_sums(d: int, k: int) -> PowerSumExpansion:
    """p_k[h_d] = sum over nu |- d of p_{k*nu} / z_nu."""
    return {tuple(k * part for part in nu): Fraction(1, z_value(nu)) for nu in partitions(d)}


def _multiply(a: PowerSumExpansion, b: PowerSumExpansion) -> PowerSumExpansion:
    out: Dict[Partition, Fraction] = defaultdict(Fraction)
    for rho, x in a.items():
        for sigma, y in b.items():
            out[tuple(sorted(rho + sigma, reverse=True))] += x * y
    return {k: v for k, v in out.items() if v}


def plethysm_power_sum(mu: Partition, d: int) -> PowerSumExpansion:
    """p_mu[h_d] expanded in power sums."""
    result: PowerSumExpansion = {(): Fraction(1)}
    for part in sorted(mu, reverse=True):
        result = _multiply(result, _h_in_power_sums(d, part))
    return result


def rectangle_value(m: int, width: int, rho: Partition) -> int:
    """Character of the m x width rectangle at cycle type rho."""
    return bead_character(beta_set((width,) * m), tuple(sorted(rho, reverse=True)))


def invariant_ring_character(m: int, n: int, d: int) -> CharacterVector:
    """Character of R_d for n points in P^(m-1)."""
    if (d * n) % m:
        raise DimensionMismatchError(f"m={m} does not divide d*n={d * n}")
    width = d * n // m

    def value(mu: Partition) -> Fraction:
        if d == 0:
            return Fraction(1)
        total = Fraction(0)
        for rho, coeff in plethysm_power_sum(mu, d).items():
            total += coeff * rectangle_value(m, width, rho)
        return total

    chi = CharacterVector.from_function(n, value)
    logger.debug(f"R_{d} of {n} points in P^{m - 1}: dimension {chi.dimension}")
    return chi
