"""Gale duality on tableaux of eight points in P^3.

Each column abcd is replaced by its complement efgh in {1..8}, with the sign
of the permutation abcdefgh; the resulting column array is then brought to
canonical form. On degree one this is the identity, and in degree two it
moves 42 of the 126 semistandard tableaux, in 21 pairs. The differences of
the pairs span the (-1)-eigenspace, which supplies the degree-two generators.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from eightpoints import config
from eightpoints.errors import DimensionMismatchError
from eightpoints.n8.basis import degree1_coordinates, degree1_tableau_basis
from eightpoints.reports import VerificationReport, make_report
from eightpoints.seeding import derive_seed
from eightpoints.tableaux.configuration import sample_configuration
from eightpoints.tableaux.evaluation import EvaluationMatrix, products_of_degree
from eightpoints.tableaux.ssyt import iter_ssyt
from eightpoints.tableaux.tableau import Tableau, TableauSum, inversion_parity, normalize

logger = logging.getLogger(__name__)

POINTS = tuple(range(1, 9))
INJECTIVITY_CONFIGURATIONS = 130


@dataclass(frozen=True)
class GaleInvolution:
    """Column complementation with sign on 4-row tableaux of eight points."""

    n: int = 8
    m: int = 4

    def column(self, col: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
        complement = tuple(x for x in range(1, self.n + 1) if x not in col)
        return inversion_parity(tuple(col) + complement), complement

    def __call__(self, t: Tableau) -> Tuple[int, Tableau]:
        if t.m != self.m or t.n != self.n:
            raise DimensionMismatchError(f"Gale duality acts on {self.m}-row tableaux of {self.n} points")
        sign = 1
        columns = []
        for col in t.columns:
            s, comp = self.column(col)
            sign *= s
            columns.append(comp)
        reorder, image = normalize(columns, self.n)
        return sign * reorder, image


GALE = GaleInvolution()


def gale_dual(t: Tableau) -> Tuple[int, Tableau]:
    return GALE(t)


@dataclass(frozen=True)
class GalePair:
    first: Tableau
    second: Tableau
    sign: int

    def anti_invariant(self) -> TableauSum:
        """first - sign * second, negated by the involution."""
        return TableauSum({self.first: 1, self.second: -self.sign})


def classify_degree2() -> Tuple[List[Tableau], List[GalePair], List[str]]:
    """Fixed tableaux, moved pairs and any anomalies among the degree-2 semistandard tableaux."""
    tableaux = list(iter_ssyt(4, 8, 2))
    known = set(tableaux)
    fixed: List[Tableau] = []
    pairs: List[GalePair] = []
    anomalies: List[str] = []
    seen = set()
    for t in tableaux:
        if t in seen:
            continue
        sign, image = gale_dual(t)
        if image == t:
            fixed.append(t)
            if sign != 1:
                anomalies.append(f"{t} is fixed with sign {sign}")
            continue
        if image not in known:
            anomalies.append(f"image of {t} is not semistandard")
            continue
        pairs.append(GalePair(t, image, sign))
        seen.update((t, image))
    return fixed, pairs, anomalies


def degree2_generators() -> List[TableauSum]:
    """The 21 pair differences, one degree-two generator each."""
    _, pairs, _ = classify_degree2()
    return [pair.anti_invariant() for pair in pairs]


def degree1_gale_check() -> Dict[str, int]:
    basis = degree1_tableau_basis()
    fixed = 0
    for t in basis.tableaux:
        sign, image = gale_dual(t)
        if image == t and sign == 1:
            fixed += 1
    twice = 0
    for t in iter_ssyt(4, 8, 2):
        s1, once = gale_dual(t)
        s2, back = gale_dual(once)
        if back == t and s1 * s2 == 1:
            twice += 1
    return {"degree1_fixed_with_sign_plus": fixed, "degree2_involutive": twice}


def gale_degree1_report() -> VerificationReport:
    observed = degree1_gale_check()
    expected = {"degree1_fixed_with_sign_plus": 14, "degree2_involutive": 126}
    return make_report("N8-GALE1", expected, observed)


def degree2_gale_analysis(
    master_seed: int = config.MASTER_SEED,
    primes: Sequence[int] = config.PRIMES,
) -> VerificationReport:
    """42 moved tableaux in 21 pairs, 84 fixed, and Sym^2 R_1 -> R_2 injective."""
    fixed, pairs, anomalies = classify_degree2()
    basis = degree1_tableau_basis()
    seed = derive_seed(master_seed, "n8.gale2")
    configurations = [sample_configuration(4, 8, (seed, i)) for i in range(INJECTIVITY_CONFIGURATIONS)]
    points = [degree1_coordinates(c, basis) for c in configurations]
    values = [[p[v] for p in points] for v in range(14)]
    matrix = EvaluationMatrix(values, products_of_degree(range(14), 2))
    certificate = matrix.rank(primes)
    dim_r2 = len(fixed) + 2 * len(pairs)
    observed = {
        "semistandard": dim_r2,
        "fixed": len(fixed),
        "moved": 2 * len(pairs),
        "pairs": len(pairs),
        "quotient_dimension": dim_r2 - certificate.rank,
        "sym2_rank": certificate.rank,
        "anomalies": len(anomalies),
    }
    expected = {
        "semistandard": 126,
        "fixed": 84,
        "moved": 42,
        "pairs": 21,
        "quotient_dimension": 21,
        "sym2_rank": 105,
        "anomalies": 0,
    }
    logger.info(f"Gale involution in degree 2: {len(fixed)} fixed, {len(pairs)} pairs")
    return make_report("N8-GALE2", expected, observed, seed=seed, primes=primes, warnings=anomalies)
