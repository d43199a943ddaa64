"""Generation and Hilbert data for N8 and its Gale quotient N'8.

N8 is generated by the 14 degree-one tableaux together with the 21 Gale
anti-invariant quadratics. N'8 is the image of N8 in P^13, the Proj of the
subring generated by R_1; its first relations appear in degree four.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, List, Sequence, Tuple

from eightpoints import config
from eightpoints.exactcore.series import (
    a_invariant,
    expand_hilbert_series,
    is_palindromic,
    polynomial_ring_dimension,
    series_numerator,
)
from eightpoints.n8.basis import degree1_coordinates, degree1_tableau_basis
from eightpoints.n8.gale import degree2_generators
from eightpoints.reports import VerificationReport, make_report
from eightpoints.seeding import derive_seed
from eightpoints.tableaux.configuration import Configuration, evaluate_invariant, sample_configuration
from eightpoints.tableaux.evaluation import EvaluationMatrix, Product, products_of_degree
from eightpoints.tableaux.ssyt import count_ssyt

logger = logging.getLogger(__name__)

N8_KRULL_DIMENSION = 10
N8_NUMERATOR = (1, 4, 31, 40, 31, 4, 1)
N8_A_INVARIANT = -4
NPRIME_NUMERATOR = (1, 4, 10, 20, 21)
NPRIME_RANKS = {1: 14, 2: 105, 3: 560, 4: 2366}
NPRIME_QUARTIC_RELATIONS = 14
NPRIME_NUMERATOR_DEGREE = 4
GENERATION_MARGIN = 20
GENERATOR_PRODUCTS = {2: 126, 3: 854, 4: 4816}
DEGREE1_COUNT = 14


# -----------------------
# Graded products
# -----------------------
def graded_products(weights: Sequence[int], degree: int) -> List[Product]:
    """Multisets of generator indices whose weights add up to `degree`."""
    out: List[Product] = []
    top = degree // min(weights)
    for count in range(1, top + 1):
        for combo in combinations_with_replacement(range(len(weights)), count):
            if sum(weights[i] for i in combo) == degree:
                out.append(combo)
    return out


@lru_cache(maxsize=1)
def generator_weights() -> Tuple[int, ...]:
    return (1,) * DEGREE1_COUNT + (2,) * len(degree2_generators())


def generator_values(configurations: Sequence[Configuration]) -> List[List[int]]:
    """Rows: the 14 degree-one then the 21 degree-two generators, sampled at each configuration."""
    basis = degree1_tableau_basis()
    quadratics = degree2_generators()
    degree1 = [degree1_coordinates(c, basis) for c in configurations]
    rows = [[point[v] for point in degree1] for v in range(DEGREE1_COUNT)]
    for q in quadratics:
        rows.append([evaluate_invariant(q, c) for c in configurations])
    return rows


def _configurations(seed: int, k: int, count: int) -> List[Configuration]:
    return [sample_configuration(4, 8, (seed, k, i)) for i in range(count)]


# -----------------------
# Generation in degrees one and two
# -----------------------
def verify_generation_degrees_1_2(
    degrees: Sequence[int] = (3, 4),
    master_seed: int = config.MASTER_SEED,
    primes: Sequence[int] = config.PRIMES,
) -> VerificationReport:
    """Products of the degree-one and degree-two generators span R_k for each k."""
    seed = derive_seed(master_seed, "n8.generation")
    weights = generator_weights()
    observed: Dict[str, object] = {}
    expected: Dict[str, object] = {}
    warnings: List[str] = []
    for k in degrees:
        dim = count_ssyt(4, 8, k)
        configurations = _configurations(seed, k, dim + GENERATION_MARGIN)
        products = graded_products(weights, k)
        matrix = EvaluationMatrix(generator_values(configurations), products)
        certificate = matrix.rank(primes, exact_fallback=k <= 3)
        if not certificate.agreed:
            warnings.append(f"degree {k}: modular ranks disagreed {certificate.per_prime}")
        observed[f"products_{k}"] = len(products)
        observed[f"rank_{k}"] = certificate.rank
        expected[f"products_{k}"] = GENERATOR_PRODUCTS[k]
        expected[f"rank_{k}"] = dim
        logger.info(f"N8 degree {k}: {len(products)} generator products, rank {certificate.rank} of {dim}")

    # degree-one generators alone fall 21 short in degree two
    control = _configurations(seed, 2, count_ssyt(4, 8, 2) + GENERATION_MARGIN)
    values = generator_values(control)[:DEGREE1_COUNT]
    control_rank = EvaluationMatrix(values, products_of_degree(range(DEGREE1_COUNT), 2)).rank(primes).rank
    observed["degree1_only_rank_2"] = control_rank
    expected["degree1_only_rank_2"] = 105
    return make_report("N8-GEN12", expected, observed, seed=seed, primes=primes, warnings=warnings)


# -----------------------
# Hilbert data
# -----------------------
def n8_hilbert_report(max_degree: int = 6, check_through: int = 8) -> VerificationReport:
    """SSYT counts of N8 against the series with numerator 1 + 4t + 31t^2 + 40t^3 + 31t^4 + 4t^5 + t^6."""
    counts = [count_ssyt(4, 8, k) for k in range(max_degree + 1)]
    numerator = series_numerator(counts, N8_KRULL_DIMENSION)
    expanded = expand_hilbert_series(N8_NUMERATOR, N8_KRULL_DIMENSION, check_through + 1)
    extra = [count_ssyt(4, 8, k) for k in range(max_degree + 1, check_through + 1)]
    observed = {
        "counts": counts,
        "numerator": numerator,
        "gorenstein": is_palindromic(numerator),
        "a_invariant": a_invariant(numerator, N8_KRULL_DIMENSION),
        "degree": sum(numerator),
        "series_matches_counts": expanded == counts + extra,
    }
    expected = {
        "counts": [1, 14, 126, 790, 3731, 14196, 45724][: max_degree + 1],
        "numerator": list(N8_NUMERATOR),
        "gorenstein": True,
        "a_invariant": N8_A_INVARIANT,
        "degree": 112,
        "series_matches_counts": True,
    }
    logger.info(f"N8 Hilbert numerator {numerator}")
    return make_report("N8-HILB", expected, observed)


def nprime_numerator(ranks: Dict[str, int]) -> List[int]:
    """h(t) of N'8 from the Hilbert values R'_k; unmeasured k <= 4 assume only the quartic relations."""
    values = [1]
    for k in range(1, NPRIME_NUMERATOR_DEGREE + 1):
        if str(k) in ranks:
            values.append(ranks[str(k)])
        else:
            relations = NPRIME_QUARTIC_RELATIONS if k == NPRIME_NUMERATOR_DEGREE else 0
            values.append(polynomial_ring_dimension(DEGREE1_COUNT, k) - relations)
    return series_numerator(values, N8_KRULL_DIMENSION)


def nprime_hilbert_report(
    max_degree: int = 4,
    master_seed: int = config.MASTER_SEED,
    primes: Sequence[int] = config.PRIMES,
) -> VerificationReport:
    """Ranks of Sym^k R_1 on sampled configurations: the Hilbert function of N'8."""
    seed = derive_seed(master_seed, "n8.nprime")
    basis = degree1_tableau_basis()
    ranks: Dict[str, int] = {}
    relations: Dict[str, int] = {}
    for k in range(1, max_degree + 1):
        forms = polynomial_ring_dimension(DEGREE1_COUNT, k)
        configurations = _configurations(seed, k, forms + GENERATION_MARGIN)
        points = [degree1_coordinates(c, basis) for c in configurations]
        values = [[p[v] for p in points] for v in range(DEGREE1_COUNT)]
        matrix = EvaluationMatrix(values, products_of_degree(range(DEGREE1_COUNT), k))
        rank = matrix.rank(primes, exact_fallback=k <= 2).rank
        ranks[str(k)] = rank
        relations[str(k)] = forms - rank
        logger.info(f"N'8 degree {k}: rank {rank}")
    numerator = nprime_numerator(ranks)
    series = expand_hilbert_series(numerator, N8_KRULL_DIMENSION, max_degree + 1)
    observed = {
        "ranks": ranks,
        "relations": relations,
        "numerator": numerator,
        "series": series[1:],
        "degree": sum(numerator),
    }
    expected = {
        "ranks": {str(k): NPRIME_RANKS[k] for k in range(1, max_degree + 1)},
        "relations": {str(k): (NPRIME_QUARTIC_RELATIONS if k == 4 else 0) for k in range(1, max_degree + 1)},
        "numerator": list(NPRIME_NUMERATOR),
        "series": [NPRIME_RANKS[k] for k in range(1, max_degree + 1)],
        "degree": 56,
    }
    logger.info(f"N'8 Hilbert numerator {numerator}, degree {sum(numerator)}")
    return make_report("N8-NPRIME-HILB", expected, observed, seed=seed, primes=primes)
