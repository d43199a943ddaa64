"""Claims about the quadrics cutting out M8: singular locus, syzygies, generation."""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence

from eightpoints import config
from eightpoints.exactcore.linalg import ExactMatrix, certified_rank, modular_kernel
from eightpoints.exactcore.polynomial import SparsePolynomial, monomials_of_degree
from eightpoints.m8.cubic import build_cubic_explicit
from eightpoints.m8.hilbert import m8_hilbert_function
from eightpoints.m8.kempe import KEMPE_NAMES, KempeBasis, kempe_coordinates
from eightpoints.reports import VerificationReport, make_report
from eightpoints.seeding import derive_seed, substream
from eightpoints.tableaux.configuration import sample_configuration
from eightpoints.tableaux.evaluation import EvaluationMatrix, products_of_degree
from eightpoints.tableaux.ssyt import count_ssyt

logger = logging.getLogger(__name__)

GENERATION_MARGIN = 20


def verify_m8_in_singular_locus(
    basis: KempeBasis,
    cubic: Optional[SparsePolynomial] = None,
    trials: int = 100,
    master_seed: int = config.MASTER_SEED,
) -> VerificationReport:
    """Every partial of the cubic vanishes at the Kempe point of a random configuration."""
    cubic = cubic if cubic is not None else build_cubic_explicit()
    partials = cubic.gradient()
    seed = derive_seed(master_seed, "m8.singular_locus")
    nonzero_partials = 0
    cubic_nonzero = 0
    warnings: List[str] = []
    for i in range(trials):
        point = kempe_coordinates(sample_configuration(2, 8, (seed, i)), basis)
        bad = [KEMPE_NAMES[v] for v, d in enumerate(partials) if d.evaluate(point) != 0]
        if bad:
            nonzero_partials += len(bad)
            warnings.append(f"configuration ({seed}, {i}): nonzero partials {bad}")
        if cubic.evaluate(point) != 0:
            cubic_nonzero += 1

    # negative control: a random point of P^13 is off M8
    rng = substream(master_seed, "m8.singular_locus.control")
    control_found = False
    for _ in range(config.REJECTION_BUDGET):
        point = [int(x) for x in rng.integers(-config.COORD_BOUND, config.COORD_BOUND + 1, size=14)]
        if any(d.evaluate(point) != 0 for d in partials):
            control_found = True
            break
    if not control_found:
        warnings.append("negative control: no point off M8 found within budget")

    observed = {
        "configurations": trials,
        "nonzero_partials": nonzero_partials,
        "cubic_nonzero": cubic_nonzero,
        "negative_control_found": control_found,
    }
    expected = {"configurations": trials, "nonzero_partials": 0, "cubic_nonzero": 0, "negative_control_found": True}
    return make_report("M8-SING", expected, observed, seed=seed, warnings=warnings)


def linear_syzygy_rows(cubic: SparsePolynomial) -> List[List[int]]:
    """Coefficient vectors of x_i * dC/dx_j in the 560 cubic monomials."""
    monomials = monomials_of_degree(len(KEMPE_NAMES), 3)
    xs = SparsePolynomial.generators(KEMPE_NAMES)
    partials = cubic.gradient()
    rows = []
    for x in xs:
        for d in partials:
            rows.append((x * d).coefficient_vector(monomials))
    return rows


def verify_no_linear_syzygies(
    cubic: Optional[SparsePolynomial] = None,
    primes: Sequence[int] = config.PRIMES,
) -> VerificationReport:
    """The 196 products x_i dC/dx_j are independent, so they fill I_3 of dimension 196."""
    cubic = cubic if cubic is not None else build_cubic_explicit()
    nvars = len(KEMPE_NAMES)
    sym3 = len(monomials_of_degree(nvars, 3))
    dim_r3 = count_ssyt(2, 8, 3)
    rows = linear_syzygy_rows(cubic)
    matrix = ExactMatrix.from_rows(rows)
    certificate = certified_rank(matrix.to_modular, primes, lambda: matrix)

    quadric_monomials = monomials_of_degree(nvars, 2)
    partial_matrix = ExactMatrix.from_rows([d.coefficient_vector(quadric_monomials) for d in cubic.gradient()])
    partial_rank = certified_rank(partial_matrix.to_modular, primes, lambda: partial_matrix)

    observed: Dict[str, object] = {
        "dim_sym3": sym3,
        "dim_r3": dim_r3,
        "dim_i3": sym3 - dim_r3,
        "rank": certificate.rank,
        "partials_rank": partial_rank.rank,
    }
    warnings: List[str] = []
    if certificate.rank < len(rows):
        # a syzygy sum_ij a_ij x_i dC/dx_j = 0 is a left kernel vector
        kernel = modular_kernel(matrix.transpose().to_modular(primes[0]))
        observed["kernel"] = [int(x) for x in kernel[0]]
        warnings.append(f"rank defect {len(rows) - certificate.rank} mod {primes[0]}")
    if not certificate.agreed:
        warnings.append(f"modular ranks disagreed: {certificate.per_prime}")
    expected = {"dim_sym3": 560, "dim_r3": 364, "dim_i3": 196, "rank": 196, "partials_rank": 14}
    return make_report("M8-SYZ", expected, observed, primes=primes, warnings=warnings)


def verify_kempe_generation(
    basis: KempeBasis,
    degrees: Sequence[int] = (2, 3),
    master_seed: int = config.MASTER_SEED,
    primes: Sequence[int] = config.PRIMES,
) -> VerificationReport:
    """Degree-k monomials in the Kempe coordinates span R_k: generation in degree one."""
    seed = derive_seed(master_seed, "m8.kempe_generation")
    observed: Dict[str, int] = {}
    expected: Dict[str, int] = {}
    for k in degrees:
        dim = count_ssyt(2, 8, k)
        configurations = [sample_configuration(2, 8, (seed, k, i)) for i in range(dim + GENERATION_MARGIN)]
        points = [kempe_coordinates(c, basis) for c in configurations]
        values = [[p[v] for p in points] for v in range(len(KEMPE_NAMES))]
        matrix = EvaluationMatrix(values, products_of_degree(range(len(KEMPE_NAMES)), k))
        observed[f"rank_{k}"] = matrix.rank(primes, exact_fallback=k <= 2).rank
        expected[f"rank_{k}"] = m8_hilbert_function(k)
        logger.info(f"Kempe monomials of degree {k}: rank {observed[f'rank_{k}']} of {dim}")
    return make_report("M8-KEMPE", expected, observed, seed=seed, primes=primes)
