"""The skew quintic relation on N'8.

Skew-averaging over S_8 projects Sym^5 R_1(N8) onto its sign-isotypic part,
which is 4-dimensional. Evaluating a basis of that part at configurations of
eight points in P^3 leaves a 1-dimensional kernel: the unique skew quintic
vanishing on N'8. Its partial derivatives are quartic relations, so N'8 sits
inside its singular locus.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from eightpoints import config
from eightpoints.errors import DegenerateSampleError
from eightpoints.exactcore.linalg import ExactMatrix, ModularMatrix, exact_kernel, rank
from eightpoints.exactcore.polynomial import SparsePolynomial, monomials_of_degree
from eightpoints.n8.basis import (
    N8Basis,
    adjacent_transposition_actions_n8,
    degree1_coordinates,
    degree1_tableau_basis,
    s8_action_n8,
)
from eightpoints.reports import VerificationReport, make_report
from eightpoints.seeding import derive_seed, substream
from eightpoints.symrep.checks import SIGN, space_degree_one
from eightpoints.symrep.characters import multiplicity, symmetric_power_character
from eightpoints.symrep.group_action import act_on_polynomial, rotation, sign, skew_average, transposition
from eightpoints.symrep.plethysm import invariant_ring_character
from eightpoints.tableaux.configuration import sample_configuration

logger = logging.getLogger(__name__)

QuinticForm = SparsePolynomial

SKEW_DIMENSION = 4
SEED_BUDGET = 16
SEED_MONOMIALS = 3
SEED_COEFF_BOUND = 5
EVALUATION_TRIALS = 12


@dataclass
class QuinticConstruction:
    quintic: QuinticForm
    skew_span: List[QuinticForm]
    seeds_tried: int
    evaluations: int
    kernel_dimension: int
    warnings: List[str] = field(default_factory=list)


def _random_seed_polynomial(names: Sequence[str], rng: np.random.Generator) -> SparsePolynomial:
    monomials = monomials_of_degree(len(names), 5)
    terms: Dict[Tuple[int, ...], int] = {}
    for idx in rng.choice(len(monomials), size=SEED_MONOMIALS, replace=False):
        coeff = 0
        while coeff == 0:
            coeff = int(rng.integers(-SEED_COEFF_BOUND, SEED_COEFF_BOUND + 1))
        terms[monomials[int(idx)]] = coeff
    return SparsePolynomial(names, terms)


def _span_rank(span: Sequence[SparsePolynomial], monomials, prime: int) -> int:
    rows = [f.coefficient_vector(monomials) for f in span]
    return rank(ModularMatrix.from_rows(rows, prime))


def skew_quintic_span(
    basis: N8Basis,
    seed: int,
    prime: int = config.PRIMES[0],
    budget: int = SEED_BUDGET,
) -> Tuple[List[QuinticForm], int]:
    """Skew averages of random quintics until they span the sign-isotypic part of Sym^5."""
    names = basis.names
    adjacent = adjacent_transposition_actions_n8(basis)
    monomials = monomials_of_degree(len(names), 5)
    rng = np.random.default_rng(seed)
    span: List[SparsePolynomial] = []
    for attempt in range(1, budget + 1):
        averaged = skew_average(adjacent, _random_seed_polynomial(names, rng))
        if averaged.is_zero():
            logger.debug(f"Quintic seed {attempt} averaged to zero")
            continue
        candidate = span + [averaged.primitive()]
        if _span_rank(candidate, monomials, prime) == len(candidate):
            span = candidate
            logger.info(f"Skew quintic span reached dimension {len(span)} after {attempt} seeds")
        if len(span) == SKEW_DIMENSION:
            return span, attempt
    logger.error(f"Skew quintic span stuck at dimension {len(span)} after {budget} seeds")
    raise DegenerateSampleError(f"skew span has dimension {len(span)} < {SKEW_DIMENSION}; add seeds")


def construct_skew_quintic(
    seed: Optional[int] = None,
    trials: int = EVALUATION_TRIALS,
    master_seed: int = config.MASTER_SEED,
) -> QuinticConstruction:
    """The unique skew quintic vanishing on N'8, with integer coefficients of content 1."""
    basis = degree1_tableau_basis()
    seed = seed if seed is not None else derive_seed(master_seed, "n8.quintic")
    span, seeds_tried = skew_quintic_span(basis, seed)

    eval_seed = derive_seed(master_seed, "n8.quintic.evaluation")
    points = [degree1_coordinates(sample_configuration(4, 8, (eval_seed, i)), basis) for i in range(trials)]
    # row c: values of the spanning quintics at configuration c
    rows = [[q.evaluate(p) for q in span] for p in points]
    kernel = exact_kernel(ExactMatrix.from_rows(rows))
    warnings: List[str] = []
    if len(kernel) != 1:
        logger.error(f"Quintic evaluation kernel has dimension {len(kernel)}")
        warnings.append(f"evaluation kernel has dimension {len(kernel)}, expected 1")
    if not kernel:
        return QuinticConstruction(SparsePolynomial.zero(basis.names), span, seeds_tried, trials, 0, warnings)

    quintic = SparsePolynomial.zero(basis.names)
    for coeff, q in zip(kernel[0], span):
        quintic = quintic + q.scale(coeff)
    quintic = quintic.primitive()
    logger.info(f"Skew quintic: {len(quintic)} terms, leading term {quintic.leading_term()}")
    return QuinticConstruction(quintic, span, seeds_tried, trials, len(kernel), warnings)


def skew_check(q: QuinticForm, basis: Optional[N8Basis] = None) -> Dict[str, bool]:
    """g.Q = sign(g) Q for the generators (1 2) and the rotation of S_8."""
    basis = basis or degree1_tableau_basis()
    out = {}
    for label, g in (("transposition", transposition(8, 1, 2)), ("rotation", rotation(8))):
        image = act_on_polynomial(s8_action_n8(g, basis), q)
        out[label] = image == q.scale(sign(g))
    return out


def quintic_report(
    construction: Optional[QuinticConstruction] = None,
    master_seed: int = config.MASTER_SEED,
) -> VerificationReport:
    """Span dimension, kernel dimension, skewness and the character count it must agree with."""
    construction = construction or construct_skew_quintic(master_seed=master_seed)
    r1 = space_degree_one()
    observed = {
        "skew_span": len(construction.skew_span),
        "kernel_dimension": construction.kernel_dimension,
        "image_dimension": len(construction.skew_span) - construction.kernel_dimension,
        "sign_in_sym5_r1": multiplicity(SIGN, symmetric_power_character(r1, 5)),
        "sign_in_r5_n8": multiplicity(SIGN, invariant_ring_character(4, 8, 5)),
        "nonzero": not construction.quintic.is_zero(),
        "homogeneous_quintic": construction.quintic.is_homogeneous(5),
        "skew": skew_check(construction.quintic),
    }
    expected = {
        "skew_span": SKEW_DIMENSION,
        "kernel_dimension": 1,
        "image_dimension": 3,
        "sign_in_sym5_r1": SKEW_DIMENSION,
        "sign_in_r5_n8": 3,
        "nonzero": True,
        "homogeneous_quintic": True,
        "skew": {"transposition": True, "rotation": True},
    }
    warnings = list(construction.warnings)
    if observed["image_dimension"] != observed["sign_in_r5_n8"]:
        warnings.append(
            f"evaluation image dimension {observed['image_dimension']} disagrees with "
            f"sign multiplicity {observed['sign_in_r5_n8']} in R_5"
        )
    return make_report(
        "N8-QUINTIC",
        expected,
        observed,
        seed=derive_seed(master_seed, "n8.quintic"),
        warnings=warnings,
    )


def verify_quintic_singular_on_nprime(
    q: QuinticForm,
    trials: int = 50,
    master_seed: int = config.MASTER_SEED,
) -> VerificationReport:
    """All partials of Q vanish at the degree-one image of random configurations."""
    basis = degree1_tableau_basis()
    partials = q.gradient()
    seed = derive_seed(master_seed, "n8.quintic_singular")
    zeros = 0
    quintic_nonzero = 0
    warnings: List[str] = []
    for i in range(trials):
        point = degree1_coordinates(sample_configuration(4, 8, (seed, i)), basis)
        bad = [basis.names[v] for v, d in enumerate(partials) if d.evaluate(point) != 0]
        zeros += len(partials) - len(bad)
        if bad:
            warnings.append(f"configuration ({seed}, {i}): nonzero partials {bad}")
        if q.evaluate(point) != 0:
            quintic_nonzero += 1

    rng = substream(master_seed, "n8.quintic_singular.control")
    control_found = False
    for _ in range(config.REJECTION_BUDGET):
        point = [int(x) for x in rng.integers(-config.COORD_BOUND, config.COORD_BOUND + 1, size=len(partials))]
        if any(d.evaluate(point) != 0 for d in partials):
            control_found = True
            break
    if not control_found:
        warnings.append("negative control: no point off N'8 found within budget")

    observed = {"zeros": zeros, "quintic_nonzero": quintic_nonzero, "negative_control_found": control_found}
    expected = {"zeros": 14 * trials, "quintic_nonzero": 0, "negative_control_found": True}
    return make_report("N8-QSING", expected, observed, seed=seed, warnings=warnings)
