"""The secant line identity relating M8 and N'8.

For points p, q of M8 (inhomogeneous coordinates p_i, q_i) and a scalar t,
the binomial quartic dC/dY3 evaluated on p + tq equals t times the 4 x 4
tableau with columns 1234, 5678 evaluated at (1; p_i; q_i; p_i q_i). So the
polar map of the cubic sends secant lines of M8 to points of N'8.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from eightpoints import config
from eightpoints.reports import VerificationReport, make_report
from eightpoints.seeding import derive_seed, substream
from eightpoints.symrep.group_action import Permutation, identity, random_permutation
from eightpoints.tableaux.configuration import Configuration, evaluate_columns
from eightpoints.tableaux.tableau import relabel_columns

logger = logging.getLogger(__name__)

Columns = Tuple[Tuple[int, ...], ...]

# dC/dY3 on M8 is T1 * T2 - T3 * T4
BINOMIAL: Tuple[Tuple[Columns, Columns], Tuple[Columns, Columns]] = (
    (((1, 2), (3, 4), (5, 6), (7, 8)), ((1, 3), (2, 4), (5, 7), (6, 8))),
    (((1, 2), (3, 4), (5, 7), (6, 8)), ((1, 3), (2, 4), (5, 6), (7, 8))),
)
SEGRE_COLUMNS: Columns = ((1, 2, 3, 4), (5, 6, 7, 8))
VALUE_BOUND = 50


def line_configuration(values: Sequence) -> Configuration:
    return Configuration.of([(1, v) for v in values])


def segre_configuration(p: Sequence, q: Sequence) -> Configuration:
    """Eight points (1; p_i; q_i; p_i q_i) of P^3."""
    return Configuration.of([(1, a, b, a * b) for a, b in zip(p, q)])


def binomial_on_secant(p: Sequence, q: Sequence, t, g: Permutation) -> object:
    """The relabelled binomial evaluated at p + tq, each tableau taken on p and q separately."""
    line_p = line_configuration(p)
    line_q = line_configuration(q)
    total = 0
    for sign_, (left, right) in zip((1, -1), BINOMIAL):
        factors = []
        for columns in (left, right):
            columns = relabel_columns(columns, g)
            factors.append(evaluate_columns(columns, line_p) + t * evaluate_columns(columns, line_q))
        total = total + sign_ * factors[0] * factors[1]
    return total


def segre_side(p: Sequence, q: Sequence, t, g: Permutation) -> object:
    return t * evaluate_columns(relabel_columns(SEGRE_COLUMNS, g), segre_configuration(p, q))


def _sample(rng: np.random.Generator) -> Tuple[List[int], List[int], int]:
    p = [int(x) for x in rng.integers(-VALUE_BOUND, VALUE_BOUND + 1, size=8)]
    q = [int(x) for x in rng.integers(-VALUE_BOUND, VALUE_BOUND + 1, size=8)]
    t = 0
    while t == 0:
        t = int(rng.integers(-VALUE_BOUND, VALUE_BOUND + 1))
    return p, q, t


def verify_secant_identity(
    trials: int = 100,
    translates: int = 3,
    swap_trials: int = 10,
    master_seed: int = config.MASTER_SEED,
) -> VerificationReport:
    """Both sides agree exactly at random (p, q, t), at t = 0, and under relabelling of the points."""
    rng = substream(master_seed, "n8.secant_identity")
    group = [identity(8)] + [random_permutation(8, rng) for _ in range(translates)]
    mismatches = 0
    nonzero = 0
    warnings: List[str] = []
    for i in range(trials):
        p, q, t = _sample(rng)
        for g in group:
            left = binomial_on_secant(p, q, t, g)
            right = segre_side(p, q, t, g)
            if left != right:
                mismatches += 1
                warnings.append(f"trial {i}, relabelling {g}: {left} != {right}")
            elif left != 0:
                nonzero += 1

    at_zero = 0
    for _ in range(trials):
        p, q, _t = _sample(rng)
        if binomial_on_secant(p, q, 0, identity(8)) == 0 and segre_side(p, q, 0, identity(8)) == 0:
            at_zero += 1

    # p <-> q with t -> 1/t multiplies both sides by 1/t^2
    swapped = 0
    for _ in range(swap_trials):
        p, q, t = _sample(rng)
        inverse_t = Fraction(1, t)
        direct = binomial_on_secant(p, q, t, identity(8))
        mirrored = binomial_on_secant(q, p, inverse_t, identity(8))
        if Fraction(t * t) * mirrored == direct and segre_side(q, p, inverse_t, identity(8)) * t * t == direct:
            swapped += 1

    checks = trials * len(group)
    observed = {"checks": checks, "mismatches": mismatches, "t_zero_vanishing": at_zero, "swap_consistent": swapped}
    expected = {"checks": checks, "mismatches": 0, "t_zero_vanishing": trials, "swap_consistent": swap_trials}
    if nonzero == 0:
        warnings.append("every sampled value was zero")
    logger.info(f"Secant identity: {checks - mismatches}/{checks} exact agreements, {nonzero} nonzero")
    return make_report(
        "N8-SECANT-ID",
        expected,
        observed,
        seed=derive_seed(master_seed, "n8.secant_identity"),
        warnings=warnings,
    )
