"""The skew-invariant cubic in the Kempe coordinates.

Up to scalar there is one cubic in Sym^3 R_1 on which S_8 acts by the sign.
Its normal form in the Kempe names is

    X1 X2 (X1 + X2) + X1 X2 (Z1 + ... + Z8)
    - (X1 Y2 Y4 + X2 Y3 Y1)
    + (X1 Z2 Z6 + X2 Z3 Z7 + X1 Z4 Z8 + X2 Z5 Z1)
    + (Y1 Z2 Z6 + Y2 Z3 Z7 + Y3 Z4 Z8 + Y4 Z5 Z1)
    - sum over i of Z_i Z_(i+1) Z_(i+2)        (indices mod 8)

and the same form, up to a scalar, comes out of skew-averaging the cube of
a single matching over the whole group.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from eightpoints.exactcore.polynomial import SparsePolynomial
from eightpoints.exactcore.scalars import ExactScalar, divide, exact
from eightpoints.m8.action import action_generators, adjacent_transposition_actions
from eightpoints.m8.kempe import KEMPE_NAMES, KempeBasis
from eightpoints.reports import VerificationReport, make_report
from eightpoints.symrep.group_action import ActionMatrix, act_on_polynomial, sign, skew_average

logger = logging.getLogger(__name__)

CubicForm = SparsePolynomial

# seed monomials for skew averaging, tried in order until one survives
SKEW_SEEDS: Tuple[Tuple[str, ...], ...] = (
    ("X1", "X1", "X1"),
    ("X1", "X1", "X2"),
    ("X1", "X2", "Z1"),
)


def _monomial(*factors: str) -> SparsePolynomial:
    return SparsePolynomial.from_monomial_string(KEMPE_NAMES, factors)


def _z(i: int) -> str:
    return f"Z{(i - 1) % 8 + 1}"


def build_cubic_explicit() -> CubicForm:
    """The normal form above, as a polynomial over the 14 Kempe names."""
    terms: List[Tuple[int, Sequence[str]]] = [
        (1, ("X1", "X1", "X2")),
        (1, ("X1", "X2", "X2")),
    ]
    terms += [(1, ("X1", "X2", _z(i))) for i in range(1, 9)]
    terms += [(-1, ("X1", "Y2", "Y4")), (-1, ("X2", "Y3", "Y1"))]
    terms += [
        (1, ("X1", "Z2", "Z6")),
        (1, ("X2", "Z3", "Z7")),
        (1, ("X1", "Z4", "Z8")),
        (1, ("X2", "Z5", "Z1")),
    ]
    terms += [
        (1, ("Y1", "Z2", "Z6")),
        (1, ("Y2", "Z3", "Z7")),
        (1, ("Y3", "Z4", "Z8")),
        (1, ("Y4", "Z5", "Z1")),
    ]
    terms += [(-1, (_z(i), _z(i + 1), _z(i + 2))) for i in range(1, 9)]
    cubic = SparsePolynomial.zero(KEMPE_NAMES)
    for coeff, factors in terms:
        cubic = cubic + _monomial(*factors).scale(coeff)
    return cubic


def skew_defect(f: SparsePolynomial, action: ActionMatrix) -> SparsePolynomial:
    """g.f - sign(g) f; zero exactly when f is skew under g."""
    return act_on_polynomial(action, f) - f.scale(sign(action.g))


def is_skew(f: SparsePolynomial, actions: Sequence[ActionMatrix]) -> bool:
    return all(skew_defect(f, a).is_zero() for a in actions)


def proportionality(f: SparsePolynomial, reference: SparsePolynomial) -> ExactScalar:
    """The scalar c with f = c * reference, or 0 when f is not a multiple."""
    if reference.is_zero():
        raise ValueError("reference polynomial is zero")
    exps, ref_coeff = reference.leading_term()
    c = exact(Fraction(f.coefficient(exps)) / Fraction(ref_coeff))
    if c == 0 or f != reference.scale(c):
        return 0
    return c


def build_cubic_skew_average(basis: KempeBasis) -> Tuple[CubicForm, ExactScalar]:
    """Skew-average the cube of one matching over S_8.

    Returns the averaged cubic (unnormalised, integer coefficients) and the
    scalar relating it to the explicit normal form.
    """
    adjacent = adjacent_transposition_actions(basis)
    explicit = build_cubic_explicit()
    for factors in SKEW_SEEDS:
        averaged = skew_average(adjacent, _monomial(*factors))
        if averaged.is_zero():
            logger.debug(f"Skew average of {'*'.join(factors)} vanishes, trying next seed")
            continue
        scalar = proportionality(averaged, explicit)
        logger.info(
            f"Skew-averaged cubic from {'*'.join(factors)}: {len(averaged)} terms, scalar {scalar}"
        )
        return averaged, scalar
    logger.error("Every skew-averaging seed vanished")
    return SparsePolynomial.zero(KEMPE_NAMES), 0


def cubic_identities(cubic: CubicForm, basis: KempeBasis) -> Dict[str, object]:
    """Term count, the binomial partial dC/dY3, skewness on the generators and Euler's identity."""
    binomial = _monomial("Z4", "Z8") - _monomial("X2", "Y1")
    euler = SparsePolynomial.zero(KEMPE_NAMES)
    for x, d in zip(SparsePolynomial.generators(KEMPE_NAMES), cubic.gradient()):
        euler = euler + x * d
    transposition_action, rotation_action = action_generators(basis)
    return {
        "terms": len(cubic),
        "dC_dY3_is_binomial": cubic.derivative("Y3") == binomial,
        "skew_under_transposition": skew_defect(cubic, transposition_action).is_zero(),
        "skew_under_rotation": skew_defect(cubic, rotation_action).is_zero(),
        "euler_identity": euler == cubic.scale(3),
    }


def cubic_skew_report(basis: KempeBasis, cubic: Optional[CubicForm] = None) -> VerificationReport:
    cubic = cubic if cubic is not None else build_cubic_explicit()
    observed = cubic_identities(cubic, basis)
    expected = {
        "terms": 28,
        "dC_dY3_is_binomial": True,
        "skew_under_transposition": True,
        "skew_under_rotation": True,
        "euler_identity": True,
    }
    return make_report("M8-CUBIC-SKEW", expected, observed)


def cubic_average_report(basis: KempeBasis) -> VerificationReport:
    averaged, scalar = build_cubic_skew_average(basis)
    explicit = build_cubic_explicit()
    # read off at X1^2 X2, independently of the leading term proportionality() uses
    monomial = ("X1", "X1", "X2")
    pointwise = divide(averaged.coefficient_of(*monomial), explicit.coefficient_of(*monomial))
    observed = {"nonzero": not averaged.is_zero(), "proportional": scalar != 0, "scalar": str(scalar)}
    expected = {"nonzero": True, "proportional": True, "scalar": str(pointwise)}
    warnings = [] if scalar else ["skew average is not a multiple of the normal form"]
    return make_report("M8-CUBIC-AVG", expected, observed, warnings=warnings)
