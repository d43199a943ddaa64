"""Plane sections of the cubic and its Hessian.

On a random plane aA + bB + cC of P^13 the cubic restricts to a ternary cubic
F and its Hessian to a ternary form H of degree 14. Eliminating c gives

    R(a) = Res_c(F(a, 1, c), H(a, 1, c)),     deg R = 3 * 14 = 42,

whose roots are the intersection points of the two plane curves. The Hessian
vanishes to order two along the secant variety of M8, so R is a constant
times a square of a polynomial S of degree 21, one root per point of the
secant variety on the plane.

H is never expanded symbolically: its values on a 15 x 15 grid are exact
14 x 14 determinants, and the polynomial is recovered by interpolating first
in c and then in a.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

import numpy as np
from sympy import primerange
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor_sqf, gf_from_int_poly, gf_sqf_p

from eightpoints import config
from eightpoints.errors import DegenerateSampleError
from eightpoints.exactcore.linalg import determinant
from eightpoints.exactcore.polynomial import SparsePolynomial
from eightpoints.exactcore.univariate import UnivariatePolynomial, interpolate, resultant, squarefree_part
from eightpoints.m8.cubic import build_cubic_explicit
from eightpoints.reports import VerificationReport, make_report
from eightpoints.seeding import derive_seed, substream

logger = logging.getLogger(__name__)

PLANE_VARIABLES = ("a", "b", "c")
HESSIAN_DEGREE = 14
RESULTANT_DEGREE = 3 * HESSIAN_DEGREE
PLANE_BOUND = 3
RESAMPLE_BUDGET = 5
PATTERN_PRIMES = 3
MAX_PATTERN_PRIMES = 40
FIRST_PATTERN_PRIME = 1000

Bivariate = Dict[Tuple[int, int], int]


@dataclass
class SliceResult:
    plane_seed: int
    resultant_degree: int
    squarefree_degree: int
    square_times_constant: bool
    hessian_degree: int
    factor_patterns: Dict[int, List[int]] = field(default_factory=dict)
    possible_factor_degrees: List[int] = field(default_factory=list)
    resamples: int = 0

    @property
    def consistent_with_irreducible(self) -> bool:
        return not self.possible_factor_degrees

    def conclusions(self) -> Dict[str, object]:
        return {
            "resultant_degree": self.resultant_degree,
            "squarefree_degree": self.squarefree_degree,
            "square_times_constant": self.square_times_constant,
            "hessian_degree": self.hessian_degree,
            "consistent_with_irreducible": self.consistent_with_irreducible,
        }


# -----------------------
# Restriction to a plane
# -----------------------
def _plane_point(plane: Sequence[Sequence[int]], a: int, b: int, c: int) -> List[int]:
    A, B, C = plane
    return [a * x + b * y + c * z for x, y, z in zip(A, B, C)]


def restrict_to_plane(f: SparsePolynomial, plane: Sequence[Sequence[int]]) -> SparsePolynomial:
    """f(aA + bB + cC) as a ternary form."""
    a, b, c = SparsePolynomial.generators(PLANE_VARIABLES)
    images = [a * x + b * y + c * z for x, y, z in zip(*plane)]
    return f.substitute(images)


def ternary_in_c(f: SparsePolynomial, a: int) -> UnivariatePolynomial:
    """F(a, 1, c) as a polynomial in c."""
    coeffs: Dict[int, int] = {}
    for (ea, _eb, ec), coeff in f.terms.items():
        coeffs[ec] = coeffs.get(ec, 0) + coeff * a**ea
    top = max(coeffs, default=-1)
    return UnivariatePolynomial([coeffs.get(k, 0) for k in range(top + 1)])


def bivariate_in_c(h: Bivariate, a: int) -> UnivariatePolynomial:
    """H(a, 1, c) from the dehomogenised coefficients {(i, j): coefficient of a^i c^j}."""
    top = max((j for _, j in h), default=-1)
    coeffs = [0] * (top + 1)
    for (i, j), coeff in h.items():
        coeffs[j] += coeff * a**i
    return UnivariatePolynomial(coeffs)


class HessianSlice:
    """Values and interpolation of the Hessian determinant along a plane."""

    def __init__(self, cubic: SparsePolynomial):
        partials = cubic.gradient()
        self.entries = [[d.derivative(v) for v in cubic.variables] for d in partials]

    def value(self, point: Sequence[int]) -> int:
        rows = [[int(e.evaluate(point)) for e in row] for row in self.entries]
        return determinant(rows)

    def restrict(self, plane: Sequence[Sequence[int]]) -> Bivariate:
        """Coefficients of H(a, 1, c) by tensor interpolation on a 15 x 15 grid."""
        nodes = list(range(HESSIAN_DEGREE + 1))
        in_c: List[Tuple[int, ...]] = []
        for a in nodes:
            samples = [(c, self.value(_plane_point(plane, a, 1, c))) for c in nodes]
            poly = interpolate(samples)
            in_c.append(poly.coefficients + (0,) * (len(nodes) - len(poly.coefficients)))
        out: Bivariate = {}
        for j in nodes:
            poly = interpolate([(a, in_c[k][j]) for k, a in enumerate(nodes)])
            for i, coeff in enumerate(poly.coefficients):
                if coeff:
                    if isinstance(coeff, Fraction):
                        raise ArithmeticError("Hessian interpolation produced a non-integral coefficient")
                    out[(i, j)] = coeff
        return out


def homogenize(h: Bivariate, degree: int) -> SparsePolynomial:
    if any(i + j > degree for i, j in h):
        raise ArithmeticError(f"dehomogenised form exceeds degree {degree}")
    return SparsePolynomial(PLANE_VARIABLES, {(i, degree - i - j, j): c for (i, j), c in h.items()})


# -----------------------
# Factor-degree patterns
# -----------------------
def subset_sums(degrees: Sequence[int]) -> Set[int]:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def factor_pattern(s: UnivariatePolynomial, p: int) -> Optional[List[int]]:
    """Degrees of the irreducible factors of s mod p, or None if p is unsuitable."""
    integral = s.primitive_integer()
    coeffs = [int(c) for c in reversed(integral.coefficients)]
    if coeffs[0] % p == 0:
        return None
    f = gf_from_int_poly(coeffs, p)
    if not gf_sqf_p(f, p, ZZ):
        return None
    _, factors = gf_factor_sqf(f, p, ZZ)
    return sorted(len(g) - 1 for g in factors)


def possible_factor_degrees(
    s: UnivariatePolynomial,
    minimum_primes: int = PATTERN_PRIMES,
    maximum_primes: int = MAX_PATTERN_PRIMES,
) -> Tuple[Dict[int, List[int]], List[int]]:
    """Proper degrees a rational factor of s could have, given its patterns mod several primes.

    Stops once at least `minimum_primes` patterns leave no proper degree.
    """
    n = s.degree()
    candidates = set(range(1, n))
    patterns: Dict[int, List[int]] = {}
    for p in primerange(FIRST_PATTERN_PRIME, 10**6):
        if len(patterns) >= maximum_primes:
            break
        pattern = factor_pattern(s, p)
        if pattern is None:
            continue
        patterns[p] = pattern
        candidates &= subset_sums(pattern)
        if len(patterns) >= minimum_primes and not candidates:
            break
    return patterns, sorted(candidates)


# -----------------------
# One plane
# -----------------------
def analyse_plane(
    cubic: SparsePolynomial,
    hessian: HessianSlice,
    plane_seed: int,
    budget: int = RESAMPLE_BUDGET,
) -> SliceResult:
    rng = np.random.default_rng(plane_seed)
    for attempt in range(budget):
        plane = [[int(x) for x in rng.integers(-PLANE_BOUND, PLANE_BOUND + 1, size=len(cubic.variables))] for _ in range(3)]
        f = restrict_to_plane(cubic, plane)
        h = hessian.restrict(plane)
        # leading coefficients in c must survive for the resultant to have full degree
        if f.coefficient((0, 0, 3)) == 0 or h.get((0, HESSIAN_DEGREE), 0) == 0:
            logger.warning(f"Plane {plane_seed}/{attempt}: vanishing leading coefficient, resampling")
            continue
        samples = [(a, resultant(ternary_in_c(f, a), bivariate_in_c(h, a))) for a in range(RESULTANT_DEGREE + 1)]
        r = interpolate(samples)
        held_out = RESULTANT_DEGREE + 1
        if r(held_out) != resultant(ternary_in_c(f, held_out), bivariate_in_c(h, held_out)):
            raise ArithmeticError("resultant exceeds its degree bound")
        if r.degree() != RESULTANT_DEGREE:
            logger.warning(f"Plane {plane_seed}/{attempt}: resultant has degree {r.degree()}, resampling")
            continue
        s = squarefree_part(r)
        quotient, remainder = r.divmod(s * s)
        square = remainder.is_zero() and quotient.degree() == 0
        patterns, degrees = possible_factor_degrees(s)
        result = SliceResult(
            plane_seed=plane_seed,
            resultant_degree=r.degree(),
            squarefree_degree=s.degree(),
            square_times_constant=square,
            hessian_degree=homogenize(h, HESSIAN_DEGREE).degree(),
            factor_patterns=patterns,
            possible_factor_degrees=degrees,
            resamples=attempt,
        )
        logger.info(
            f"Plane {plane_seed}: deg R {result.resultant_degree}, deg S {result.squarefree_degree}, "
            f"patterns over {len(patterns)} primes"
        )
        return result
    logger.error(f"Plane {plane_seed}: {budget} degenerate samples")
    raise DegenerateSampleError(f"no usable plane for seed {plane_seed} within {budget} samples")


def secant_slice_analysis(
    cubic: Optional[SparsePolynomial] = None,
    planes: int = 3,
    master_seed: int = config.MASTER_SEED,
) -> VerificationReport:
    """Degree 21 and multiplicity 2 of the secant variety, read off random plane sections."""
    cubic = cubic if cubic is not None else build_cubic_explicit()
    hessian = HessianSlice(cubic)
    rng = substream(master_seed, "m8.secant")
    seeds = [int(x) for x in rng.integers(0, 2**62, size=planes)]
    results = [analyse_plane(cubic, hessian, s) for s in seeds]
    conclusions = [r.conclusions() for r in results]
    observed = {
        "planes": len(results),
        "conclusions": conclusions[0],
        "identical_across_planes": all(c == conclusions[0] for c in conclusions),
    }
    expected = {
        "planes": planes,
        "conclusions": {
            "resultant_degree": RESULTANT_DEGREE,
            "squarefree_degree": 21,
            "square_times_constant": True,
            "hessian_degree": HESSIAN_DEGREE,
            "consistent_with_irreducible": True,
        },
        "identical_across_planes": True,
    }
    warnings = [f"plane {r.plane_seed}: {r.resamples} resamples" for r in results if r.resamples]
    warnings += [
        f"plane {r.plane_seed}: factor degrees {r.possible_factor_degrees} not excluded"
        for r in results
        if not r.consistent_with_irreducible
    ]
    return make_report(
        "M8-SEC21",
        expected,
        observed,
        seed=derive_seed(master_seed, "m8.secant"),
        warnings=warnings,
    )
