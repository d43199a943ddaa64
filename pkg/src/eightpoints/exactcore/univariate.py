"""Dense univariate polynomials over the rationals.

Used for the resultant route through Hessian slices: Sylvester resultants,
gcd and squarefree parts, and Newton interpolation at small integer nodes.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Sequence, Tuple

from eightpoints.errors import RepeatedNodeError
from eightpoints.exactcore.scalars import ExactScalar, exact

logger = logging.getLogger(__name__)


class UnivariatePolynomial:
    """Coefficients stored lowest degree first; no trailing zeros."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[ExactScalar] = ()):
        coeffs = [exact(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs: Tuple[ExactScalar, ...] = tuple(coeffs)

    @classmethod
    def x(cls) -> "UnivariatePolynomial":
        return cls([0, 1])

    @classmethod
    def constant(cls, c: ExactScalar) -> "UnivariatePolynomial":
        return cls([c])

    @property
    def coefficients(self) -> Tuple[ExactScalar, ...]:
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def leading_coefficient(self) -> ExactScalar:
        return self._coeffs[-1] if self._coeffs else 0

    def __call__(self, x: ExactScalar) -> ExactScalar:
        acc: ExactScalar = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return exact(acc)

    def __eq__(self, other) -> bool:
        if isinstance(other, UnivariatePolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    __hash__ = None

    def __repr__(self) -> str:
        return f"UnivariatePolynomial({list(self._coeffs)})"

    def __add__(self, other: "UnivariatePolynomial") -> "UnivariatePolynomial":
        n = max(len(self._coeffs), len(other._coeffs))
        a = self._coeffs + (0,) * (n - len(self._coeffs))
        b = other._coeffs + (0,) * (n - len(other._coeffs))
        return UnivariatePolynomial(x + y for x, y in zip(a, b))

    def __neg__(self) -> "UnivariatePolynomial":
        return UnivariatePolynomial(-c for c in self._coeffs)

    def __sub__(self, other: "UnivariatePolynomial") -> "UnivariatePolynomial":
        return self + (-other)

    def __mul__(self, other) -> "UnivariatePolynomial":
        if not isinstance(other, UnivariatePolynomial):
            return UnivariatePolynomial(c * exact(other) for c in self._coeffs)
        if self.is_zero() or other.is_zero():
            return UnivariatePolynomial()
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return UnivariatePolynomial(out)

    __rmul__ = __mul__

    def derivative(self) -> "UnivariatePolynomial":
        return UnivariatePolynomial(i * c for i, c in enumerate(self._coeffs) if i)

    def monic(self) -> "UnivariatePolynomial":
        if self.is_zero():
            return self
        lc = Fraction(self.leading_coefficient())
        return UnivariatePolynomial(Fraction(c) / lc for c in self._coeffs)

    def divmod(self, divisor: "UnivariatePolynomial") -> Tuple["UnivariatePolynomial", "UnivariatePolynomial"]:
        """Quotient and remainder over the rationals."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self._coeffs]
        dlc = Fraction(divisor.leading_coefficient())
        dd = divisor.degree()
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            q = rem[k] / dlc
            if q:
                quot[k - dd] = q
                for i, c in enumerate(divisor._coeffs):
                    rem[k - dd + i] -= q * c
        return UnivariatePolynomial(quot), UnivariatePolynomial(rem[:dd] if dd > 0 else [])

    def primitive_integer(self) -> "UnivariatePolynomial":
        """Scale to coprime integer coefficients with positive leading coefficient."""
        if self.is_zero():
            return self
        fracs = [Fraction(c) for c in self._coeffs]
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        ints = [int(f * den) for f in fracs]
        g = 0
        for c in ints:
            g = gcd(g, c)
        if ints[-1] < 0:
            g = -g
        return UnivariatePolynomial(c // g for c in ints)


def _pseudo_remainder(f: List[int], g: List[int]) -> List[int]:
    """prem(f, g) over the integers, coefficient lists lowest degree first."""
    rem = list(f)
    dg = len(g) - 1
    lc = g[-1]
    while len(rem) - 1 >= dg and any(rem):
        shift = len(rem) - 1 - dg
        top = rem[-1]
        rem = [c * lc for c in rem]
        for i, c in enumerate(g):
            rem[shift + i] -= top * c
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def _primitive(coeffs: List[int]) -> List[int]:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    if g == 0:
        return coeffs
    if coeffs[-1] < 0:
        g = -g
    return [c // g for c in coeffs]


def polynomial_gcd(f: UnivariatePolynomial, g: UnivariatePolynomial) -> UnivariatePolynomial:
    """Monic gcd over the rationals via a primitive remainder sequence over the integers."""
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    a = list(f.primitive_integer().coefficients)
    b = list(g.primitive_integer().coefficients)
    if len(a) < len(b):
        a, b = b, a
    while b and len(b) > 1:
        r = _pseudo_remainder(a, b)
        a, b = b, _primitive(r) if r else []
    if b:
        # nonzero constant remainder
        return UnivariatePolynomial([1])
    return UnivariatePolynomial(a).monic()


def squarefree_part(f: UnivariatePolynomial) -> UnivariatePolynomial:
    """f / gcd(f, f'), made monic."""
    if f.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    g = polynomial_gcd(f, f.derivative())
    quotient, remainder = f.divmod(g)
    if not remainder.is_zero():
        raise ArithmeticError("gcd does not divide its argument")
    return quotient.monic()


def sylvester_matrix(f: UnivariatePolynomial, g: UnivariatePolynomial) -> List[List[ExactScalar]]:
    """Sylvester matrix with the rows of f on top, coefficients highest degree first."""
    m, n = f.degree(), g.degree()
    size = m + n
    fc = list(reversed(f.coefficients))
    gc = list(reversed(g.coefficients))
    rows = []
    for i in range(n):
        rows.append([0] * i + fc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gc + [0] * (size - n - 1 - i))
    return rows


def resultant(f: UnivariatePolynomial, g: UnivariatePolynomial) -> ExactScalar:
    """Determinant of the Sylvester matrix of f and g."""
    from eightpoints.exactcore.linalg import determinant

    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero polynomial")
    rows = sylvester_matrix(f, g)
    if not rows:
        return 1
    return determinant(rows)


def interpolate(samples: Sequence[Tuple[ExactScalar, ExactScalar]]) -> UnivariatePolynomial:
    """Unique polynomial of degree < len(samples) through the given points (Newton form)."""
    nodes = [Fraction(x) for x, _ in samples]
    if len(set(nodes)) != len(nodes):
        raise RepeatedNodeError(f"interpolation nodes repeat: {nodes}")
    table = [Fraction(y) for _, y in samples]
    n = len(nodes)
    newton = [table[0]] if n else []
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) / (nodes[i + level] - nodes[i])
            for i in range(n - level)
        ]
        newton.append(table[0])
    # expand the Newton form from the innermost coefficient outwards
    result = UnivariatePolynomial()
    for k in range(n - 1, -1, -1):
        result = result * UnivariatePolynomial([-nodes[k], 1]) + UnivariatePolynomial([newton[k]])
    return result


def power_series_inverse(coefficients: Sequence[ExactScalar], order: int) -> List[ExactScalar]:
    """First `order` coefficients of 1 / a(t) for a(0) != 0."""
    a = [Fraction(c) for c in coefficients]
    if not a or a[0] == 0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    inv: List[Fraction] = []
    for k in range(order):
        acc = Fraction(1 if k == 0 else 0)
        for j in range(1, min(k, len(a) - 1) + 1):
            acc -= a[j] * inv[k - j]
        inv.append(acc / a[0])
    return [exact(c) for c in inv]
