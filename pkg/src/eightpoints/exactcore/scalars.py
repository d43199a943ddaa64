"""Exact rational scalars.

Coefficients are kept as Python ``int`` whenever they are integral and as
``fractions.Fraction`` otherwise; both are exact and interoperate.
"""

from fractions import Fraction
from numbers import Rational
from typing import Union

ExactScalar = Union[int, Fraction]


def exact(value: Union[int, Fraction, str]) -> ExactScalar:
    """Normalise to int when the denominator is 1."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return exact(Fraction(value))
    if hasattr(value, "item"):
        # numpy integer scalars
        return exact(value.item())
    if isinstance(value, Rational):
        return exact(Fraction(value.numerator, value.denominator))
    raise TypeError(f"not an exact scalar: {value!r}")


def divide(a: ExactScalar, b: ExactScalar) -> ExactScalar:
    """Exact quotient a / b."""
    if b == 0:
        raise ZeroDivisionError("division by zero scalar")
    return exact(Fraction(a) / Fraction(b))


def format_scalar(value: ExactScalar) -> str:
    return str(exact(value))
