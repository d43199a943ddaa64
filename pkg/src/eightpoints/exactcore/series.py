"""Hilbert series bookkeeping: h(t) / (1 - t)^r and its Hilbert function."""

from __future__ import annotations

from math import comb
from typing import List, Sequence

from eightpoints.exactcore.scalars import ExactScalar, exact
from eightpoints.exactcore.univariate import power_series_inverse


def one_minus_t_power(r: int) -> List[int]:
    """Coefficients of (1 - t)^r, lowest degree first."""
    return [(-1) ** k * comb(r, k) for k in range(r + 1)]


def expand_hilbert_series(numerator: Sequence[ExactScalar], r: int, order: int) -> List[ExactScalar]:
    """First `order` values of the Hilbert function of h(t) / (1 - t)^r."""
    inv = power_series_inverse(one_minus_t_power(r), order)
    out = []
    for k in range(order):
        out.append(exact(sum(numerator[j] * inv[k - j] for j in range(min(k, len(numerator) - 1) + 1))))
    return out


def series_numerator(values: Sequence[ExactScalar], r: int) -> List[ExactScalar]:
    """h(t) = (1 - t)^r * sum f(k) t^k, truncated to len(values) and trailing zeros."""
    factor = one_minus_t_power(r)
    h = []
    for k in range(len(values)):
        h.append(exact(sum(factor[j] * values[k - j] for j in range(min(k, r) + 1))))
    while h and h[-1] == 0:
        h.pop()
    return h


def finite_difference(values: Sequence[ExactScalar], order: int) -> ExactScalar:
    """order-th forward difference at the first of order + 1 consecutive values."""
    if len(values) != order + 1:
        raise ValueError(f"need {order + 1} consecutive values, got {len(values)}")
    return exact(sum((-1) ** (order - j) * comb(order, j) * values[j] for j in range(order + 1)))


def is_palindromic(coefficients: Sequence[ExactScalar]) -> bool:
    return list(coefficients) == list(reversed(coefficients))


def a_invariant(numerator: Sequence[ExactScalar], r: int) -> int:
    """deg h - r."""
    return len(numerator) - 1 - r


def polynomial_ring_dimension(nvars: int, k: int) -> int:
    """dim of degree-k forms in nvars variables; 0 for k < 0."""
    return comb(k + nvars - 1, nvars - 1) if k >= 0 else 0
