"""Semistandard tableaux of rectangular shape: counting and enumeration.

The number of semistandard m x (dn/m) tableaux with content (d, ..., d) is
the dimension of the degree-d invariants of n points in P^(m-1).
"""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import combinations
from typing import Iterator, List, Tuple

from eightpoints.errors import DimensionMismatchError
from eightpoints.tableaux.tableau import Column, Tableau

logger = logging.getLogger(__name__)


def _shape(m: int, n: int, d: int) -> int:
    if m < 1 or n < 1 or d < 0:
        raise DimensionMismatchError(f"invalid parameters m={m}, n={n}, d={d}")
    if (d * n) % m:
        raise DimensionMismatchError(f"m={m} does not divide d*n={d * n}")
    return d * n // m


@lru_cache(maxsize=None)
def _all_columns(m: int, n: int) -> Tuple[Column, ...]:
    return tuple(combinations(range(1, n + 1), m))


def _candidates(m: int, n: int, previous: Column, remaining: Tuple[int, ...], slots: int) -> List[Column]:
    # values that must appear in every remaining column
    forced = {v + 1 for v, k in enumerate(remaining) if k == slots}
    out = []
    for col in _all_columns(m, n):
        if any(a < b for a, b in zip(col, previous)):
            continue
        if any(remaining[x - 1] == 0 for x in col):
            continue
        if not forced.issubset(col):
            continue
        out.append(col)
    return out


@lru_cache(maxsize=None)
def _count(m: int, n: int, previous: Column, remaining: Tuple[int, ...], slots: int) -> int:
    if slots == 0:
        return 1 if not any(remaining) else 0
    if any(k > slots for k in remaining):
        return 0
    total = 0
    for col in _candidates(m, n, previous, remaining, slots):
        rest = list(remaining)
        for x in col:
            rest[x - 1] -= 1
        total += _count(m, n, col, tuple(rest), slots - 1)
    return total


def _generate(m: int, n: int, prefix: List[Column], remaining: Tuple[int, ...], slots: int) -> Iterator[Tuple[Column, ...]]:
    if slots == 0:
        if not any(remaining):
            yield tuple(prefix)
        return
    previous = prefix[-1] if prefix else (0,) * m
    for col in _candidates(m, n, previous, remaining, slots):
        rest = list(remaining)
        for x in col:
            rest[x - 1] -= 1
        rest_t = tuple(rest)
        if _count(m, n, col, rest_t, slots - 1):
            prefix.append(col)
            yield from _generate(m, n, prefix, rest_t, slots - 1)
            prefix.pop()


def count_ssyt(m: int, n: int, d: int) -> int:
    slots = _shape(m, n, d)
    return _count(m, n, (0,) * m, (d,) * n, slots)


def iter_ssyt(m: int, n: int, d: int) -> Iterator[Tableau]:
    """Semistandard tableaux in lexicographic order of their column lists."""
    slots = _shape(m, n, d)
    if slots == 0:
        yield Tableau(m, n, ())
        return
    for columns in _generate(m, n, [], (d,) * n, slots):
        yield Tableau(m, n, columns)


def enumerate_ssyt(m: int, n: int, d: int) -> Tuple[int, Iterator[Tableau]]:
    """Count and a deterministic iterator over the semistandard tableaux."""
    return count_ssyt(m, n, d), iter_ssyt(m, n, d)
