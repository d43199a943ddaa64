"""Straightening onto the semistandard basis.

The leftmost row violation between two adjacent columns A <= B (A[r] > B[r])
is removed with the Garnir relation on the m + 1 entries A[r:] + B[:r+1]:
the alternating sum over all ways of sharing them out between the two columns
vanishes, so the tableau equals minus the sum of the other shares. Every other
share replaces A by a lexicographically smaller column, which strictly lowers
the sorted column list; the recursion therefore terminates.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from functools import lru_cache
from itertools import combinations
from typing import Dict, Optional, Tuple

from eightpoints.tableaux.tableau import (
    Column,
    Tableau,
    TableauSum,
    canonical_columns,
    inversion_parity,
)

logger = logging.getLogger(__name__)

Columns = Tuple[Column, ...]


def first_violation(columns: Columns) -> Optional[Tuple[int, int]]:
    """(column index i, row r) of the leftmost weak-row violation between columns i and i+1."""
    for i in range(len(columns) - 1):
        left, right = columns[i], columns[i + 1]
        for r in range(len(left)):
            if left[r] > right[r]:
                return i, r
    return None


def _accumulate(out: Dict[Columns, int], columns, factor: int) -> None:
    sign, canon = canonical_columns(columns)
    if not sign:
        return
    for key, coeff in _straighten_columns(canon).items():
        out[key] += factor * sign * coeff


def _two_row_exchange(columns: Columns, i: int, out: Dict[Columns, int]) -> None:
    # nested pair (a,d),(b,c) with a<b<c<d: [ad][bc] = [ac][bd] - [ab][cd]
    (a, d), (b, c) = columns[i], columns[i + 1]
    rest_left, rest_right = columns[:i], columns[i + 2:]
    _accumulate(out, rest_left + ((a, c), (b, d)) + rest_right, 1)
    _accumulate(out, rest_left + ((a, b), (c, d)) + rest_right, -1)


def _garnir_exchange(columns: Columns, i: int, r: int, out: Dict[Columns, int]) -> None:
    left, right = columns[i], columns[i + 1]
    pool = left[r:] + right[:r + 1]
    position = {x: k for k, x in enumerate(pool)}
    identity = frozenset(left[r:])
    for chosen in combinations(sorted(pool), len(left) - r):
        if frozenset(chosen) == identity:
            continue
        rest = tuple(x for x in sorted(pool) if x not in chosen)
        sgn = inversion_parity([position[x] for x in chosen + rest])
        new_left = left[:r] + chosen
        new_right = rest + right[r + 1:]
        _accumulate(out, columns[:i] + (new_left, new_right) + columns[i + 2:], -sgn)


@lru_cache(maxsize=None)
def _straighten_columns(columns: Columns) -> Dict[Columns, int]:
    violation = first_violation(columns)
    if violation is None:
        return {columns: 1}
    i, r = violation
    out: Dict[Columns, int] = defaultdict(int)
    if len(columns[0]) == 2:
        _two_row_exchange(columns, i, out)
    else:
        _garnir_exchange(columns, i, r, out)
    return {k: v for k, v in out.items() if v}


def straighten_tableau(t: Tableau) -> TableauSum:
    """Express one tableau in the semistandard basis."""
    return TableauSum(
        {Tableau(t.m, t.n, key): coeff for key, coeff in _straighten_columns(t.columns).items()}
    )


def straighten(s: TableauSum) -> TableauSum:
    """Rewrite a sum of tableaux as a combination of semistandard tableaux."""
    out: Dict[Tableau, int] = defaultdict(int)
    for t, coeff in s.items():
        for key, c in _straighten_columns(t.columns).items():
            out[Tableau(t.m, t.n, key)] += coeff * c
    return TableauSum(out)


def straighten_cache_info():
    return _straighten_columns.cache_info()
