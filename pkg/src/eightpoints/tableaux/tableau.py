"""Tableaux and formal sums of tableaux.

A tableau with m rows and entries in 1..n stands for the product of the m x m
determinants of its columns. Canonical form: each column strictly increasing,
columns sorted lexicographically. Sorting a column contributes the sign of the
sorting permutation; reordering columns contributes nothing.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from eightpoints.errors import DimensionMismatchError, ZeroInvariantError
from eightpoints.exactcore.scalars import ExactScalar, exact

Column = Tuple[int, ...]
Permutation = Tuple[int, ...]


def inversion_parity(seq: Sequence[int]) -> int:
    """+1 for an even number of inversions, -1 for odd."""
    inversions = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


def canonical_columns(columns: Iterable[Sequence[int]]) -> Tuple[int, Optional[Tuple[Column, ...]]]:
    """(sign, sorted columns), or (0, None) when some column repeats an entry."""
    sign = 1
    out = []
    for col in columns:
        col = tuple(col)
        if len(set(col)) != len(col):
            return 0, None
        sign *= inversion_parity(col)
        out.append(tuple(sorted(col)))
    out.sort()
    return sign, tuple(out)


def is_semistandard_columns(columns: Sequence[Column]) -> bool:
    """Columns strictly increasing and rows weakly increasing."""
    for col in columns:
        if any(col[k] >= col[k + 1] for k in range(len(col) - 1)):
            return False
    for left, right in zip(columns, columns[1:]):
        if any(a > b for a, b in zip(left, right)):
            return False
    return True


@dataclass(frozen=True)
class Tableau:
    m: int
    n: int
    columns: Tuple[Column, ...]

    def __post_init__(self):
        if any(len(col) != self.m for col in self.columns):
            raise DimensionMismatchError(f"every column must have {self.m} entries")
        content = Counter(x for col in self.columns for x in col)
        if any(not 1 <= x <= self.n for x in content):
            raise DimensionMismatchError(f"entries must lie in 1..{self.n}")
        total = len(self.columns) * self.m
        if total % self.n:
            raise DimensionMismatchError(f"{total} entries cannot hold 1..{self.n} equally often")
        d = total // self.n
        if any(content.get(x, 0) != d for x in range(1, self.n + 1)):
            raise DimensionMismatchError(f"each of 1..{self.n} must occur exactly {d} times")
        sign, canon = canonical_columns(self.columns)
        if canon != self.columns or sign != 1:
            raise DimensionMismatchError("tableau is not in canonical form; use normalize()")

    @property
    def degree(self) -> int:
        return len(self.columns) * self.m // self.n

    def is_semistandard(self) -> bool:
        return is_semistandard_columns(self.columns)

    def rows(self) -> List[Tuple[int, ...]]:
        return [tuple(col[r] for col in self.columns) for r in range(self.m)]

    def format(self) -> str:
        """Rows of whitespace-separated entries, one row per line."""
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows())

    def __mul__(self, other: "Tableau") -> "Tableau":
        return tableau_product(self, other)

    def __str__(self) -> str:
        return "/".join("".join(str(x) for x in row) for row in self.rows())


def normalize(raw: Sequence[Sequence[int]], n: int) -> Tuple[int, Tableau]:
    """Canonical tableau of a raw column array together with its sign."""
    columns = [tuple(col) for col in raw]
    if not columns:
        raise DimensionMismatchError("a tableau needs at least one column")
    m = len(columns[0])
    sign, canon = canonical_columns(columns)
    if canon is None:
        raise ZeroInvariantError(f"repeated entry in a column of {columns}")
    return sign, Tableau(m, n, canon)


def from_rows(rows: Sequence[Sequence[int]], n: int) -> Tuple[int, Tableau]:
    """Normalize a tableau given row by row."""
    return normalize(list(zip(*rows)), n)


def tableau_product(s: Tableau, t: Tableau) -> Tableau:
    """Product of invariants: concatenate the columns."""
    if s.m != t.m or s.n != t.n:
        raise DimensionMismatchError("tableaux of different shapes cannot be multiplied")
    _, canon = canonical_columns(s.columns + t.columns)
    return Tableau(s.m, s.n, canon)


def relabel_columns(columns: Iterable[Sequence[int]], g: Permutation) -> List[Column]:
    """Apply i -> g[i-1] to every entry."""
    return [tuple(g[x - 1] for x in col) for col in columns]


def relabel(t: Tableau, g: Permutation) -> Tuple[int, Tableau]:
    """Action of a permutation of the points on a tableau."""
    if len(g) != t.n:
        raise DimensionMismatchError(f"permutation of {len(g)} points acting on {t.n} points")
    return normalize(relabel_columns(t.columns, g), t.n)


class TableauSum:
    """Formal linear combination of canonical tableaux of a common shape."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Tableau, ExactScalar]] = None):
        cleaned: Dict[Tableau, ExactScalar] = {}
        shape = None
        for t, c in (terms or {}).items():
            key = (t.m, t.n, t.degree)
            if shape is None:
                shape = key
            elif key != shape:
                raise DimensionMismatchError(f"mixed shapes {shape} and {key} in one sum")
            c = exact(c)
            if c:
                cleaned[t] = c
        self._terms = cleaned

    @classmethod
    def of(cls, t: Tableau, coeff: ExactScalar = 1) -> "TableauSum":
        return cls({t: coeff})

    @classmethod
    def from_raw(cls, raw: Sequence[Sequence[int]], n: int, coeff: ExactScalar = 1) -> "TableauSum":
        """Sum holding a single raw tableau (zero if a column repeats)."""
        try:
            sign, t = normalize(raw, n)
        except ZeroInvariantError:
            return cls()
        return cls({t: sign * coeff})

    @property
    def terms(self) -> Mapping[Tableau, ExactScalar]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Tableau, ExactScalar]]:
        return iter(sorted(self._terms.items(), key=lambda item: item[0].columns))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "TableauSum") -> "TableauSum":
        out: Dict[Tableau, ExactScalar] = defaultdict(int, self._terms)
        for t, c in other._terms.items():
            out[t] += c
        return TableauSum(out)

    def __neg__(self) -> "TableauSum":
        return TableauSum({t: -c for t, c in self._terms.items()})

    def __sub__(self, other: "TableauSum") -> "TableauSum":
        return self + (-other)

    def scale(self, factor: ExactScalar) -> "TableauSum":
        return TableauSum({t: c * factor for t, c in self._terms.items()})

    def __mul__(self, other) -> "TableauSum":
        if not isinstance(other, TableauSum):
            return self.scale(other)
        out: Dict[Tableau, ExactScalar] = defaultdict(int)
        for s, a in self._terms.items():
            for t, b in other._terms.items():
                out[tableau_product(s, t)] += a * b
        return TableauSum(out)

    __rmul__ = scale

    def relabel(self, g: Permutation) -> "TableauSum":
        out: Dict[Tableau, ExactScalar] = defaultdict(int)
        for t, c in self._terms.items():
            sign, image = relabel(t, g)
            out[image] += sign * c
        return TableauSum(out)

    def __eq__(self, other) -> bool:
        if isinstance(other, TableauSum):
            return self._terms == other._terms
        return NotImplemented

    __hash__ = None

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*[{t}]" for t, c in self.items())
        return f"TableauSum({body or '0'})"
