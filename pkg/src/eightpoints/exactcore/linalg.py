"""Dense exact and modular linear algebra.

Exact matrices hold Python ints/Fractions and are eliminated fraction-free.
Modular matrices are numpy int64 arrays with entries in [0, p) for a prime
p < 2**31, so every product of two residues fits in a signed 64-bit word.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from eightpoints.errors import DimensionMismatchError, SingularSystemError
from eightpoints.exactcore.scalars import ExactScalar, exact
from eightpoints.metrics import rank_computations_total

logger = logging.getLogger(__name__)


def residue(x: ExactScalar, p: int) -> int:
    """Image of a rational in Z/p; the denominator must be a unit."""
    x = Fraction(x)
    return x.numerator * pow(x.denominator, -1, p) % p


@dataclass(frozen=True)
class ExactMatrix:
    rows: Tuple[Tuple[ExactScalar, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ExactScalar]]) -> "ExactMatrix":
        rows = tuple(tuple(exact(x) for x in row) for row in rows)
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise DimensionMismatchError(f"ragged rows: widths {sorted(widths)}")
        return cls(rows)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(tuple(zip(*self.rows))) if self.rows else self

    def to_modular(self, prime: int) -> "ModularMatrix":
        return ModularMatrix.from_rows(self.rows, prime)


@dataclass(frozen=True)
class ModularMatrix:
    data: np.ndarray
    prime: int

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ExactScalar]], prime: int) -> "ModularMatrix":
        array = np.array([[residue(x, prime) for x in row] for row in rows], dtype=np.int64)
        if array.ndim != 2:
            array = array.reshape(len(rows), -1)
        return cls(array, prime)

    @classmethod
    def from_array(cls, array: np.ndarray, prime: int) -> "ModularMatrix":
        return cls(np.mod(np.asarray(array, dtype=np.int64), prime), prime)

    @property
    def nrows(self) -> int:
        return int(self.data.shape[0])

    @property
    def ncols(self) -> int:
        return int(self.data.shape[1])


@dataclass
class RankCertificate:
    rank: int
    per_prime: Dict[int, int] = field(default_factory=dict)
    agreed: bool = True
    exact_used: bool = False

    def to_dict(self) -> Dict[str, object]:
        return {
            "rank": self.rank,
            "per_prime": {str(p): r for p, r in self.per_prime.items()},
            "agreed": self.agreed,
            "exact_used": self.exact_used,
        }


# -----------------------
# Modular elimination
# -----------------------
def _row_echelon_mod(data: np.ndarray, p: int, reduced: bool = False) -> Tuple[np.ndarray, List[int]]:
    """Row echelon form mod p; pivot rows are normalised to a leading 1."""
    m = np.array(data, dtype=np.int64, copy=True) % p
    nrows, ncols = m.shape
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            m[[r, k]] = m[[k, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r, c:] = (m[r, c:] * inv) % p
        below = m[r + 1:, c]
        rows = np.nonzero(below)[0] + r + 1
        if rows.size:
            m[rows, c:] = (m[rows, c:] - np.outer(m[rows, c], m[r, c:]) % p) % p
        if reduced and r:
            above = np.nonzero(m[:r, c])[0]
            if above.size:
                m[above, c:] = (m[above, c:] - np.outer(m[above, c], m[r, c:]) % p) % p
        pivots.append(c)
        r += 1
    return m, pivots


def _modular_rank(matrix: ModularMatrix) -> int:
    if matrix.nrows == 0 or matrix.ncols == 0:
        return 0
    # eliminate along the shorter side
    data = matrix.data if matrix.nrows <= matrix.ncols else matrix.data.T
    _, pivots = _row_echelon_mod(data, matrix.prime)
    return len(pivots)


def modular_kernel(matrix: ModularMatrix) -> np.ndarray:
    """Basis of the right kernel mod p, one vector per row of the result."""
    p = matrix.prime
    ncols = matrix.ncols
    if matrix.nrows == 0:
        return np.eye(ncols, dtype=np.int64)
    rref, pivots = _row_echelon_mod(matrix.data, p, reduced=True)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for row, c in enumerate(pivots):
            basis[k, c] = (-rref[row, f]) % p
    return basis


# -----------------------
# Exact elimination
# -----------------------
def _integer_rows(rows: Sequence[Sequence[ExactScalar]]) -> List[List[int]]:
    """Clear denominators row by row; rank and kernel are unchanged."""
    out = []
    for row in rows:
        fracs = [Fraction(x) for x in row]
        den = lcm(*[f.denominator for f in fracs]) if fracs else 1
        out.append([int(f * den) for f in fracs])
    return out


def _exact_rank(rows: Sequence[Sequence[ExactScalar]]) -> int:
    m = _integer_rows(rows)
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pr = m[r]
        for i in range(r + 1, nrows):
            row = m[i]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (pr[c] * row[j] - f * pr[j]) // prev
            row[c] = 0
        prev = pr[c]
        r += 1
        if r == nrows:
            break
    return r


def determinant(rows: Sequence[Sequence[ExactScalar]]) -> ExactScalar:
    """Exact determinant by Bareiss elimination."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionMismatchError("determinant of a non-square matrix")
    if n == 0:
        return 1
    integral = all(isinstance(x, int) for row in rows for x in row)
    m = [list(row) if integral else [Fraction(x) for x in row] for row in rows]
    sign = 1
    prev: ExactScalar = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pk = m[k]
        for i in range(k + 1, n):
            row = m[i]
            for j in range(k + 1, n):
                num = pk[k] * row[j] - row[k] * pk[j]
                row[j] = num // prev if integral else num / prev
            row[k] = 0
        prev = pk[k]
    return exact(sign * m[n - 1][n - 1])


def exact_kernel(matrix: ExactMatrix) -> List[List[ExactScalar]]:
    """Basis of the rational right kernel via reduced row echelon form."""
    m = [[Fraction(x) for x in row] for row in matrix.rows]
    nrows, ncols = matrix.nrows, matrix.ncols
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v: List[ExactScalar] = [0] * ncols
        v[f] = 1
        for row, c in enumerate(pivots):
            v[c] = exact(-m[row][f])
        basis.append(v)
    return basis


def rank(matrix: Union[ExactMatrix, ModularMatrix]) -> int:
    """Rank by fraction-free elimination (exact) or Gaussian elimination mod p."""
    if isinstance(matrix, ModularMatrix):
        rank_computations_total.labels(kind="modular").inc()
        return _modular_rank(matrix)
    rank_computations_total.labels(kind="exact").inc()
    return _exact_rank(matrix.rows)


def certified_rank(
    build_modular: Callable[[int], ModularMatrix],
    primes: Sequence[int],
    build_exact: Optional[Callable[[], ExactMatrix]] = None,
) -> RankCertificate:
    """Two-prime modular rank; disagreement falls back to exact elimination when available."""
    per_prime = {p: rank(build_modular(p)) for p in primes}
    values = set(per_prime.values())
    if len(values) == 1:
        value = values.pop()
        logger.debug(f"Modular ranks agree at {value} for primes {list(primes)}")
        return RankCertificate(rank=value, per_prime=per_prime)
    logger.warning(f"Modular ranks disagree: {per_prime}")
    if build_exact is not None:
        value = rank(build_exact())
        return RankCertificate(rank=value, per_prime=per_prime, agreed=False, exact_used=True)
    # each modular rank is a lower bound on the rational rank
    return RankCertificate(rank=max(per_prime.values()), per_prime=per_prime, agreed=False)


def solve_triangular(system: ExactMatrix, rhs: Sequence[ExactScalar]) -> List[ExactScalar]:
    """Exact solution of an upper or lower triangular system."""
    n = system.nrows
    if system.ncols != n or len(rhs) != n:
        raise DimensionMismatchError("triangular solve needs a square system and matching rhs")
    a = system.rows
    upper = all(a[i][j] == 0 for i in range(n) for j in range(i))
    lower = all(a[i][j] == 0 for i in range(n) for j in range(i + 1, n))
    if not (upper or lower):
        raise DimensionMismatchError("system is not triangular")
    for i in range(n):
        if a[i][i] == 0:
            raise SingularSystemError(f"zero diagonal entry at position {i}")
    x: List[ExactScalar] = [0] * n
    order = range(n - 1, -1, -1) if upper else range(n)
    for i in order:
        acc = Fraction(rhs[i])
        for j in range(n):
            if j != i and a[i][j]:
                acc -= a[i][j] * Fraction(x[j])
        x[i] = exact(acc / a[i][i])
    return x


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """a @ b mod p for residues below 2**31, splitting b into 16-bit limbs."""
    a = np.mod(np.asarray(a, dtype=np.int64), p)
    b = np.mod(np.asarray(b, dtype=np.int64), p)
    if a.shape[1] >= 2**15:
        raise DimensionMismatchError("inner dimension too large for limb-split products")
    low = (a @ (b & 0xFFFF)) % p
    high = (a @ (b >> 16)) % p
    return (low + (high * 65536) % p) % p
