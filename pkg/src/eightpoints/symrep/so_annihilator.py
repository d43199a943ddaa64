"""Forms killed by the orthogonal Lie algebra.

An element s of Sym^d in k variables is annihilated by so(k) when

    x_i ds/dx_j = x_j ds/dx_i      for every pair i < j.

The solution space is cut down one pair at a time: K <- K . null(A_ij K),
modulo two primes. A zero modular kernel bounds the rational kernel by zero;
a nonzero one is confirmed by checking the norm form exactly.
"""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Dict, Sequence, Tuple

import numpy as np

from eightpoints import config
from eightpoints.exactcore.linalg import ModularMatrix, matmul_mod, modular_kernel
from eightpoints.exactcore.polynomial import Monomial, SparsePolynomial, monomials_of_degree

logger = logging.getLogger(__name__)

DEFAULT_VARIABLES = 14


def pair_operator(monomials: Sequence[Monomial], i: int, j: int) -> np.ndarray:
    """Matrix of s -> x_i ds/dx_j - x_j ds/dx_i on the span of the given monomials."""
    index = {e: k for k, e in enumerate(monomials)}
    size = len(monomials)
    a = np.zeros((size, size), dtype=np.int64)
    for col, e in enumerate(monomials):
        if e[j]:
            target = list(e)
            target[j] -= 1
            target[i] += 1
            a[index[tuple(target)], col] += e[j]
        if e[i]:
            target = list(e)
            target[i] -= 1
            target[j] += 1
            a[index[tuple(target)], col] -= e[i]
    return a


def annihilated_basis(nvars: int, d: int, prime: int, pairs: Sequence[Tuple[int, int]]) -> np.ndarray:
    """Rows span the common kernel mod p of the pair operators."""
    monomials = monomials_of_degree(nvars, d)
    basis = np.eye(len(monomials), dtype=np.int64)
    for i, j in pairs:
        if basis.shape[0] == 0:
            break
        image = matmul_mod(pair_operator(monomials, i, j), basis.T, prime)
        combos = modular_kernel(ModularMatrix.from_array(image, prime))
        if combos.shape[0]:
            basis = matmul_mod(combos, basis, prime)
        else:
            basis = np.zeros((0, len(monomials)), dtype=np.int64)
    return basis


def pair_kernel_dimension(nvars: int, d: int, pair: Tuple[int, int] = (0, 1), prime: int = config.PRIMES[0]) -> int:
    """Solutions of the single-pair equation, e.g. 2 for three variables in degree 3."""
    return int(annihilated_basis(nvars, d, prime, [pair]).shape[0])


def norm_form(nvars: int) -> SparsePolynomial:
    names = [f"x{i + 1}" for i in range(nvars)]
    return sum((v * v for v in SparsePolynomial.generators(names)), SparsePolynomial.zero(names))


def is_annihilated(s: SparsePolynomial) -> bool:
    """Exact check of every pair equation."""
    xs = SparsePolynomial.generators(s.variables)
    grads = s.gradient()
    for i, j in combinations(range(len(xs)), 2):
        if not (xs[i] * grads[j] - xs[j] * grads[i]).is_zero():
            return False
    return True


def so_annihilator_dimension(d: int, nvars: int = DEFAULT_VARIABLES, primes: Sequence[int] = config.PRIMES) -> int:
    """Dimension of the so(nvars)-annihilated part of Sym^d."""
    if d not in (2, 3):
        raise ValueError("the annihilator is computed for d in {2, 3}")
    pairs = list(combinations(range(nvars), 2))
    dims: Dict[int, int] = {}
    for p in primes:
        dims[p] = int(annihilated_basis(nvars, d, p, pairs).shape[0])
        logger.debug(f"so-annihilator in degree {d} mod {p}: {dims[p]}")
    if len(set(dims.values())) != 1:
        logger.warning(f"so-annihilator dimensions disagree across primes: {dims}")
    # each modular dimension bounds the rational one from above
    dimension = min(dims.values())
    if dimension and d == 2 and not is_annihilated(norm_form(nvars)):
        raise ArithmeticError("norm form is not annihilated")
    return dimension


def annihilator_summary(primes: Sequence[int] = config.PRIMES) -> Dict[str, int]:
    """The two dimensions together with single-pair sanity counts."""
    out: Dict[str, int] = {
        "degree_2": so_annihilator_dimension(2, primes=primes),
        "degree_3": so_annihilator_dimension(3, primes=primes),
        "single_pair_three_variables": pair_kernel_dimension(3, 3, prime=primes[0]),
        "single_pair_fourteen_variables": pair_kernel_dimension(DEFAULT_VARIABLES, 3, prime=primes[0]),
    }
    return out

