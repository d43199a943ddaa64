from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eightpoints.errors import DimensionMismatchError, SingularSystemError
from eightpoints.exactcore.linalg import (
    ExactMatrix,
    ModularMatrix,
    certified_rank,
    determinant,
    exact_kernel,
    matmul_mod,
    modular_kernel,
    rank,
    residue,
    solve_triangular,
)

P1, P2 = 2147483647, 2147483629

small_matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=1, max_size=5)
)

def test_rank_of_dependent_rows():
    """Test exact rank with a linearly dependent row."""
    m = ExactMatrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert rank(m) == 2
    assert rank(m.to_modular(P1)) == 2

def test_ragged_rows_rejected():
    """Test that rows of different widths are rejected."""
    with pytest.raises(DimensionMismatchError):
        ExactMatrix.from_rows([[1, 2], [3]])

def test_rank_drops_modulo_a_small_prime():
    """Test that a prime dividing a minor lowers the modular rank."""
    m = ExactMatrix.from_rows([[1, 0], [0, 7]])
    assert rank(m.to_modular(7)) == 1
    assert rank(m) == 2

def test_certified_rank_falls_back_to_exact():
    """Test that disagreeing primes trigger the exact computation."""
    m = ExactMatrix.from_rows([[1, 0], [0, 7]])
    certificate = certified_rank(m.to_modular, (7, 11), lambda: m)
    assert certificate.rank == 2
    assert not certificate.agreed
    assert certificate.exact_used
    assert certificate.to_dict()["per_prime"] == {"7": 1, "11": 2}

def test_certified_rank_without_exact_takes_maximum():
    """Test that without an exact fallback the larger modular rank wins."""
    m = ExactMatrix.from_rows([[1, 0], [0, 7]])
    certificate = certified_rank(m.to_modular, (7, 11))
    assert certificate.rank == 2 and not certificate.exact_used

def test_determinant_integral_and_rational():
    """Test Bareiss determinants over the integers and the rationals."""
    assert determinant([[2, 1, 0], [1, 3, 1], [0, 1, 4]]) == 18
    assert determinant([[Fraction(1, 2), 1], [1, 4]]) == 1
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([]) == 1
    with pytest.raises(DimensionMismatchError):
        determinant([[1, 2]])

def test_exact_kernel_is_annihilated():
    """Test that exact kernel vectors are killed by the matrix."""
    m = ExactMatrix.from_rows([[1, 2, 3, 4], [2, 4, 7, 9]])
    kernel = exact_kernel(m)
    assert len(kernel) == 2
    for v in kernel:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m.rows)

def test_modular_kernel_is_annihilated():
    """Test that modular kernel vectors are killed mod p."""
    m = ModularMatrix.from_rows([[1, 2, 3], [4, 5, 6]], P1)
    kernel = modular_kernel(m)
    assert kernel.shape == (1, 3)
    product = matmul_mod(m.data, kernel.T, P1)
    assert not product.any()

def test_solve_triangular_upper_and_lower():
    """Test exact triangular solves and the singular case."""
    upper = ExactMatrix.from_rows([[2, 1], [0, 3]])
    assert solve_triangular(upper, [5, 6]) == [Fraction(3, 2), 2]
    lower = ExactMatrix.from_rows([[1, 0], [2, 1]])
    assert solve_triangular(lower, [1, 4]) == [1, 2]
    with pytest.raises(SingularSystemError):
        solve_triangular(ExactMatrix.from_rows([[0, 1], [0, 1]]), [1, 1])
    with pytest.raises(DimensionMismatchError):
        solve_triangular(ExactMatrix.from_rows([[1, 1], [1, 1]]), [1, 1])

def test_residue_of_fraction():
    """Test the image of a rational in Z/p."""
    assert residue(Fraction(1, 2), 7) == 4
    assert residue(-3, 7) == 4

def test_matmul_mod_matches_python():
    """Test that limb-split modular products match exact integer products."""
    rng = np.random.default_rng(7)
    a = rng.integers(0, P1, size=(3, 4))
    b = rng.integers(0, P1, size=(4, 2))
    expected = [[sum(int(a[i, t]) * int(b[t, j]) for t in range(4)) % P1 for j in range(2)] for i in range(3)]
    assert matmul_mod(a, b, P1).tolist() == expected

@settings(max_examples=50, deadline=None)
@given(small_matrices)
def test_modular_and_exact_rank_agree_for_large_primes(rows):
    """Test that small integer matrices have the same rank mod large primes as over Q."""
    m = ExactMatrix.from_rows(rows)
    exact_rank = rank(m)
    assert rank(m.to_modular(P1)) == exact_rank
    assert rank(m.to_modular(P2)) == exact_rank
    assert exact_rank == len(rows[0]) - len(exact_kernel(m))

@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=3, max_size=3))
def test_determinant_matches_numpy(rows):
    """Test Bareiss against a floating-point determinant on 3 x 3 integer matrices."""
    assert determinant(rows) == int(round(np.linalg.det(np.array(rows, dtype=float))))
