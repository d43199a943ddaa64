from eightpoints.exactcore.scalars import ExactScalar, exact
from eightpoints.exactcore.polynomial import (
    SparsePolynomial,
    poly_arithmetic,
    partial_derivative,
    evaluate,
    dumps_polynomial,
    loads_polynomial,
)
from eightpoints.exactcore.univariate import (
    UnivariatePolynomial,
    resultant,
    squarefree_part,
    interpolate,
    polynomial_gcd,
    power_series_inverse,
)
from eightpoints.exactcore.linalg import (
    ExactMatrix,
    ModularMatrix,
    RankCertificate,
    rank,
    certified_rank,
    solve_triangular,
    exact_kernel,
    modular_kernel,
    determinant,
    matmul_mod,
)
from eightpoints.exactcore.series import (
    a_invariant,
    expand_hilbert_series,
    is_palindromic,
    series_numerator,
)

__all__ = [
    "ExactScalar",
    "exact",
    "SparsePolynomial",
    "poly_arithmetic",
    "partial_derivative",
    "evaluate",
    "dumps_polynomial",
    "loads_polynomial",
    "UnivariatePolynomial",
    "resultant",
    "squarefree_part",
    "interpolate",
    "polynomial_gcd",
    "power_series_inverse",
    "ExactMatrix",
    "ModularMatrix",
    "RankCertificate",
    "rank",
    "certified_rank",
    "solve_triangular",
    "exact_kernel",
    "modular_kernel",
    "determinant",
    "matmul_mod",
    "a_invariant",
    "expand_hilbert_series",
    "is_palindromic",
    "series_numerator",
]
