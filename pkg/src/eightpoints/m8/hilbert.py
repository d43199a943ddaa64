"""Hilbert function, Hilbert series and graded Betti numbers of M8.

The coordinate ring of M8 in P^13 has Hilbert function

    f(k) = (k^5 + 5k^4 + 11k^3 + 13k^2 + 9k + 3) / 3

and is Gorenstein, so its minimal free resolution over the polynomial ring
in 14 variables is determined by a handful of vanishing statements plus the
alternating-sum identity

    f(k) = sum_{i,j} (-1)^i b_{i,j} g(k - i - j),   g(k) = C(k + 13, 13).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from eightpoints.errors import InconsistentSystemError
from eightpoints.exactcore.linalg import ExactMatrix, solve_triangular
from eightpoints.exactcore.series import (
    a_invariant,
    expand_hilbert_series,
    finite_difference,
    is_palindromic,
    polynomial_ring_dimension,
    series_numerator,
)
from eightpoints.reports import VerificationReport, make_report
from eightpoints.tableaux.ssyt import count_ssyt

logger = logging.getLogger(__name__)

AMBIENT_VARIABLES = 14
KRULL_DIMENSION = 6
CODIMENSION = 8
A_INVARIANT = -2
EXPECTED_NUMERATOR = (1, 8, 22, 8, 1)
EXPECTED_MIDDLE_ROW = (175, 512, 700, 512, 175)


def m8_hilbert_function(k: int) -> int:
    value = Fraction(k**5 + 5 * k**4 + 11 * k**3 + 13 * k**2 + 9 * k + 3, 3)
    if value.denominator != 1:
        raise ArithmeticError(f"Hilbert polynomial is not integral at k={k}")
    return int(value)


def hilbert_report(max_degree: int = 4, check_through: int = 12) -> VerificationReport:
    """SSYT counts against the closed formula, series numerator, degree and a-invariant."""
    counts = [count_ssyt(2, 8, k) for k in range(max_degree + 1)]
    formula = [m8_hilbert_function(k) for k in range(max_degree + 1)]
    numerator = series_numerator(counts, KRULL_DIMENSION)
    expanded = expand_hilbert_series(numerator, KRULL_DIMENSION, check_through + 1)
    series_matches = expanded == [m8_hilbert_function(k) for k in range(check_through + 1)]
    # the (dim - 1)-th difference of the Hilbert polynomial is (dim - 1)! times its leading coefficient
    order = KRULL_DIMENSION - 1
    degree_from_polynomial = finite_difference(
        [m8_hilbert_function(k) for k in range(check_through - order, check_through + 1)], order
    )
    observed = {
        "counts": counts,
        "numerator": numerator,
        "degree": sum(numerator),
        "degree_from_polynomial": degree_from_polynomial,
        "gorenstein": is_palindromic(numerator),
        "a_invariant": a_invariant(numerator, KRULL_DIMENSION),
        "series_matches_formula": series_matches,
    }
    expected = {
        "counts": formula,
        "numerator": list(EXPECTED_NUMERATOR),
        "degree": 40,
        "degree_from_polynomial": 40,
        "gorenstein": True,
        "a_invariant": A_INVARIANT,
        "series_matches_formula": True,
    }
    logger.info(f"M8 Hilbert numerator {numerator}, degree {sum(numerator)}")
    return make_report("M8-HILB", expected, observed)


@dataclass
class BettiTable:
    """Graded Betti numbers b_{i,j}: i-th syzygies in degree i + j."""

    entries: Dict[Tuple[int, int], int] = field(default_factory=dict)
    length: int = CODIMENSION
    top_row: int = KRULL_DIMENSION + A_INVARIANT

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def row(self, j: int) -> Tuple[int, ...]:
        return tuple(self.get(i, j) for i in range(self.length + 1))

    def rows(self) -> List[Tuple[int, ...]]:
        return [self.row(j) for j in range(self.top_row + 1)]

    def is_symmetric(self) -> bool:
        return all(
            self.get(i, j) == self.get(self.length - i, self.top_row - j)
            for i in range(self.length + 1)
            for j in range(self.top_row + 1)
        )

    def total(self, i: int) -> int:
        return sum(self.get(i, j) for j in range(self.top_row + 1))

    def to_json(self) -> Dict[str, List[int]]:
        return {str(j): list(self.row(j)) for j in range(self.top_row + 1)}

    def format(self) -> str:
        width = max(len(str(v)) for v in self.entries.values()) if self.entries else 1
        header = "   " + " ".join(str(i).rjust(width) for i in range(self.length + 1))
        lines = [header]
        for j, row in enumerate(self.rows()):
            cells = " ".join((str(v) if v else "-").rjust(width) for v in row)
            lines.append(f"{j}: {cells}")
        return "\n".join(lines)


def _alternating_sum(table: Dict[Tuple[int, int], int], k: int) -> int:
    return sum(
        (-1) ** i * b * polynomial_ring_dimension(AMBIENT_VARIABLES, k - i - j)
        for (i, j), b in table.items()
    )


def derive_betti_table(
    hilbert: Callable[[int], int] = m8_hilbert_function,
    consistency_degrees: int = 12,
) -> BettiTable:
    """Solve for the quadratic-syzygy row from the Hilbert function.

    Known entries: b_{0,0} = 1 and b_{1,1} = 14 (the quadrics), with their
    Gorenstein mirrors b_{7,3} = 14 and b_{8,4} = 1. Row 0 has nothing past
    i = 0, row 1 nothing past i = 1 because the quadrics have no linear
    syzygies, and rows 3 and 4 mirror rows 1 and 0. Row 2 is unknown; the
    degree-k identity for k = 2..10 is triangular in b_{k-2,2}.
    """
    length, top = CODIMENSION, KRULL_DIMENSION + A_INVARIANT
    known = {(0, 0): 1, (1, 1): AMBIENT_VARIABLES}
    known.update({(length - i, top - j): b for (i, j), b in list(known.items())})
    degrees = list(range(2, 2 + length + 1))
    system = [
        [(-1) ** i * polynomial_ring_dimension(AMBIENT_VARIABLES, k - i - 2) for i in range(length + 1)]
        for k in degrees
    ]
    rhs = [hilbert(k) - _alternating_sum(known, k) for k in degrees]
    solution = solve_triangular(ExactMatrix.from_rows(system), rhs)
    if any(not isinstance(b, int) or b < 0 for b in solution):
        logger.error(f"Betti row 2 is not a nonnegative integer vector: {solution}")
        raise InconsistentSystemError(f"Betti row 2 solution {solution} is not a nonnegative integer vector")
    entries = dict(known)
    entries.update({(i, 2): b for i, b in enumerate(solution) if b})
    for k in range(consistency_degrees + length + 1):
        if _alternating_sum(entries, k) != hilbert(k):
            logger.error(f"Betti table contradicts the Hilbert function at k={k}")
            raise InconsistentSystemError(f"Betti table contradicts the Hilbert function at degree {k}")
    table = BettiTable(entries)
    logger.info(f"Betti table of M8:\n{table.format()}")
    return table


def betti_report() -> VerificationReport:
    table = derive_betti_table()
    observed = {
        "middle_row": list(table.row(2)[2:7]),
        "corners": [table.get(0, 0), table.get(8, 4)],
        "quadrics": table.get(1, 1),
        "linear_second_syzygies": table.get(2, 1),
        "quadratic_second_syzygies": table.get(2, 2),
        "symmetric": table.is_symmetric(),
        "outside_middle_row_zero": all(table.get(i, 2) == 0 for i in (0, 1, 7, 8)),
    }
    expected = {
        "middle_row": list(EXPECTED_MIDDLE_ROW),
        "corners": [1, 1],
        "quadrics": 14,
        "linear_second_syzygies": 0,
        "quadratic_second_syzygies": 175,
        "symmetric": True,
        "outside_middle_row_zero": True,
    }
    return make_report("M8-BETTI", expected, observed)
