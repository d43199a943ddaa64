"""Representation-theoretic facts about the invariants of eight points."""

from __future__ import annotations

import logging
from typing import Dict, Sequence, Tuple

from eightpoints import config
from eightpoints.reports import VerificationReport, make_report
from eightpoints.symrep.characters import (
    CharacterVector,
    decompose,
    exterior_square_character,
    irreducible,
    multiplicity,
    sign_character,
    symmetric_power_character,
)
from eightpoints.symrep.partitions import Partition, format_partition
from eightpoints.symrep.plethysm import invariant_ring_character
from eightpoints.symrep.so_annihilator import annihilator_summary
from eightpoints.tableaux.ssyt import count_ssyt

logger = logging.getLogger(__name__)

V44: Partition = (4, 4)
V2222: Partition = (2, 2, 2, 2)
W_SHAPE: Partition = (3, 1, 1, 1, 1, 1)
SIGN: Partition = (1,) * 8


def line_degree_one() -> CharacterVector:
    """R_1 of eight points on the line."""
    return invariant_ring_character(2, 8, 1)


def space_degree_one() -> CharacterVector:
    """R_1 of eight points in space."""
    return invariant_ring_character(4, 8, 1)


def quadric_relations_character() -> CharacterVector:
    """I_2 = Sym^2 R_1 - R_2 for eight points on the line."""
    return symmetric_power_character(line_degree_one(), 2) - invariant_ring_character(2, 8, 2)


def decomposition_facts() -> Dict[str, Dict[str, int]]:
    """Sym^2, wedge^2, tensor square, R_2 and I_2 of R_1(M8) as partition -> multiplicity."""
    r1 = line_degree_one()
    return {
        "sym2_v44": decompose(symmetric_power_character(r1, 2)).to_json(),
        "wedge2_v44": decompose(exterior_square_character(r1)).to_json(),
        "tensor2_v44": decompose(r1 * r1).to_json(),
        "r2_m8": decompose(invariant_ring_character(2, 8, 2)).to_json(),
        "i2_m8": decompose(quadric_relations_character()).to_json(),
        "v44_twisted_by_sign": decompose(irreducible(V44) * sign_character(8)).to_json(),
    }


def multiplicity_facts() -> Dict[str, int]:
    """The multiplicities separating symmetric powers from invariant rings."""
    r1_line = line_degree_one()
    r1_space = space_degree_one()
    return {
        "v44_in_r1_m8": multiplicity(V44, r1_line),
        "v2222_in_r1_n8": multiplicity(V2222, r1_space),
        "sign_in_sym3_v44": multiplicity(SIGN, symmetric_power_character(r1_line, 3)),
        "sign_in_sym5_v2222": multiplicity(SIGN, symmetric_power_character(r1_space, 5)),
        "sign_in_r5_n8": multiplicity(SIGN, invariant_ring_character(4, 8, 5)),
        "v44_in_sym4_v2222": multiplicity(V44, symmetric_power_character(r1_space, 4)),
        "v44_in_r4_n8": multiplicity(V44, invariant_ring_character(4, 8, 4)),
        "w_in_r2_n8": multiplicity(W_SHAPE, invariant_ring_character(4, 8, 2)),
    }


def n8_sign_multiplicities() -> Dict[str, int]:
    """Sign multiplicity in the two degree-5 pieces that involve degree-2 generators, plus the control."""
    r1 = space_degree_one()
    w = irreducible(W_SHAPE)
    return {
        "w_times_sym3_r1": multiplicity(SIGN, w * symmetric_power_character(r1, 3)),
        "sym2_w_times_r1": multiplicity(SIGN, symmetric_power_character(w, 2) * r1),
        "sym5_r1_control": multiplicity(SIGN, symmetric_power_character(r1, 5)),
    }


def n8_final_check() -> bool:
    """No skew quintic involves the degree-2 generators."""
    counts = n8_sign_multiplicities()
    ok = counts["w_times_sym3_r1"] == 0 and counts["sym2_w_times_r1"] == 0
    logger.info(f"Sign multiplicities with degree-2 generators: {counts}")
    return ok


def dimensions(m: int, n: int, max_degree: int) -> Tuple[int, ...]:
    """dim R_d read off the invariant-ring characters, d = 0..max_degree."""
    return tuple(int(invariant_ring_character(m, n, d).dimension) for d in range(max_degree + 1))


# -----------------------
# Claim reports
# -----------------------
def _shapes(*shapes: Partition) -> Dict[str, int]:
    return {format_partition(s): 1 for s in sorted(shapes)}


EXPECTED_DECOMPOSITIONS: Dict[str, Dict[str, int]] = {
    # at most four parts, all even
    "sym2_v44": _shapes((8,), (6, 2), (4, 4), (4, 2, 2), (2, 2, 2, 2)),
    # exactly four parts, all odd
    "wedge2_v44": _shapes((5, 1, 1, 1), (3, 3, 1, 1)),
    "tensor2_v44": _shapes((8,), (6, 2), (4, 4), (4, 2, 2), (2, 2, 2, 2), (5, 1, 1, 1), (3, 3, 1, 1)),
    # at most three parts, all even
    "r2_m8": _shapes((8,), (6, 2), (4, 4), (4, 2, 2)),
    "i2_m8": _shapes(V2222),
    "v44_twisted_by_sign": _shapes(V2222),
}

EXPECTED_MULTIPLICITIES: Dict[str, int] = {
    "v44_in_r1_m8": 1,
    "v2222_in_r1_n8": 1,
    "sign_in_sym3_v44": 1,
    "sign_in_sym5_v2222": 4,
    "sign_in_r5_n8": 3,
    "v44_in_sym4_v2222": 7,
    "v44_in_r4_n8": 6,
    "w_in_r2_n8": 1,
}


def ssyt_dimension_report() -> VerificationReport:
    """Tableau counts against the character dimensions and the printed values."""
    line = [count_ssyt(2, 8, k) for k in range(1, 4)]
    space = [count_ssyt(4, 8, k) for k in range(1, 5)]
    observed = {
        "line": line,
        "space": space,
        "line_from_characters": list(dimensions(2, 8, 3)[1:]),
        "space_from_characters": list(dimensions(4, 8, 3)[1:]),
    }
    expected = {
        "line": [14, 91, 364],
        "space": [14, 126, 790, 3731],
        "line_from_characters": line,
        "space_from_characters": space[:3],
    }
    return make_report("TAB-SSYT", expected, observed)


def decomposition_report() -> VerificationReport:
    observed = decomposition_facts()
    multiplicity_free = all(all(m == 1 for m in d.values()) for d in observed.values())
    report = make_report("REP-DECOMP", EXPECTED_DECOMPOSITIONS, observed)
    if not multiplicity_free:
        report.warnings.append("a decomposition has a repeated summand")
    return report


def multiplicity_report() -> VerificationReport:
    return make_report("REP-MULT", EXPECTED_MULTIPLICITIES, multiplicity_facts())


def annihilator_report(primes: Sequence[int] = config.PRIMES) -> VerificationReport:
    expected = {
        "degree_2": 1,
        "degree_3": 0,
        "single_pair_three_variables": 2,
        # cubics in the other 12 variables, plus (x_i^2 + x_j^2) times a linear form in them
        "single_pair_fourteen_variables": 376,
    }
    return make_report("REP-SO-ANN", expected, annihilator_summary(primes), primes=primes)


def n8_sign_report() -> VerificationReport:
    observed = {**n8_sign_multiplicities(), "final_check": n8_final_check()}
    expected = {"w_times_sym3_r1": 0, "sym2_w_times_r1": 0, "sym5_r1_control": 4, "final_check": True}
    return make_report("REP-N8-SIGN", expected, observed)
