from eightpoints.m8.kempe import KEMPE_NAMES, KempeBasis, kempe_coordinates
from eightpoints.m8.action import adjacent_transposition_actions, s8_action
from eightpoints.m8.cubic import CubicForm, build_cubic_explicit, build_cubic_skew_average, is_skew
from eightpoints.m8.binding import bind_kempe_labels
from eightpoints.m8.hilbert import BettiTable, betti_report, derive_betti_table, hilbert_report
from eightpoints.m8.syzygies import verify_kempe_generation, verify_m8_in_singular_locus, verify_no_linear_syzygies
from eightpoints.m8.secant import secant_slice_analysis

__all__ = [
    "KEMPE_NAMES",
    "KempeBasis",
    "kempe_coordinates",
    "adjacent_transposition_actions",
    "s8_action",
    "CubicForm",
    "build_cubic_explicit",
    "build_cubic_skew_average",
    "is_skew",
    "bind_kempe_labels",
    "BettiTable",
    "betti_report",
    "derive_betti_table",
    "hilbert_report",
    "verify_kempe_generation",
    "verify_m8_in_singular_locus",
    "verify_no_linear_syzygies",
    "secant_slice_analysis",
]
