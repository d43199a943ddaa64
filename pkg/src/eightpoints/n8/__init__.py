from eightpoints.n8.basis import N8Basis, degree1_coordinates, degree1_tableau_basis, s8_action_n8
from eightpoints.n8.gale import (
    GaleInvolution,
    degree2_gale_analysis,
    degree2_generators,
    gale_degree1_report,
    gale_dual,
)
from eightpoints.n8.generation import n8_hilbert_report, nprime_hilbert_report, verify_generation_degrees_1_2
from eightpoints.n8.quintic import (
    QuinticForm,
    construct_skew_quintic,
    quintic_report,
    verify_quintic_singular_on_nprime,
)
from eightpoints.n8.secant_identity import verify_secant_identity
from eightpoints.tableaux.evaluation import EvaluationMatrix

__all__ = [
    "N8Basis",
    "degree1_coordinates",
    "degree1_tableau_basis",
    "s8_action_n8",
    "GaleInvolution",
    "degree2_gale_analysis",
    "degree2_generators",
    "gale_degree1_report",
    "gale_dual",
    "n8_hilbert_report",
    "nprime_hilbert_report",
    "verify_generation_degrees_1_2",
    "QuinticForm",
    "construct_skew_quintic",
    "quintic_report",
    "verify_quintic_singular_on_nprime",
    "verify_secant_identity",
    "EvaluationMatrix",
]
