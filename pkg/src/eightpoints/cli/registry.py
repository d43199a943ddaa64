"""Claim registry: claim id -> citation, runner and required artifacts."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from eightpoints import config
from eightpoints.cache import CUBIC, KEMPE_BINDING, QUINTIC, ArtifactCache
from eightpoints.errors import UnknownClaimError
from eightpoints.reports import VerificationReport


@dataclass
class RunConfig:
    master_seed: int = config.MASTER_SEED
    primes: Tuple[int, ...] = config.PRIMES
    trials: Optional[int] = None
    cache_dir: str = config.CACHE_DIR
    output: str = "-"
    jobs: int = config.JOBS
    metrics_file: str = config.METRICS_FILE

    def trials_or(self, default: int) -> int:
        return self.trials if self.trials is not None else default


@dataclass
class ClaimContext:
    run: RunConfig
    cache: ArtifactCache


Runner = Callable[[ClaimContext], VerificationReport]


@dataclass(frozen=True)
class ClaimSpec:
    citation: str
    runner: Runner
    needs: Tuple[str, ...] = field(default_factory=tuple)


# -----------------------
# Runners
# -----------------------
def _tab_ssyt(ctx: ClaimContext) -> VerificationReport:
    from eightpoints.symrep.checks import ssyt_dimension_report

    return ssyt_dimension_report()


def _rep_decomp(ctx: ClaimContext) -> VerificationReport:
    from eightpoints.symrep.checks import decomposition_report

    return decomposition_report()


def _rep_mult(ctx: ClaimContext) -> VerificationReport:
    from eightpoints.symrep.checks import multiplicity_report

    return multiplicity_report()


def _rep_so_ann(ctx: ClaimContext) -> VerificationReport:
    from eightpoints.symrep.checks import annihilator_report

    return annihilator_report(ctx.run.primes)


def _rep_n8_sign(ctx: ClaimContext) -> VerificationReport:
    from eightpoints.symrep.checks import n8_sign_report

    return n8_sign_report()


def _m8_cubic_skew(ctx: ClaimContext) -> VerificationReport:
    from eightpoints.m8.cubic import cubic_skew_report

    return cubic_skew_report(ctx.cache.kempe_basis(), ctx.cache.cubic())


def _m8_cubic_avg(ctx: ClaimContext) -> VerificationReport:
    from eightpoints.m8.cubic import cubic_average_report

    return cubic_average_report(ctx.cache.kempe_basis())


def _m8_sing(ctx: ClaimContext) -> VerificationReport:
    from eightpoints.m8.syzygies import verify_m8_in_singular_locus

    return verify_m8_in_singular_locus(
        ctx.cache.kempe_basis(), ctx.cache.cubic(), ctx.run.trials_or(100), ctx.run.master_seed
    )


def _m8_syz(ctx: ClaimContext) -> VerificationReport:
    from eightpoints.m8.syzygies import verify_no_linear_syzygies

    return verify_no_linear_syzygies(ctx.cache.cubic(), ctx.run.primes)


def _m8_kempe(ctx: ClaimContext) -> VerificationReport:
    from eightpoints.m8.syzygies import verify_kempe_generation

    return verify_kempe_generation(ctx.cache.kempe_basis(), master_seed=ctx.run.master_seed, primes=ctx.run.primes)


def _m8_hilb(ctx: ClaimContext) -> VerificationReport:
    from eightpoints.m8.hilbert import hilbert_report

    return hilbert_report()


def _m8_betti(ctx: ClaimContext) -> VerificationReport:
    from eightpoints.m8.hilbert import betti_report

    return betti_report()


def _m8_sec21(ctx: ClaimContext) -> VerificationReport:
    from eightpoints.m8.secant import secant_slice_analysis

    return secant_slice_analysis(ctx.cache.cubic(), ctx.run.trials_or(3), ctx.run.master_seed)


def _n8_gale1(ctx: ClaimContext) -> VerificationReport:
    from eightpoints.n8.gale import gale_degree1_report

    return gale_degree1_report()


def _n8_gale2(ctx: ClaimContext) -> VerificationReport:
    from eightpoints.n8.gale import degree2_gale_analysis

    return degree2_gale_analysis(ctx.run.master_seed, ctx.run.primes)


def _n8_gen12(ctx: ClaimContext) -> VerificationReport:
    from eightpoints.n8.generation import verify_generation_degrees_1_2

    return verify_generation_degrees_1_2((3, 4), ctx.run.master_seed, ctx.run.primes)


def _n8_hilb(ctx: ClaimContext) -> VerificationReport:
    from eightpoints.n8.generation import n8_hilbert_report

    return n8_hilbert_report()


def _n8_nprime_hilb(ctx: ClaimContext) -> VerificationReport:
    from eightpoints.n8.generation import nprime_hilbert_report

    return nprime_hilbert_report(master_seed=ctx.run.master_seed, primes=ctx.run.primes)


def _n8_quintic(ctx: ClaimContext) -> VerificationReport:
    from eightpoints.n8.quintic import construct_skew_quintic, quintic_report

    construction = construct_skew_quintic(master_seed=ctx.run.master_seed)
    report = quintic_report(construction, ctx.run.master_seed)
    if construction.quintic != ctx.cache.quintic():
        report.warnings.append("constructed quintic differs from the cached artifact")
    return report


def _n8_qsing(ctx: ClaimContext) -> VerificationReport:
    from eightpoints.n8.quintic import verify_quintic_singular_on_nprime

    return verify_quintic_singular_on_nprime(ctx.cache.quintic(), ctx.run.trials_or(50), ctx.run.master_seed)


def _n8_secant_id(ctx: ClaimContext) -> VerificationReport:
    from eightpoints.n8.secant_identity import verify_secant_identity

    return verify_secant_identity(ctx.run.trials_or(100), master_seed=ctx.run.master_seed)


CLAIMS: Dict[str, ClaimSpec] = {
    "TAB-SSYT": ClaimSpec("Dimensions of R_k as semistandard tableau counts", _tab_ssyt),
    "REP-DECOMP": ClaimSpec("Sym^2, wedge^2, R_2 and I_2 of V_{4,4} are multiplicity free", _rep_decomp),
    "REP-MULT": ClaimSpec("Sign and V_{4,4} multiplicities in symmetric powers and invariant rings", _rep_mult),
    "REP-SO-ANN": ClaimSpec("No nonzero cubic is annihilated by so(R_1(M8))", _rep_so_ann),
    "REP-N8-SIGN": ClaimSpec("No skew quintic of N8 involves the degree-2 generators", _rep_n8_sign),
    "M8-CUBIC-SKEW": ClaimSpec("Normal form of the skew cubic and its binomial partial", _m8_cubic_skew, (KEMPE_BINDING, CUBIC)),
    "M8-CUBIC-AVG": ClaimSpec("Skew-averaging a cubic monomial recovers the skew cubic", _m8_cubic_avg, (KEMPE_BINDING,)),
    "M8-SING": ClaimSpec("M8 lies in the singular locus of the skew cubic", _m8_sing, (KEMPE_BINDING, CUBIC)),
    "M8-SYZ": ClaimSpec("The partials of the skew cubic have no linear syzygies", _m8_syz, (CUBIC,)),
    "M8-KEMPE": ClaimSpec("R(M8) is generated in degree one by the Kempe invariants", _m8_kempe, (KEMPE_BINDING,)),
    "M8-HILB": ClaimSpec("Hilbert series of M8: numerator 1 + 8t + 22t^2 + 8t^3 + t^4", _m8_hilb),
    "M8-BETTI": ClaimSpec("Betti table of the 14 quadrics cutting out M8", _m8_betti),
    "M8-SEC21": ClaimSpec("The secant variety of M8 is a degree-21 hypersurface, doubled in the Hessian", _m8_sec21, (CUBIC,)),
    "N8-GALE1": ClaimSpec("Gale duality fixes R_1(N8) with trivial sign", _n8_gale1),
    "N8-GALE2": ClaimSpec("Gale duality moves 21 pairs of degree-2 tableaux", _n8_gale2),
    "N8-GEN12": ClaimSpec("R(N8) is generated in degrees one and two", _n8_gen12),
    "N8-HILB": ClaimSpec("Hilbert series of N8: numerator 1 + 4t + 31t^2 + 40t^3 + 31t^4 + 4t^5 + t^6", _n8_hilb),
    "N8-NPRIME-HILB": ClaimSpec("Hilbert function of N'8 through degree 4 and its 14 quartic relations", _n8_nprime_hilb),
    "N8-QUINTIC": ClaimSpec("The skew quintic is the unique skew quintic relation", _n8_quintic, (QUINTIC,)),
    "N8-QSING": ClaimSpec("N'8 lies in the singular locus of the skew quintic", _n8_qsing, (QUINTIC,)),
    "N8-SECANT-ID": ClaimSpec("The polar map of the cubic sends secant lines of M8 onto N'8", _n8_secant_id),
}


def resolve_claims(names: Sequence[str]) -> List[str]:
    """Expand 'all', keep registry order and reject unknown ids."""
    if not names or "all" in names:
        return list(CLAIMS)
    unknown = [n for n in names if n not in CLAIMS]
    if unknown:
        raise UnknownClaimError(f"unknown claim ids: {', '.join(unknown)}")
    return [n for n in CLAIMS if n in set(names)]


def required_artifacts(claims: Sequence[str]) -> List[str]:
    out: List[str] = []
    for claim in claims:
        for name in CLAIMS[claim].needs:
            if name not in out:
                out.append(name)
    return out
