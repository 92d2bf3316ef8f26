"""Exact-arithmetic calculator for divisor classes and relative
hypersurfaces on a projectivized bundle over a smooth curve."""

from .bundle import (
    BundleData,
    CurveData,
    HNPiece,
    ValidationError,
    validate,
    weighted_slope_identity_check,
)
from .chow import ChowPolynomial, degree, divisor, h_class, multiply, power, sigma_class, unit
from .cones import ConeRay, ConeVerdict, DivisorClass, anticanonical_class, classify, cone_fan_data
from .exact import Rational, binom, format_rational, parse_rational, rational_to_json
from .hypersurface import (
    FibreInvariants,
    FPositivity,
    HypersurfaceSpec,
    SlopeInequalityReport,
    alpha,
    beta,
    beta_factorization_check,
    canonical_invariants,
    f_positive,
    fibre_invariants,
    pushforward_rank_degree,
    relative_canonical_class,
    slope_inequality_report,
)
from .sigma import (
    FixedCycle,
    LctBounds,
    Rank2Zariski,
    SigmaDecomposition,
    decompose,
    irreducibility_verdict,
    lct_bounds,
    rank2_zariski,
)
from .stability import (
    StabilityReport,
    lee_criterion,
    rank2_instability_crosscheck,
    stability_report,
    zero_cycle_chow_semistable,
)
from .verification import LemmaCheckResult, lemma_check

__version__ = "0.1.0"

__all__ = [
    "BundleData",
    "ChowPolynomial",
    "ConeRay",
    "ConeVerdict",
    "CurveData",
    "DivisorClass",
    "FPositivity",
    "FibreInvariants",
    "FixedCycle",
    "HNPiece",
    "HypersurfaceSpec",
    "LctBounds",
    "LemmaCheckResult",
    "Rank2Zariski",
    "Rational",
    "SigmaDecomposition",
    "SlopeInequalityReport",
    "StabilityReport",
    "ValidationError",
    "alpha",
    "anticanonical_class",
    "beta",
    "beta_factorization_check",
    "binom",
    "canonical_invariants",
    "classify",
    "cone_fan_data",
    "decompose",
    "degree",
    "divisor",
    "f_positive",
    "fibre_invariants",
    "format_rational",
    "h_class",
    "irreducibility_verdict",
    "lct_bounds",
    "lee_criterion",
    "lemma_check",
    "multiply",
    "parse_rational",
    "power",
    "pushforward_rank_degree",
    "rank2_instability_crosscheck",
    "rank2_zariski",
    "rational_to_json",
    "relative_canonical_class",
    "sigma_class",
    "slope_inequality_report",
    "stability_report",
    "unit",
    "validate",
    "weighted_slope_identity_check",
    "zero_cycle_chow_semistable",
]
