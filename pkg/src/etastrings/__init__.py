"""Dirichlet eta strings: evaluation, zero location, string geometry, rendering."""

from .errors import (ClassificationError, DegenerateGeometryError,
                     DenominatorZeroError, DomainError, EtaStringsError,
                     IllConditionedError, NoZeroInBracketError, PoleError)
from .eta import (DEFAULT_SPEC, PrecisionSpec, Strategy, TruncationPlan, eta,
                  eta_term, reflection_residual, trivial_zero_t,
                  truncation_length, zeta_from_eta)
from .geometry import (CrossingReport, FlareKind, FlareReport, FlareThresholds,
                       arc_length, classify_flare, fit_center,
                       large_sigma_angle, nearest_approach, self_crossings)
from .strings import (SigmaGrid, StringFamily, TString, build_family,
                      build_string, range_points)
from .zeros import (ScanConfig, ZeroKind, ZeroRecord, classify_zero,
                    refine_zero, scan_zeros, verify_modified_reflection)

__version__ = "0.1.0"

__all__ = [
    "ClassificationError", "CrossingReport", "DEFAULT_SPEC",
    "DegenerateGeometryError", "DenominatorZeroError", "DomainError",
    "EtaStringsError", "FlareKind", "FlareReport", "FlareThresholds",
    "IllConditionedError", "NoZeroInBracketError", "PoleError",
    "PrecisionSpec", "ScanConfig", "SigmaGrid", "Strategy", "StringFamily",
    "TString", "TruncationPlan", "ZeroKind", "ZeroRecord", "arc_length",
    "build_family", "build_string", "classify_flare", "classify_zero", "eta",
    "eta_term", "fit_center", "large_sigma_angle", "nearest_approach",
    "range_points", "reflection_residual", "refine_zero", "scan_zeros",
    "self_crossings", "trivial_zero_t", "truncation_length",
    "verify_modified_reflection", "zeta_from_eta",
]
