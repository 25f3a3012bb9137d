"""Univalence and schlicht-disk radii for poly-analytic and log-analytic-product maps."""

from .errors import BracketError, DegenerateResultError, DomainError, PolyLandauError
from .extremal import (
    ExtremalSpec,
    bounded_deriv_component,
    classical_extremal_series,
    coeff_extremal_series,
    collision_pair,
    deriv_extremal_fn,
    extremal_eval,
    normalized_extremal_fn,
    real_profile,
    real_profile_derivative,
    unit_modulus_extremal_fn,
)
from .polyfunc import (
    LogPAnalyticFn,
    PolyAnalyticFn,
    jacobian,
    lambda_big,
    lambda_small,
    logp_eval,
    poly_eval,
    wirtinger_z,
    wirtinger_zbar,
)
from .radii import (
    BoundProfile,
    DerivAll,
    DerivNormalized,
    MixedDerivModulus,
    ModulusAll,
    RadiiResult,
    bianalytic_bounded_baseline,
    bianalytic_deriv_baseline,
    classical_landau,
    deriv_radii,
    find_root_monotone,
    log_bound_from_modulus,
    log_deriv_radii,
    log_mixed_radii,
    log_modulus_radii,
    log_normalized_radii,
    log_variant,
    mixed_radii,
    modulus_radii,
    normalized_radii,
    poly_modulus_baseline,
    univalence_margin_deriv,
    univalence_margin_mixed,
    univalence_margin_modulus,
    univalence_margin_normalized,
)
from .series import TruncatedTaylorSeries, principal_log, series_derivative, series_eval
from .verify import (
    GridSpec,
    VerificationReport,
    coefficient_bound_check,
    deriv_bound_check,
    distortion_check,
    exp_disk_check,
    hypothesis_audit,
    min_boundary_modulus_check,
    monotonicity_check,
    schlicht_coverage_check,
    univalence_grid_check,
)

__version__ = "0.1.0"

__all__ = [
    "BoundProfile",
    "BracketError",
    "DegenerateResultError",
    "DerivAll",
    "DerivNormalized",
    "DomainError",
    "ExtremalSpec",
    "GridSpec",
    "LogPAnalyticFn",
    "MixedDerivModulus",
    "ModulusAll",
    "PolyAnalyticFn",
    "PolyLandauError",
    "RadiiResult",
    "TruncatedTaylorSeries",
    "VerificationReport",
    "bianalytic_bounded_baseline",
    "bianalytic_deriv_baseline",
    "bounded_deriv_component",
    "classical_extremal_series",
    "classical_landau",
    "coeff_extremal_series",
    "coefficient_bound_check",
    "collision_pair",
    "deriv_bound_check",
    "deriv_extremal_fn",
    "deriv_radii",
    "distortion_check",
    "exp_disk_check",
    "extremal_eval",
    "find_root_monotone",
    "hypothesis_audit",
    "jacobian",
    "lambda_big",
    "lambda_small",
    "log_bound_from_modulus",
    "log_deriv_radii",
    "log_mixed_radii",
    "log_modulus_radii",
    "log_normalized_radii",
    "log_variant",
    "logp_eval",
    "min_boundary_modulus_check",
    "mixed_radii",
    "modulus_radii",
    "monotonicity_check",
    "normalized_extremal_fn",
    "normalized_radii",
    "poly_eval",
    "poly_modulus_baseline",
    "principal_log",
    "real_profile",
    "real_profile_derivative",
    "schlicht_coverage_check",
    "series_derivative",
    "series_eval",
    "unit_modulus_extremal_fn",
    "univalence_grid_check",
    "univalence_margin_deriv",
    "univalence_margin_mixed",
    "univalence_margin_modulus",
    "univalence_margin_normalized",
    "wirtinger_z",
    "wirtinger_zbar",
]
