"""Numerical toolkit for the class of normalized analytic f with |zf'-f| < 1/2."""

from .series import (
    ComplexSeries,
    DivisionByZeroConstantTerm,
    format_complex,
    format_series_literal,
    parse_series_literal,
)
from .funcrep import (
    AnalyticFunction,
    JetValue,
    KoebeFunction,
    PoleAtPoint,
    ReciprocalPolyFunction,
    SeriesFunction,
    ZeroOfF,
    catalog,
    make_extremal,
    omega_functional,
    parse_function,
    u_functional,
)
from .disc import (
    CircleExtremum,
    NonMonotoneWarning,
    RadiusResult,
    circle_min_real,
    circle_sup_modulus,
    q_map,
    radius_of_property,
)
from .omega import (
    BoundedAnalytic,
    Verdict,
    from_phi,
    is_member_omega,
    is_member_u,
    obradovic_peng_tests,
    subordination_check,
    sufficient_coeff_sum,
    sufficient_fz_derivative,
    sufficient_gamma_beta,
    sufficient_monomial,
)
from .coeffbounds import (
    BoundReport,
    RootTransformCoeffs,
    bound_an,
    bound_fs,
    bound_fs_kroot,
    coeff_bound_check,
    fekete_szego,
    fs_kroot,
    inverse_coeff_check,
    kth_root_transform,
    toeplitz_det,
)
from .search import SearchConfig, SearchResult, maximize_functional, random_member

__version__ = "0.1.0"

__all__ = [
    "AnalyticFunction",
    "BoundReport",
    "BoundedAnalytic",
    "CircleExtremum",
    "ComplexSeries",
    "DivisionByZeroConstantTerm",
    "JetValue",
    "KoebeFunction",
    "NonMonotoneWarning",
    "PoleAtPoint",
    "RadiusResult",
    "ReciprocalPolyFunction",
    "RootTransformCoeffs",
    "SearchConfig",
    "SearchResult",
    "SeriesFunction",
    "Verdict",
    "ZeroOfF",
    "bound_an",
    "bound_fs",
    "bound_fs_kroot",
    "catalog",
    "circle_min_real",
    "circle_sup_modulus",
    "coeff_bound_check",
    "fekete_szego",
    "format_complex",
    "format_series_literal",
    "from_phi",
    "fs_kroot",
    "inverse_coeff_check",
    "is_member_omega",
    "is_member_u",
    "kth_root_transform",
    "make_extremal",
    "maximize_functional",
    "obradovic_peng_tests",
    "omega_functional",
    "parse_function",
    "parse_series_literal",
    "q_map",
    "radius_of_property",
    "random_member",
    "subordination_check",
    "sufficient_coeff_sum",
    "sufficient_fz_derivative",
    "sufficient_gamma_beta",
    "sufficient_monomial",
    "toeplitz_det",
    "u_functional",
]
