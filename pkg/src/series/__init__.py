# Truncated power series, differential operators and hypergeometric generators

from .series import TruncSeries, series_compose, series_derive, series_inverse
from .operators import DiffOperator, gauss_operator, hypergeometric_theta_operator, ode_taylor
from .hypergeometric import (
    contiguity_residual,
    hypergeometric_series,
    hypergeometric_valuations,
    valuation_slope,
)

__all__ = [
    "TruncSeries",
    "series_compose",
    "series_derive",
    "series_inverse",
    "DiffOperator",
    "gauss_operator",
    "hypergeometric_theta_operator",
    "ode_taylor",
    "contiguity_residual",
    "hypergeometric_series",
    "hypergeometric_valuations",
    "valuation_slope",
]
