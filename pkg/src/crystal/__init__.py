# Legendre family: Hasse invariant, unit-root function, point counts, Gauss-Manin checks

from .hasse import HassePoly, hasse_functional_equations, hasse_poly, is_ordinary, supersingular_roots
from .unit_root import fp_eval
from .counting import (
    UnitRootReport,
    count_points_bruteforce,
    count_points_dwork,
    counting_precision,
    fp_special_values,
    hasse_interval,
    legendre_twist_relation,
    unit_root,
    unit_root_from_trace,
    unit_root_report,
)
from .gauss_manin import GaussManinReport, legendre_gm_check

__all__ = [
    "HassePoly",
    "hasse_functional_equations",
    "hasse_poly",
    "is_ordinary",
    "supersingular_roots",
    "fp_eval",
    "fp_special_values",
    "UnitRootReport",
    "count_points_bruteforce",
    "count_points_dwork",
    "counting_precision",
    "hasse_interval",
    "legendre_twist_relation",
    "unit_root",
    "unit_root_report",
    "unit_root_from_trace",
    "GaussManinReport",
    "legendre_gm_check",
]
