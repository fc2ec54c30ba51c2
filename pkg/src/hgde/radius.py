"""
Radius Diagnostics - p-adic radius of convergence of F(a, b, c; z) at the origin

Implements:
- Valuation-slope estimate over a window [n_min, n_max] of coefficient indices
- log_p radius, the radius itself and the Dwork-condition verdict (radius >= 1)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional

from sympy import isprime

from src.core.config import settings
from src.core.errors import DomainError
from src.series.hypergeometric import hypergeometric_valuations, valuation_slope

from .triangles import HgdeParams

logger = logging.getLogger("padic-desk")


@dataclass
class RadiusReport:
    params: HgdeParams
    prime: int
    n_min: int
    n_max: int
    slope_estimate: Fraction
    tolerance: float

    @property
    def log_radius(self) -> Fraction:
        return self.slope_estimate

    @property
    def radius_estimate(self) -> float:
        return float(self.prime) ** float(self.slope_estimate)

    @property
    def dwork_condition(self) -> bool:
        return float(self.slope_estimate) >= -self.tolerance

    def to_document(self) -> Dict[str, Any]:
        return {
            "params": self.params.to_document(),
            "p": self.prime,
            "window": [self.n_min, self.n_max],
            "slope_estimate": str(self.slope_estimate),
            "slope_float": round(float(self.slope_estimate), 6),
            "log_p_radius": str(self.log_radius),
            "radius_estimate": round(self.radius_estimate, 6),
            "radius_at_least_one": self.dwork_condition,
        }


def radius_report(h: HgdeParams, p: int, n_max: int, n_min: Optional[int] = None) -> RadiusReport:
    """
    min v_p(a_n)/n over the window, n_min defaulting to n_max // 2.

    The estimate approaches log_p of the radius from above when v_p(a_n)
    exceeds the limiting linear rate by a digit-sum term.
    """
    if not isprime(p):
        raise DomainError(f"p must be prime, got {p}")
    if n_max < 1:
        raise DomainError("n_max must be at least 1")
    n_min = n_min or max(1, n_max // 2)
    vals = hypergeometric_valuations(h.a, h.b, h.c, n_max + 1, p)
    slope = valuation_slope(vals, n_min, n_max)
    logger.info("radius estimate for F(%s,%s,%s) at p=%d: slope %s", h.a, h.b, h.c, p, slope)
    return RadiusReport(h, p, n_min, n_max, slope, settings.radius_tolerance)
