"""
Diamond LogGamma - G_p(x) = lim p^(-m) sum_{n < p^m} (x+n) log_p(x+n) - (x+n)

Implements:
- Level-m partial values with honest precision
- Convergence reports over consecutive levels
- The telescoping check G(x+1) - G(x) = log_p x at a fixed level
- Weighted sums of log_p Gamma_p used for vanishing combinations
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Union

from src.core.errors import DomainError, PrecisionError
from src.padic.functions import padic_log
from src.padic.scalar import PadicScalar

from .morita import gamma_p

logger = logging.getLogger("padic-desk")

Number = Union[int, Fraction, PadicScalar]

DEFAULT_PRECISION = 20


def _as_scalar(x: Number, p: int, rel_prec: int) -> PadicScalar:
    if isinstance(x, PadicScalar):
        return x
    return PadicScalar.from_rational(p, Fraction(x), rel_prec=rel_prec)


def diamond_Gp(x: Number, m: int, prime: int | None = None, prec: int = DEFAULT_PRECISION) -> PadicScalar:
    """
    Level-m value of Diamond's G_p at x.

    Terms that vanish exactly are skipped, as are terms that are zero at the
    working precision (log_p is only defined off 0).
    """
    if isinstance(x, PadicScalar):
        p = x.prime
    elif prime is None:
        raise DomainError("a rational argument needs a prime")
    else:
        p = prime
    if m < 0:
        raise DomainError("level must be >= 0")
    work = prec + m + 2
    exact = None if isinstance(x, PadicScalar) else Fraction(x)
    total = PadicScalar.zero(p)
    skipped = 0
    for n in range(p ** m):
        if exact is None:
            t = x + n
        elif exact + n == 0:
            skipped += 1
            continue
        else:
            t = PadicScalar.from_rational(p, exact + n, rel_prec=work)
        if t.is_zero_at_precision():
            skipped += 1
            continue
        total = total + t * padic_log(t) - t
    if skipped:
        logger.debug("diamond level %d: skipped %d terms that vanish at precision", m, skipped)
    return total.shift(-m)


@dataclass
class DiamondConvergenceReport:
    prime: int
    x: str
    levels: List[int]
    values: List[PadicScalar] = field(default_factory=list)
    difference_valuations: List[int] = field(default_factory=list)
    stabilising: bool = False

    def to_document(self) -> Dict[str, Any]:
        return {
            "p": self.prime,
            "x": self.x,
            "levels": self.levels,
            "values": [repr(v) for v in self.values],
            "difference_valuations": self.difference_valuations,
            "stabilising": self.stabilising,
        }


def diamond_convergence_report(
    p: int, x: Number, levels: List[int], prec: int = DEFAULT_PRECISION
) -> DiamondConvergenceReport:
    """
    Level values and v_p of consecutive differences. The levels are reported
    as stabilising when those valuations never drop and end strictly higher
    than they start.
    """
    if len(levels) < 2:
        raise DomainError("at least two levels are needed")
    report = DiamondConvergenceReport(p, str(x), list(levels))
    for m in levels:
        report.values.append(diamond_Gp(x, m, prime=p, prec=prec))
    for a, b in zip(report.values, report.values[1:]):
        diff = b - a
        report.difference_valuations.append(int(diff.absprec) if diff.is_zero_at_precision() else diff.valuation)
    vals = report.difference_valuations
    report.stabilising = len(vals) >= 2 and all(u <= v for u, v in zip(vals, vals[1:])) and vals[-1] > vals[0]
    logger.info("diamond p=%d x=%s levels %s: differences %s", p, x, levels, vals)
    return report


def diamond_telescoping_check(p: int, x: Number, m: int, prec: int = DEFAULT_PRECISION) -> int:
    """v_p(G^(m)(x+1) - G^(m)(x) - log_p x); grows with m."""
    upper = diamond_Gp(Fraction(x) + 1 if not isinstance(x, PadicScalar) else x + 1, m, prime=p, prec=prec)
    lower = diamond_Gp(x, m, prime=p, prec=prec)
    log_x = padic_log(_as_scalar(x, p, prec + m + 2))
    diff = upper - lower - log_x
    return int(diff.absprec) if diff.is_zero_at_precision() else diff.valuation


def log_gamma_combination(p: int, weights: Mapping[Fraction, int], N: int) -> PadicScalar:
    """sum c log_p Gamma_p(x) over the (x, c) pairs, modulo p^N."""
    if not weights:
        raise DomainError("empty combination")
    total = PadicScalar.zero(p)
    for x, c in weights.items():
        value = gamma_p(Fraction(x), N, prime=p)
        if value.is_zero_at_precision():
            raise PrecisionError("Gamma_p value vanishes at working precision")  # pragma: no cover
        total = total + padic_log(value) * c
    return total.reduce_to(N)
