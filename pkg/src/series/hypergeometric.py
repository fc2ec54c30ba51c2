"""
Hypergeometric Series - F(a, b, c; z) = sum (a)_n (b)_n / ((c)_n n!) z^n

Implements:
- Exact rational coefficients and a p-adic coefficient mode
- Coefficient valuations by additive recursion (no big rationals)
- Valuation slope estimation for the p-adic radius of convergence
- The contiguity relation between F(a, b, c), F(a+1, b, c) and F(a+1, b+1, c+1)
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Optional, Union

from src.core.errors import DomainError
from src.padic.scalar import PadicScalar, valuation_of

from .series import TruncSeries

logger = logging.getLogger("padic-desk")

Rational = Union[int, Fraction]


def _check_denominator(c: Fraction, N: int) -> None:
    # (c)_n vanishes once c + k = 0 for some k < n
    if c.denominator == 1 and c <= 0 and -c < N - 1:
        raise DomainError(f"(c)_n vanishes for c = {c} before order {N}")


def hypergeometric_series(
    a: Rational,
    b: Rational,
    c: Rational,
    N: int,
    prime: Optional[int] = None,
    rel_prec: Optional[int] = None,
) -> TruncSeries:
    """
    Truncation of F(a, b, c; z) to order N.

    With a prime, the coefficients are PadicScalars built by the ratio
    a_{n+1} / a_n = (a+n)(b+n) / ((c+n)(n+1)); rel_prec defaults to 20.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if N < 1:
        raise DomainError("order must be at least 1")
    _check_denominator(c, N)
    if prime is None:
        coeffs: List = [Fraction(1)]
        for n in range(N - 1):
            coeffs.append(coeffs[-1] * (a + n) * (b + n) / ((c + n) * (n + 1)))
        return TruncSeries(tuple(coeffs), "QQ")

    rel_prec = rel_prec or 20
    p = prime
    coeffs = [PadicScalar.one(p, rel_prec)]
    for n in range(N - 1):
        prev = coeffs[-1]
        num = (a + n) * (b + n)
        if prev.exact_zero or num == 0:
            coeffs.append(PadicScalar.zero(p))
            continue
        ratio = PadicScalar.from_rational(p, num / ((c + n) * (n + 1)), rel_prec=rel_prec)
        coeffs.append(prev * ratio)
    return TruncSeries(tuple(coeffs), f"Q_{p}")


def hypergeometric_valuations(a: Rational, b: Rational, c: Rational, N: int, prime: int) -> List[Optional[int]]:
    """v_p(a_n) for n < N; None where the coefficient is exactly zero."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    _check_denominator(c, N)
    p = prime
    vals: List[Optional[int]] = [0]
    v = 0
    for n in range(N - 1):
        if vals[-1] is None or a + n == 0 or b + n == 0:
            vals.append(None)
            continue
        v += valuation_of(a + n, p) + valuation_of(b + n, p) - valuation_of(c + n, p) - valuation_of(n + 1, p)
        vals.append(v)
    return vals


def valuation_slope(f: Union[TruncSeries, List[Optional[int]]], n_min: int, n_max: int, prime: Optional[int] = None) -> Fraction:
    """
    min over n_min <= n <= n_max of v_p(a_n) / n.

    Accepts a series (rational coefficients need `prime`) or a precomputed
    list of valuations. log_p of the radius of convergence is the limit of
    this statistic as the window moves out. Exact zeros and p-adic
    coefficients that vanish at working precision are skipped.
    """
    if n_min < 1:
        raise DomainError("n_min must be at least 1")
    length = len(f)
    if n_max >= length:
        raise DomainError(f"n_max = {n_max} beyond the truncation order {length}")
    is_valuation_list = isinstance(f, list)
    best: Optional[Fraction] = None
    for n in range(n_min, n_max + 1):
        v = f[n] if is_valuation_list else _coefficient_valuation(f[n], prime)
        if v is None:
            continue
        ratio = Fraction(v, n)
        if best is None or ratio < best:
            best = ratio
    if best is None:
        raise DomainError("every sampled coefficient is zero")
    logger.debug("valuation slope over [%d, %d]: %s", n_min, n_max, best)
    return best


def _coefficient_valuation(c, prime: Optional[int]) -> Optional[int]:
    if c is None:
        return None
    if isinstance(c, PadicScalar):
        # zero at working precision bounds v_p from below only
        if c.is_zero_at_precision():
            return None
        return c.valuation
    if prime is None:
        raise DomainError("rational coefficients need a prime")
    if c == 0:
        return None
    return valuation_of(Fraction(c), prime)


def contiguity_residual(a: Rational, b: Rational, c: Rational, N: int) -> TruncSeries:
    """c F(a,b,c) - c F(a+1,b,c) + b z F(a+1,b+1,c+1); identically zero."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    f0 = hypergeometric_series(a, b, c, N)
    f1 = hypergeometric_series(a + 1, b, c, N)
    f2 = hypergeometric_series(a + 1, b + 1, c + 1, N)
    return f0 * c - f1 * c + f2.shift(1) * b
