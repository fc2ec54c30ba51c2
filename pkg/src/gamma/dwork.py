"""
Dwork Exponential - E_pi(z) = exp(pi (z - z^p)) = sum e_n z^n over Z_p[pi]

Implements:
- Coefficient tables from n e_n = pi (e_{n-1} - p e_{n-p}), with honest pi-precision
- The overconvergence bound v_pi(e_n) >= n (p-1)^2 / p^2 and the term counts it implies
- Evaluation at integral points, in particular at Teichmueller roots of unity
- The analytic form of Gamma_p on a residue disk
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from src.core.cache import computation_cache
from src.core.errors import DomainError, PrecisionError
from src.padic.eisenstein import EisensteinElem
from src.padic.scalar import PadicScalar
from src.padic.unramified import UnramifiedElem

logger = logging.getLogger("padic-desk")


@dataclass(frozen=True)
class DworkCoeffs:
    """e_0, ..., e_M of the Dwork exponential, each known modulo pi^pi_prec."""
    prime: int
    coeffs: Tuple[EisensteinElem, ...]
    pi_prec: int

    @property
    def count(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> EisensteinElem:
        if n >= len(self.coeffs):
            raise PrecisionError(f"coefficient e_{n} requested, only {len(self.coeffs)} computed")
        return self.coeffs[n]


def valuation_bound(p: int, n: int) -> Fraction:
    """Lower bound for v_pi(e_n)."""
    return Fraction(n * (p - 1) ** 2, p * p)


def terms_for(p: int, target: int, offset: int = 0, stride: int = 1, loss: int = 0) -> int:
    """
    Least t such that for every s >= t the term e_{stride*s + offset}, divided
    by pi^(loss*s), has pi-valuation >= target by the overconvergence bound.
    """
    growth = valuation_bound(p, stride) - loss
    if growth <= 0:
        raise DomainError("the series does not converge under the overconvergence bound")
    base = valuation_bound(p, offset)
    return max(0, math.ceil((target - base) / growth))


def _compute_coeffs(p: int, M: int, pi_prec: int) -> DworkCoeffs:
    work = pi_prec + (p - 1) * (math.ceil(math.log(M + 1, p)) + 2)
    one = EisensteinElem.one(p, work)
    e = [one]
    for n in range(1, M + 1):
        acc = e[n - 1]
        if n >= p:
            # p = -pi^(p-1)
            acc = acc + e[n - p].shift_pi(p - 1)
        e.append(acc.shift_pi(1) / n)
    reduced = []
    for n, c in enumerate(e):
        if c.pi_prec < pi_prec:
            raise PrecisionError(f"e_{n} only known mod pi^{c.pi_prec}, need pi^{pi_prec}")
        reduced.append(c.with_pi_prec(pi_prec))
    logger.debug("Dwork coefficients: p=%d, M=%d, pi_prec=%d (working %d)", p, M, pi_prec, work)
    return DworkCoeffs(p, tuple(reduced), pi_prec)


def dwork_coeffs(p: int, M: int, pi_prec: int) -> DworkCoeffs:
    """e_0..e_M modulo pi^pi_prec; cached per (p, M, pi_prec)."""
    if p == 2:
        raise DomainError("the Dwork exponential is only provided for odd p")
    if M < 1:
        raise DomainError("at least one coefficient beyond e_0 is required")
    if pi_prec < 1:
        raise DomainError("pi-precision must be >= 1")
    return computation_cache.get_or_compute(
        "dwork", {"p": p, "M": M, "pi_prec": pi_prec}, lambda: _compute_coeffs(p, M, pi_prec)
    )


def _as_eisenstein(p: int, z, pi_prec: int) -> EisensteinElem:
    if isinstance(z, EisensteinElem):
        if z.prime != p:
            raise DomainError(f"prime mismatch: {z.prime} vs {p}")
        if z.v_pi() < 0:
            raise DomainError("the Dwork exponential is evaluated on integral points only")
        return z.with_pi_prec(min(pi_prec, z.pi_prec))
    if isinstance(z, UnramifiedElem):
        if z.degree != 1:
            raise DomainError("Z_{p^f} points with f > 1 are not embedded in Z_p[pi]")
        z = z.to_scalar()
    if isinstance(z, (int, Fraction)):
        z = PadicScalar.from_rational(p, z, abs_prec=math.ceil(pi_prec / (p - 1)))
    if isinstance(z, PadicScalar):
        if not z.is_integral():
            raise DomainError("the Dwork exponential is evaluated on integral points only")
        return EisensteinElem.from_scalar(p, z, pi_prec)
    raise DomainError(f"cannot evaluate the Dwork exponential at {type(z).__name__}")


def dwork_exp_eval(
    z: Union[EisensteinElem, UnramifiedElem, PadicScalar, int],
    coeffs: DworkCoeffs,
    pi_prec: int | None = None,
) -> EisensteinElem:
    """sum e_n z^n modulo pi^pi_prec for integral z."""
    p = coeffs.prime
    target = pi_prec or coeffs.pi_prec
    if target > coeffs.pi_prec:
        raise PrecisionError(f"coefficients known mod pi^{coeffs.pi_prec}, pi^{target} requested")
    needed = terms_for(p, target)
    if needed > coeffs.count:
        raise PrecisionError(f"{needed} Dwork coefficients needed for pi^{target}, have {coeffs.count}")
    x = _as_eisenstein(p, z, target)
    total = EisensteinElem.zero(p, target)
    power = EisensteinElem.one(p, target)
    for n in range(needed):
        total = total + coeffs[n].with_pi_prec(target) * power
        power = power * x
    return total.with_pi_prec(target)


def gamma_p_analytic(
    x: Union[PadicScalar, int, Fraction],
    k: int,
    coeffs: DworkCoeffs,
    pi_prec: int | None = None,
) -> EisensteinElem:
    """
    Gamma_p(x) = pi^(-k) sum_n e_{pn+k} (-pi)^(-n) ((x+k)/p)_n for x = -k mod p.

    The result is known modulo pi^pi_prec (default: as much as the table allows).
    """
    p = coeffs.prime
    if not 0 <= k < p:
        raise DomainError(f"residue class {k} outside 0..{p - 1}")
    if not isinstance(x, PadicScalar):
        x = PadicScalar.from_rational(p, x, abs_prec=coeffs.pi_prec)
    if x.exact_zero:
        x = PadicScalar.zero_at(p, coeffs.pi_prec)
    if not x.is_integral():
        raise DomainError("Gamma_p needs an integral argument")
    shifted = x + k
    if not shifted.is_zero_at_precision() and shifted.valuation < 1:
        raise DomainError(f"argument is not in the residue disk of {-k}")
    y = shifted.shift(-1) if not shifted.exact_zero else shifted

    # term n costs n + k of pi-precision; solve for the best target the table allows
    target = pi_prec if pi_prec is not None else coeffs.pi_prec
    while target >= 1:
        n_max = terms_for(p, target + k, offset=k, stride=p, loss=1)
        if p * n_max + k < coeffs.count and coeffs.pi_prec - n_max - k >= target:
            break
        if pi_prec is not None:
            raise PrecisionError(f"Dwork table too short for Gamma_p modulo pi^{pi_prec}")
        target -= 1
    else:
        raise PrecisionError("Dwork table too short for any precision")

    total = EisensteinElem.zero(p, target + k)
    poch = PadicScalar.one(p, target)
    for n in range(n_max + 1):
        term = coeffs[p * n + k].shift_pi(-n)
        if n % 2:
            term = -term
        if n:
            poch = poch * (y + (n - 1))
        if poch.exact_zero:
            break
        total = total + term.with_pi_prec(target + k) * poch
    logger.debug("Gamma_%d analytic: %d terms, residue class %d, pi^%d", p, n_max + 1, k, target)
    return total.shift_pi(-k).with_pi_prec(target)
