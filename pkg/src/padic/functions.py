"""
p-adic Functions - Iwasawa logarithm and exponential

Implements:
- log_p on Q_p^x and on units of Z_{p^f}, with log_p(p) = 0 and log of roots of unity 0
- exp_p on the open disk of convergence
"""

from __future__ import annotations

import logging
from typing import Union

from src.core.errors import DomainError, ExactZeroDivisionError, PrecisionError

from .scalar import PadicScalar
from .unramified import UnramifiedElem

logger = logging.getLogger("padic-desk")

DEFAULT_EXP_PRECISION = 20


def _floor_log(n: int, p: int) -> int:
    a = 0
    while p ** (a + 1) <= n:
        a += 1
    return a


def _log_one_plus(t: UnramifiedElem, target: int) -> UnramifiedElem:
    """
    log(1 + t) modulo p^target for t divisible by p.

    Terms t^n / n are formed at a raised working precision so that the exact
    division by the p-part of n keeps target digits.
    """
    p = t.prime
    n_max = 1
    while (n_max + 1) - _floor_log(n_max + 1, p) < target:
        n_max += 1
    extra = _floor_log(n_max, p)
    work = target + extra
    t = UnramifiedElem(p, t.degree, tuple(c % p ** work for c in t.coeffs), work)
    m = p ** target
    total = UnramifiedElem.from_int(p, t.degree, 0, target)
    power = UnramifiedElem.from_int(p, t.degree, 1, work)
    for n in range(1, n_max + 1):
        power = power * t
        a, unit = 0, n
        while unit % p == 0:
            a, unit = a + 1, unit // p
        term = power.divide_by_p(a) if a else power
        term = term.with_prec(target)
        inv = pow(unit, -1, m)
        scaled = UnramifiedElem(p, t.degree, tuple(c * inv % m for c in term.coeffs), target)
        total = total + scaled if n % 2 else total - scaled
    logger.debug("log series used %d terms at working precision %d", n_max, work)
    return total


def _log_unit(u: UnramifiedElem) -> UnramifiedElem:
    q = u.order
    w = u ** (q - 1)
    t = w - 1
    if any(c % u.prime for c in t.coeffs):
        raise DomainError("u^(q-1) is not congruent to 1")  # pragma: no cover
    result = _log_one_plus(t, u.prec)
    inv = pow(q - 1, -1, u.prime ** u.prec)
    return result * inv


def padic_log(x: Union[PadicScalar, UnramifiedElem]) -> Union[PadicScalar, UnramifiedElem]:
    """
    Iwasawa logarithm: x = p^v zeta <x> with zeta a root of unity and <x> = 1 mod p;
    returns log <x>, known to the relative precision of x.
    """
    if isinstance(x, PadicScalar):
        if x.exact_zero:
            raise ExactZeroDivisionError("log of exact zero")
        if x.unit == 0:
            raise PrecisionError("log of an element that is zero at working precision")
        u = UnramifiedElem.from_int(x.prime, 1, x.unit, x.rel_prec)
        return _log_unit(u).to_scalar()
    if isinstance(x, UnramifiedElem):
        if not any(x.coeffs):
            raise PrecisionError("log of an element that is zero at working precision")
        v = x.valuation()
        u = x.divide_by_p(v) if v else x
        if not u.is_unit():
            raise DomainError("element of Z_{p^f} with no unit part")  # pragma: no cover
        return _log_unit(u)
    raise DomainError(f"padic_log does not accept {type(x).__name__}")


def padic_exp(x: PadicScalar, prec: int = DEFAULT_EXP_PRECISION) -> PadicScalar:
    """
    sum x^n / n! for v(x) >= 1 (v(x) >= 2 when p = 2). prec is only used for
    the exact zero, whose exponential is 1.
    """
    p = x.prime
    if x.exact_zero:
        return PadicScalar.one(p, prec)
    bound = 2 if p == 2 else 1
    if x.unit == 0:
        if x.valuation < bound:
            raise DomainError("argument may lie outside the disk of convergence")
        return PadicScalar.one(p, x.valuation)
    if x.valuation < bound:
        raise DomainError(f"exp_p needs valuation >= {bound}, got {x.valuation}")
    A = int(x.absprec)
    total = PadicScalar.one(p, A)
    term = PadicScalar.one(p, x.rel_prec)
    n = 1
    # v(x^n / n!) >= n v - (n - 1)/(p - 1), increasing in n
    while n * x.valuation * (p - 1) - (n - 1) < A * (p - 1):
        term = term * x / n
        total = total + term
        n += 1
    return total
