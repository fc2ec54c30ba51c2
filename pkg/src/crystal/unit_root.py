"""
Unit-Root Function - f_p(z) = lim (-1)^((p-1)/2) g_{s+1}(z) / g_s(z^p)

Implements:
- Truncations g_s of F(1/2,1/2,1;z) at degree p^s - 1, evaluated modulo p^W
  without forming the large rationals
- The stabilised quotient with an independent cross-check two levels further out
"""

from __future__ import annotations

import logging
from typing import Optional, Tuple, Union

from src.core.config import settings
from src.core.errors import DomainError, PrecisionError
from src.padic.unramified import UnramifiedElem

from .hasse import hasse_poly

logger = logging.getLogger("padic-desk")

Point = Union[int, UnramifiedElem]


def _strip(n: int, p: int) -> Tuple[int, int]:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return n, k


def _truncation_int(p: int, s: int, z: int, W: int) -> int:
    """
    g_s(z) modulo p^W for z in Z_p.

    a_n = a_{n-1} ((2n-1) / 2n)^2 is tracked as p^v num / den with num, den
    units; T = g_s * den accumulates without inverses.
    """
    m = p ** W
    top = p ** s
    num, den, v = 1, 1, 0
    total = 1
    power = 1
    for n in range(1, top):
        a, ka = _strip(2 * n - 1, p)
        b, kb = _strip(2 * n, p)
        v += 2 * (ka - kb)
        num = num * a * a % m
        step = b * b % m
        den = den * step % m
        total = total * step % m
        power = power * z % m
        if v < W:
            total = (total + num * pow(p, v, m) * power) % m
    return total * pow(den, -1, m) % m


def _truncation_ext(p: int, s: int, z: UnramifiedElem, W: int) -> UnramifiedElem:
    """g_s(z) modulo p^W for z in Z_{p^f}."""
    m = p ** W
    z = z.with_prec(W) if z.prec > W else z
    top = p ** s
    num, den, v = 1, 1, 0
    total = UnramifiedElem.from_int(p, z.degree, 1, W)
    power = UnramifiedElem.from_int(p, z.degree, 1, W)
    for n in range(1, top):
        a, ka = _strip(2 * n - 1, p)
        b, kb = _strip(2 * n, p)
        v += 2 * (ka - kb)
        num = num * a * a % m
        step = b * b % m
        den = den * step % m
        total = total * step
        power = power * z
        if v < W:
            total = total + power * (num * pow(p, v, m) % m)
    return total * pow(den, -1, m)


def _quotient(p: int, s: int, z: Point, zp: Point, W: int) -> Point:
    sign = -1 if (p - 1) // 2 % 2 else 1
    if isinstance(z, int):
        denom = _truncation_int(p, s, zp, W)
        if denom % p == 0:
            raise DomainError("g_s(z^p) is not a unit: supersingular reduction")
        m = p ** W
        return sign * _truncation_int(p, s + 1, z, W) * pow(denom, -1, m) % m
    denom = _truncation_ext(p, s, zp, W)
    if not denom.is_unit():
        raise DomainError("g_s(z^p) is not a unit: supersingular reduction")
    return _truncation_ext(p, s + 1, z, W) * denom.inverse() * sign


def _agree(x: Point, y: Point, p: int, N: int) -> bool:
    if isinstance(x, int):
        return (x - y) % p ** N == 0
    return x.with_prec(N) == y.with_prec(N)


def fp_eval(p: int, z: UnramifiedElem, N: int, max_level: Optional[int] = None) -> UnramifiedElem:
    """
    f_p(z) modulo p^N for z on the closed ordinary locus.

    Quotient level s is accurate modulo p^(s+1); the level is raised until
    two consecutive quotients agree modulo p^N with s >= N - 1.
    """
    if p == 2:
        raise DomainError("f_p is defined for odd p")
    if N < 1:
        raise DomainError("precision must be >= 1")
    if z.prec < N:
        raise PrecisionError(f"point known mod p^{z.prec}, p^{N} requested")
    if hasse_poly(p)(z.reduction()).is_zero():
        raise DomainError("supersingular reduction: f_p has no unit-root value here")
    max_level = max_level or settings.fp_max_level
    W = N + 1
    fast = z.degree == 1
    point: Point = z.coeffs[0] % p ** W if fast else z.with_prec(min(z.prec, W))
    point_p: Point = pow(point, p, p ** W) if fast else point ** p

    previous = _quotient(p, 0, point, point_p, W)
    s = 1
    while True:
        if s > max_level:
            raise PrecisionError(f"f_{p} did not stabilise mod {p}^{N} by level {max_level}")
        current = _quotient(p, s, point, point_p, W)
        if s >= N - 1 and _agree(previous, current, p, N):
            break
        previous = current
        s += 1
    logger.debug("f_%d stabilised at level %d modulo %d^%d", p, s, p, N)

    if p ** (s + 3) * z.degree <= settings.fp_crosscheck_max_terms:
        check = _quotient(p, s + 2, point, point_p, W)
        if not _agree(check, current, p, N):
            raise PrecisionError(f"f_{p} cross-check at level {s + 2} disagrees")
    else:
        logger.debug("f_%d cross-check at level %d skipped (term limit)", p, s + 2)

    if fast:
        return UnramifiedElem.from_int(p, 1, current, N)
    return current.with_prec(N)
