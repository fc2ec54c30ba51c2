"""
Morita Gamma - Gamma_p on Z_p for odd p

Implements:
- Gamma_p(m) = (-1)^m prod_{0<j<m, p does not divide j} j at integer representatives
- Doubling tables so that representatives up to p^N cost O(N log p^N) polynomial steps
- Orbit products prod_i Gamma_p(p^i k / (p^r - 1)), reported without recognition
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Tuple, Union

from src.core.cache import computation_cache
from src.core.errors import DomainError
from src.padic.scalar import PadicScalar

logger = logging.getLogger("padic-desk")

Poly = Tuple[int, ...]


def _poly_mul_trunc(a: Poly, b: Poly, N: int, m: int) -> Poly:
    out = [0] * min(N, len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x or i >= N:
            continue
        for j, y in enumerate(b[: N - i]):
            out[i + j] = (out[i + j] + x * y) % m
    return tuple(out)


def _poly_shift_arg(a: Poly, L: int, m: int) -> Poly:
    """a(y + L) by repeated synthetic division (Taylor shift)."""
    coeffs = list(a)
    n = len(coeffs)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            coeffs[j] = (coeffs[j] + L * coeffs[j + 1]) % m
    return tuple(coeffs)


def _poly_eval(a: Poly, y: int, m: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * y + c) % m
    return acc


def _doubling_table(p: int, N: int) -> List[Poly]:
    """
    Q_{2^k}(y) = prod_{b < 2^k} P(y + b) with P(y) = prod_{0<i<p} (p y + i), mod p^N.

    The coefficient of y^k in each Q is divisible by p^k, so degree < N suffices.
    """
    m = p ** N
    P: Poly = (1,)
    for i in range(1, p):
        P = _poly_mul_trunc(P, (i, p), N, m)
    table = [P]
    limit = p ** max(N - 1, 1)
    L = 1
    while 2 * L <= limit:
        Q = table[-1]
        table.append(_poly_mul_trunc(Q, _poly_shift_arg(Q, L, m), N, m))
        L *= 2
    logger.debug("Gamma_%d doubling table: %d levels at precision %d", p, len(table), N)
    return table


def _block_product(p: int, N: int, B: int) -> int:
    """prod_{b < B} P(b) mod p^N."""
    m = p ** N
    table = computation_cache.get_or_compute("gamma", {"p": p, "N": N}, lambda: _doubling_table(p, N))
    result = 1
    offset = 0
    k = len(table) - 1
    while B:
        while (1 << k) > B:
            k -= 1
        result = result * _poly_eval(table[k], offset, m) % m
        offset += 1 << k
        B -= 1 << k
    return result


def _gamma_integer(p: int, n: int, N: int) -> int:
    m = p ** N
    B, r = divmod(n, p)
    value = _block_product(p, N, B)
    for i in range(1, r):
        value = value * (p * B + i) % m
    return (-value if n % 2 else value) % m


def gamma_p(x: Union[PadicScalar, int, Fraction], N: int, prime: int | None = None) -> PadicScalar:
    """
    Morita's Gamma_p(x) modulo p^N for integral x.

    The value depends only on x modulo p^N, so the representative in [0, p^N) is used.
    """
    if isinstance(x, PadicScalar):
        p = x.prime
        if not x.is_integral():
            raise DomainError(f"Gamma_p needs an integral argument, got valuation {x.valuation}")
        n = x.int_mod(N)
    else:
        if prime is None:
            raise DomainError("a rational argument needs a prime")
        p = prime
        x = Fraction(x)
        if x.denominator % p == 0:
            raise DomainError(f"Gamma_{p} needs an integral argument, got {x}")
        m = p ** N
        n = x.numerator * pow(x.denominator, -1, m) % m
    if p == 2:
        raise DomainError("Gamma_p is only provided for odd p")
    if N < 1:
        raise DomainError("precision must be >= 1")
    return PadicScalar.from_rational(p, _gamma_integer(p, n, N), abs_prec=N)


def gamma_orbit_product(p: int, k: int, r: int, N: int) -> PadicScalar:
    """prod_{i < r} Gamma_p(p^i k / (p^r - 1)) modulo p^N."""
    if r < 1:
        raise DomainError("orbit length must be >= 1")
    q1 = p ** r - 1
    result = PadicScalar.one(p, N)
    for i in range(r):
        result = result * gamma_p(Fraction(p ** i * k, q1), N, prime=p)
    return result
