"""
Point Counting - #X_{s0}(F_q) for the Legendre curve y^2 = x(x-1)(x-s0)

Implements:
- Dwork's formula 1 + q - U - q/U with U the product of f_p over Frobenius conjugates
- Rounding into the Hasse interval at the least sufficient precision
- A brute-force oracle through the quadratic character
- Unit-root reports and the twist relation between s0 and 1 - s0
- The unit root of X^2 - aX + q lifted from a trace, and the special values
  f_p(1) = 1 and f_p(-1) through Gamma_p(1/4) and Gamma_p(1/2)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Any, Dict, Union

from src.core.config import settings
from src.core.errors import DomainError, PrecisionError
from src.core.parallel import ordered_map
from src.gamma.morita import gamma_p
from src.padic.finite_field import FiniteField, FiniteFieldElem
from src.padic.scalar import PadicScalar
from src.padic.unramified import UnramifiedElem, teichmueller

from .hasse import is_ordinary
from .unit_root import fp_eval

logger = logging.getLogger("padic-desk")

Modulus = Union[int, FiniteFieldElem]


def _as_modulus(p: int, n: int, s0: Modulus) -> FiniteFieldElem:
    if p == 2:
        raise DomainError("the Legendre family is used for odd p only")
    field = FiniteField(p, n)
    s0 = field(s0)
    if s0.is_zero() or (s0 - 1).is_zero():
        raise DomainError("s0 must avoid 0 and 1")
    return s0


def hasse_interval(q: int):
    r = isqrt(4 * q)
    return q + 1 - r, q + 1 + r


def counting_precision(p: int, n: int) -> int:
    """Least N with p^N at least the number of integers in the Hasse interval."""
    lo, hi = hasse_interval(p ** n)
    N = 1
    while p ** N < hi - lo + 1:
        N += 1
    return N


def unit_root(p: int, n: int, s0: Modulus, N: int, threads: int = 1) -> PadicScalar:
    """U = prod_k f_p(omega^(p^k)) modulo p^N; it lies in Z_p."""
    s0 = _as_modulus(p, n, s0)
    if not is_ordinary(s0):
        raise DomainError(f"s0 = {s0} is supersingular")
    omega = teichmueller(s0, N)
    conjugates = [omega.frobenius(k) for k in range(n)]
    values = ordered_map(lambda w: fp_eval(p, w, N), conjugates, threads=threads)
    U = UnramifiedElem.from_int(p, n, 1, N)
    for v in values:
        U = U * v
    if not U.in_base_ring():
        raise PrecisionError("unit root product is not Frobenius invariant at working precision")
    return U.to_scalar()


def _round_into_interval(residue: int, modulus: int, lo: int, hi: int) -> int:
    candidate = lo + (residue - lo) % modulus
    if candidate > hi or candidate + modulus <= hi:
        raise PrecisionError("precision does not isolate a single integer in the Hasse interval")
    return candidate


def count_points_dwork(p: int, n: int, s0: Modulus, threads: int = 1) -> int:
    q = p ** n
    N = counting_precision(p, n)
    U = unit_root(p, n, s0, N, threads=threads)
    m = p ** N
    u = U.int_mod(N)
    residue = (1 + q - u - q * pow(u, -1, m)) % m
    lo, hi = hasse_interval(q)
    count = _round_into_interval(residue, m, lo, hi)
    logger.debug("Dwork count p=%d n=%d s0=%s: %d (mod %d^%d)", p, n, s0, count, p, N)
    return count


def _chi(a: FiniteFieldElem) -> int:
    if a.is_zero():
        return 0
    q = a.field.order
    return 1 if a ** ((q - 1) // 2) == a.field.one() else -1


def count_points_bruteforce(p: int, n: int, s0: Modulus, threads: int = 1) -> int:
    """1 + sum_x (1 + chi(x(x-1)(x-s0))), the 1 being the point at infinity."""
    s0 = _as_modulus(p, n, s0)
    field = s0.field
    terms = ordered_map(lambda x: 1 + _chi(x * (x - 1) * (x - s0)), list(field.elements()), threads=threads)
    return 1 + sum(terms)


@dataclass
class UnitRootReport:
    prime: int
    degree: int
    s0: str
    unit_root: PadicScalar
    conjugate_root: PadicScalar
    trace: int
    count_dwork: int
    count_brute: int

    @property
    def agree(self) -> bool:
        return self.count_dwork == self.count_brute

    def zeta_numerator(self) -> str:
        return f"1 - ({self.trace})T + {self.prime ** self.degree}T^2"

    def to_document(self) -> Dict[str, Any]:
        return {
            "p": self.prime,
            "n": self.degree,
            "s0": self.s0,
            "count_dwork": self.count_dwork,
            "count_brute": self.count_brute,
            "unit_root": self.unit_root.digits(),
            "trace": self.trace,
            "zeta_numerator": self.zeta_numerator(),
            "agree": self.agree,
        }


def unit_root_report(p: int, n: int, s0: Modulus, N: int | None = None, threads: int = 1) -> UnitRootReport:
    q = p ** n
    N = max(N or 0, counting_precision(p, n))
    U = unit_root(p, n, s0, N, threads=threads)
    conj = PadicScalar.from_rational(p, q, abs_prec=N + n) / U
    count = count_points_dwork(p, n, s0, threads=threads)
    brute = count_points_bruteforce(p, n, s0, threads=threads)
    return UnitRootReport(p, n, str(_as_modulus(p, n, s0)), U, conj, q + 1 - count, count, brute)


def legendre_twist_relation(p: int, n: int, s0: Modulus) -> Dict[str, Any]:
    """
    X_{1-s0} is the twist of X_{s0} by -1: equal counts when q = 1 mod 4,
    counts summing to 2q + 2 when q = 3 mod 4.
    """
    s0 = _as_modulus(p, n, s0)
    q = p ** n
    a = count_points_bruteforce(p, n, s0)
    b = count_points_bruteforce(p, n, 1 - s0)
    if q % 4 == 1:
        holds = a == b
        relation = "equal"
    else:
        holds = a + b == 2 * q + 2
        relation = "sum 2q+2"
    return {"p": p, "n": n, "s0": str(s0), "count": a, "count_reflected": b, "relation": relation, "holds": holds}


def unit_root_from_trace(p: int, n: int, trace: int, N: int) -> PadicScalar:
    """The root of X^2 - trace X + p^n that is a p-adic unit, modulo p^N."""
    if trace % p == 0:
        raise DomainError(f"trace {trace} is divisible by {p}: no unit root")
    q = p ** n
    m = p ** N
    u = trace % m
    # u = trace - q/u gains n digits per step
    for _ in range(-(-N // n)):
        u = (trace - q * pow(u, -1, m)) % m
    return PadicScalar.from_rational(p, u, abs_prec=N)


def _limit_precision(p: int, N: int) -> int:
    M = N
    while M > 1 and p ** M > settings.fp_limit_max_terms:
        M -= 1
    return M


def fp_special_values(p: int, N: int) -> Dict[str, Any]:
    """
    f_p(1) = 1 and f_p(-1) = (-1)^((p-1)/4) Gamma_p(1/4)^2 / Gamma_p(1/2) modulo p^N.

    -1 is ordinary exactly when p = 1 mod 4. f_p(-1) is the unit root of the
    curve X_{-1} over F_p, lifted from its brute-force trace to p^N; the limit
    of truncation quotients is evaluated at the largest precision whose
    truncations stay within fp_limit_max_terms.
    """
    if p % 4 != 1:
        raise DomainError(f"-1 is supersingular for p = {p}; the special value needs p = 1 mod 4")
    M = _limit_precision(p, N)
    at_one = fp_eval(p, UnramifiedElem.from_int(p, 1, 1, M), M).to_scalar().int_mod(M)
    at_minus_one = fp_eval(p, UnramifiedElem.from_int(p, 1, -1, M), M).to_scalar().int_mod(M)
    trace = p + 1 - count_points_bruteforce(p, 1, -1)
    from_trace = unit_root_from_trace(p, 1, trace, N).int_mod(N)
    quarter = gamma_p(Fraction(1, 4), N, prime=p)
    half = gamma_p(Fraction(1, 2), N, prime=p)
    sign = -1 if (p - 1) // 4 % 2 else 1
    expected = (quarter * quarter / half * sign).int_mod(N)
    if M < N:
        logger.info("f_%d limit evaluated modulo %d^%d; unit root carried to %d^%d", p, p, M, p, N)
    return {
        "p": p,
        "precision": N,
        "limit_precision": M,
        "trace": trace,
        "f_p(1)": at_one,
        "f_p(-1)": at_minus_one,
        "unit_root": from_trace,
        "gamma_expression": expected,
        "f_p(1) = 1": at_one == 1 % p ** M,
        "f_p(-1) matches": from_trace == expected and at_minus_one == expected % p ** M,
    }
