"""
Differential Operators - alpha_mu(z) D^mu + ... + alpha_0(z) with polynomial coefficients

Implements:
- d/dz and theta = z d/dz conventions with exact conversions (Stirling numbers)
- Affine changes of variable z = a + b t
- Application to truncated series
- Taylor solutions at ordinary points and at regular singular points whose
  indicial roots are covered by the initial jet
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import List, Sequence, Tuple

from sympy.functions.combinatorial.numbers import stirling

from src.core.errors import DomainError

from .series import TruncSeries, series_derive

logger = logging.getLogger("padic-desk")

Poly = Tuple[Fraction, ...]

CONVENTIONS = ("d", "theta")


# Polynomial helpers (coefficients low degree first)
def _trim(p: Sequence[Fraction]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_scale(a: Sequence[Fraction], c) -> Poly:
    return _trim([x * c for x in a])


def poly_shift(a: Sequence[Fraction], k: int) -> Poly:
    """Multiply by z^k."""
    return _trim([Fraction(0)] * k + list(a)) if a else ()


def poly_eval(a: Sequence[Fraction], x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_affine(a: Sequence[Fraction], shift, scale) -> Poly:
    """a(shift + scale t) as a polynomial in t."""
    result: Poly = ()
    lin = (Fraction(shift), Fraction(scale))
    for c in reversed(a):
        result = poly_add(poly_mul(result, lin), (c,))
    return result


def poly_degree(a: Sequence[Fraction]) -> int:
    return len(_trim(a)) - 1


@dataclass(frozen=True)
class DiffOperator:
    """
    sum_i alpha_i(z) D^i with D = d/dz or theta = z d/dz.

    coeffs[i] holds alpha_i, low degree first.
    """
    coeffs: Tuple[Poly, ...]
    convention: str = "d"

    def __post_init__(self):
        if self.convention not in CONVENTIONS:
            raise DomainError(f"unknown derivation convention {self.convention!r}")
        if not self.coeffs or not _trim(self.coeffs[-1]):
            raise DomainError("the leading coefficient of an operator must be nonzero")

    @classmethod
    def from_lists(cls, coeffs: Sequence[Sequence], convention: str = "d") -> "DiffOperator":
        return cls(tuple(_trim([Fraction(c) for c in a]) for a in coeffs), convention)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def leading(self) -> Poly:
        return self.coeffs[-1]

    def degree(self, i: int) -> int:
        return poly_degree(self.coeffs[i])

    # Conversions
    def to_theta(self) -> "DiffOperator":
        """
        theta form of z^mu L: z^k D^k is the falling factorial theta(theta-1)...(theta-k+1).
        """
        if self.convention == "theta":
            return self
        mu = self.order
        betas: List[Poly] = [() for _ in range(mu + 1)]
        for i, alpha in enumerate(self.coeffs):
            if not alpha:
                continue
            lifted = poly_shift(alpha, mu - i)
            for j in range(i + 1):
                s = int(stirling(i, j, kind=1, signed=True))
                if s:
                    betas[j] = poly_add(betas[j], poly_scale(lifted, s))
        return DiffOperator(tuple(betas), "theta")

    def from_theta(self) -> "DiffOperator":
        """d/dz form: theta^j = sum_k S(j, k) z^k D^k."""
        if self.convention == "d":
            return self
        mu = self.order
        alphas: List[Poly] = [() for _ in range(mu + 1)]
        for j, beta in enumerate(self.coeffs):
            if not beta:
                continue
            for k in range(j + 1):
                s = int(stirling(j, k, kind=2))
                if s:
                    alphas[k] = poly_add(alphas[k], poly_scale(poly_shift(beta, k), s))
        return DiffOperator(tuple(alphas), "d")

    def substitute_affine(self, a, b) -> "DiffOperator":
        """The operator in t where z = a + b t; d/dz = (1/b) d/dt."""
        b = Fraction(b)
        if b == 0:
            raise DomainError("affine substitution needs a nonzero scale")
        base = self.from_theta()
        coeffs = tuple(poly_scale(poly_affine(alpha, a, b), 1 / b ** i) for i, alpha in enumerate(base.coeffs))
        return DiffOperator(coeffs, "d")

    def multiply_by_z_power(self, k: int) -> "DiffOperator":
        return DiffOperator(tuple(poly_shift(a, k) for a in self.coeffs), self.convention)

    # Action on series
    def apply(self, y: TruncSeries) -> TruncSeries:
        """L(y); the d convention loses one order per derivative."""
        N = y.order
        out_order = N - self.order if self.convention == "d" else N
        if out_order < 1:
            raise DomainError("series too short for this operator")
        total = TruncSeries.zero(out_order, var=y.var)
        term = y
        for i, alpha in enumerate(self.coeffs):
            if i:
                term = series_derive(term) if self.convention == "d" else term.theta()
            if alpha:
                poly = TruncSeries.polynomial(alpha, out_order, var=y.var)
                total = total + poly * term.truncate(out_order)
        return total

    def __repr__(self) -> str:
        sym = "D" if self.convention == "d" else "theta"
        parts = []
        for i, alpha in enumerate(self.coeffs):
            if alpha:
                poly = " + ".join(f"{c}z^{k}" if k else str(c) for k, c in enumerate(alpha) if c)
                parts.append(f"({poly}){sym}^{i}" if i else f"({poly})")
        return " + ".join(reversed(parts))


def gauss_operator(a, b, c) -> DiffOperator:
    """z(1 - z) D^2 + (c - (a + b + 1) z) D - ab."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    return DiffOperator.from_lists([[-a * b], [c, -(a + b + 1)], [0, 1, -1]])


def hypergeometric_theta_operator(a, b, c) -> DiffOperator:
    """theta(theta + c - 1) - z(theta + a)(theta + b)."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    return DiffOperator.from_lists([[0, -a * b], [c - 1, -(a + b)], [1, -1]], convention="theta")


def ode_taylor(L: DiffOperator, center, inits: Sequence, N: int, var: str = "z") -> TruncSeries:
    """
    Truncated solution around `center` with y^(k)(center) = inits[k] for k < order.

    Works on the theta form sum_s z^s Q_s(theta); at a regular singular centre
    the jet values where the indicial polynomial does not vanish must agree
    with the recursion.
    """
    mu = L.order
    if len(inits) != mu:
        raise DomainError(f"an operator of order {mu} needs {mu} initial values, got {len(inits)}")
    if N < mu:
        raise DomainError("truncation order below the operator order")
    Ld = L.from_theta()
    center = Fraction(center)
    if center != 0:
        Ld = Ld.substitute_affine(center, 1)
    T = Ld.to_theta()

    # Q_s as polynomials in theta
    top = max(len(beta) for beta in T.coeffs)
    Q: List[List[Fraction]] = []
    for s in range(top):
        Q.append([beta[s] if s < len(beta) else Fraction(0) for beta in T.coeffs])
    s0 = next(s for s, q in enumerate(Q) if any(q))
    Q = Q[s0:]

    def q_at(t: int, n: int) -> Fraction:
        return poly_eval(Q[t], n) if t < len(Q) else Fraction(0)

    jet = [Fraction(v) / factorial(k) for k, v in enumerate(inits)]
    y: List[Fraction] = []
    for n in range(N):
        rhs = Fraction(0)
        for t in range(1, min(n, len(Q) - 1) + 1):
            if y[n - t]:
                rhs -= q_at(t, n - t) * y[n - t]
        lead = q_at(0, n)
        if n < mu:
            if lead == 0:
                if rhs != 0:
                    raise DomainError(f"no power-series solution: obstruction at index {n}")
                y.append(jet[n])
            else:
                computed = rhs / lead
                if computed != jet[n]:
                    raise DomainError(
                        f"initial value at index {n} is inconsistent with the operator at its singular centre"
                    )
                y.append(computed)
        else:
            if lead == 0:
                raise DomainError(f"indicial polynomial vanishes at index {n}, beyond the initial jet")
            y.append(rhs / lead)
    logger.debug("ode_taylor: order %d, centre %s, %d coefficients", mu, center, N)
    return TruncSeries(tuple(y), "QQ", var)
