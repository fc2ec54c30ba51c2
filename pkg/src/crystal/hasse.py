"""
Hasse Invariant - h_p(z) for the Legendre family y^2 = x(x-1)(x-z)

Implements:
- h_p as (-1)^((p-1)/2) times F(1/2,1/2,1;z) truncated at order (p-1)/2, mod p
- Both functional equations as polynomial identities over F_p
- The supersingular locus inside F_{p^2} by exhaustive evaluation
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple, Union

from sympy import Poly, symbols

from src.core.errors import DeskError, DomainError
from src.padic.finite_field import FiniteField, FiniteFieldElem
from src.series.hypergeometric import hypergeometric_series

logger = logging.getLogger("padic-desk")

_Z = symbols("z")


def _check_odd_prime(p: int) -> None:
    if p == 2 or p < 2:
        raise DomainError(f"the Hasse polynomial is defined for odd primes, got {p}")


@dataclass(frozen=True)
class HassePoly:
    """h_p over F_p, coefficients low degree first."""
    prime: int
    coeffs: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z: Union[int, FiniteFieldElem]):
        p = self.prime
        if isinstance(z, FiniteFieldElem):
            acc = z.field.zero()
            for c in reversed(self.coeffs):
                acc = acc * z + c
            return acc
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * z + c) % p
        return acc

    def to_sympy(self) -> Poly:
        return Poly(list(reversed(self.coeffs)), _Z, modulus=self.prime)

    def __repr__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c:
                terms.append(f"{c}z^{k}" if k > 1 else (f"{c}z" if k == 1 else str(c)))
        return " + ".join(terms) if terms else "0"


def hasse_poly(p: int) -> HassePoly:
    _check_odd_prime(p)
    m = (p - 1) // 2
    sign = -1 if m % 2 else 1
    series = hypergeometric_series("1/2", "1/2", 1, m + 1)
    coeffs = tuple(sign * c.numerator * pow(c.denominator, -1, p) % p for c in series.coeffs)
    return HassePoly(p, coeffs)


def hasse_functional_equations(p: int) -> Dict[str, bool]:
    """
    h(z) = (-1)^m h(1-z) and h(z) = z^m h(1/z) over F_p, m = (p-1)/2; the
    second is the palindromic symmetry of the coefficient list.
    """
    h = hasse_poly(p)
    m = (p - 1) // 2
    sign = -1 if m % 2 else 1
    hp = h.to_sympy()
    reflected = hp.compose(Poly(1 - _Z, _Z, modulus=p)) * sign
    inverted = Poly(list(h.coeffs), _Z, modulus=p)
    return {
        "reflection": (hp - reflected).is_zero,
        "inversion": (hp - inverted).is_zero and h.degree == m,
    }


def supersingular_roots(p: int) -> List[FiniteFieldElem]:
    """Roots of h_p in F_{p^2}; they are distinct and there are (p-1)/2 of them."""
    h = hasse_poly(p)
    field = FiniteField(p, 2)
    roots = [x for x in field.elements() if h(x).is_zero()]
    if len(roots) != h.degree or len(set(roots)) != len(roots):
        raise DeskError(f"h_{p} has {len(roots)} roots in F_{p}^2, expected {h.degree}")  # pragma: no cover
    logger.debug("supersingular roots for p=%d: %s", p, roots)
    return roots


def is_ordinary(s0: FiniteFieldElem) -> bool:
    h = hasse_poly(s0.prime)
    return not h(s0).is_zero()
