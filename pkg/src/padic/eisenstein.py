"""
Eisenstein Ring - Z_p[pi] with pi^(p-1) = -p

Implements:
- Elements as coordinates over PadicScalar in the basis 1, pi, ..., pi^(p-2)
- Absolute precision measured in pi-units
- pi-valuation, shifts by powers of pi and unit inverses
- Comparison modulo a power of pi
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple, Union

from src.core.errors import DomainError, ExactZeroDivisionError, PrecisionError

from .scalar import PadicScalar

Scalar = Union[int, Fraction, PadicScalar]


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


@dataclass(frozen=True, eq=False)
class EisensteinElem:
    """
    sum c_i pi^i for i < p - 1, known modulo pi^pi_prec.

    The stored pi_prec never exceeds what the coordinate precisions justify:
    coordinate i known modulo p^k contributes (p - 1) k + i.
    """
    prime: int
    coeffs: Tuple[PadicScalar, ...]
    pi_prec: int

    # Construction
    @classmethod
    def build(cls, p: int, coeffs: Iterable[PadicScalar], cap: float = math.inf) -> "EisensteinElem":
        if p == 2:
            raise DomainError("the Eisenstein ring Z_p[pi] is only used for odd p")
        coeffs = tuple(coeffs)
        if len(coeffs) != p - 1:
            raise DomainError(f"expected {p - 1} coordinates, got {len(coeffs)}")
        prec = cap
        for i, c in enumerate(coeffs):
            prec = min(prec, (p - 1) * c.absprec + i)
        if prec == math.inf:
            raise PrecisionError("an Eisenstein element needs a finite pi-precision")
        prec = int(prec)
        reduced = tuple(c.reduce_to(_ceil_div(prec - i, p - 1)) for i, c in enumerate(coeffs))
        return cls(p, reduced, prec)

    @classmethod
    def from_scalar(cls, p: int, x: Scalar, pi_prec: int) -> "EisensteinElem":
        if not isinstance(x, PadicScalar):
            x = PadicScalar.from_rational(p, x, abs_prec=_ceil_div(pi_prec, p - 1))
        coeffs = (x,) + tuple(PadicScalar.zero(p) for _ in range(p - 2))
        return cls.build(p, coeffs, pi_prec)

    @classmethod
    def zero(cls, p: int, pi_prec: int) -> "EisensteinElem":
        return cls.from_scalar(p, 0, pi_prec)

    @classmethod
    def one(cls, p: int, pi_prec: int) -> "EisensteinElem":
        return cls.from_scalar(p, 1, pi_prec)

    @classmethod
    def pi(cls, p: int, pi_prec: int) -> "EisensteinElem":
        return cls.one(p, pi_prec).shift_pi(1)

    # Coercion
    def _coerce(self, other) -> "EisensteinElem":
        if isinstance(other, EisensteinElem):
            if other.prime != self.prime:
                raise DomainError(f"prime mismatch: {self.prime} vs {other.prime}")
            return other
        if isinstance(other, (int, Fraction, PadicScalar)):
            return EisensteinElem.from_scalar(self.prime, other, self.pi_prec)
        return NotImplemented

    # Valuation
    def v_pi(self) -> int:
        """pi-adic valuation; equals pi_prec when zero at working precision."""
        p = self.prime
        best = self.pi_prec
        for i, c in enumerate(self.coeffs):
            if not c.is_zero_at_precision():
                best = min(best, (p - 1) * c.valuation + i)
        return best

    def is_zero_at_precision(self) -> bool:
        return self.v_pi() >= self.pi_prec

    # Ring operations
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        coeffs = [a + b for a, b in zip(self.coeffs, other.coeffs)]
        return EisensteinElem.build(self.prime, coeffs, min(self.pi_prec, other.pi_prec))

    __radd__ = __add__

    def __neg__(self) -> "EisensteinElem":
        return EisensteinElem(self.prime, tuple(-c for c in self.coeffs), self.pi_prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, s: Scalar) -> "EisensteinElem":
        """Multiply every coordinate by a Z_p scalar."""
        p = self.prime
        if not isinstance(s, PadicScalar):
            if s == 0:
                return EisensteinElem.zero(p, self.pi_prec)
            s = PadicScalar.from_rational(p, s, rel_prec=max(1, _ceil_div(self.pi_prec, p - 1) + 1))
        coeffs = [c * s for c in self.coeffs]
        cap = self.pi_prec + (p - 1) * s.valuation if not s.exact_zero else math.inf
        return EisensteinElem.build(p, coeffs, cap)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, PadicScalar)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.prime
        n = p - 1
        acc = [PadicScalar.zero(p) for _ in range(2 * n - 1)]
        for i, a in enumerate(self.coeffs):
            if a.exact_zero:
                continue
            for j, b in enumerate(other.coeffs):
                if b.exact_zero:
                    continue
                acc[i + j] = acc[i + j] + a * b
        coeffs = acc[:n]
        for k in range(n, 2 * n - 1):
            if not acc[k].exact_zero:
                coeffs[k - n] = coeffs[k - n] + acc[k] * (-p)
        cap = min(self.v_pi() + other.pi_prec, other.v_pi() + self.pi_prec)
        return EisensteinElem.build(p, coeffs, cap)

    __rmul__ = __mul__

    def shift_pi(self, k: int) -> "EisensteinElem":
        """Multiply by pi^k exactly (k may be negative)."""
        p = self.prime
        coeffs = list(self.coeffs)
        if k >= 0:
            for _ in range(k):
                top = coeffs[-1]
                coeffs = [top * (-p)] + coeffs[:-1]
        else:
            for _ in range(-k):
                low = coeffs[0]
                coeffs = coeffs[1:] + [low / (-p) if not low.exact_zero else low]
        return EisensteinElem.build(p, coeffs, self.pi_prec + k)

    def inverse(self) -> "EisensteinElem":
        """Inverse by Newton iteration on the unit part."""
        p = self.prime
        if all(c.exact_zero for c in self.coeffs):
            raise ExactZeroDivisionError("inverse of exact zero in Z_p[pi]")
        s = self.v_pi()
        if s >= self.pi_prec:
            raise PrecisionError("inverse of an element that is zero at working precision")
        u = self.shift_pi(-s)
        target = u.pi_prec
        y = EisensteinElem.from_scalar(p, u.coeffs[0].inverse(), target)
        known = 1
        while known < target:
            y = y * (2 - u * y)
            known *= 2
        return y.shift_pi(-s)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ExactZeroDivisionError("division of a Z_p[pi] element by exact zero")
            return self.scale(Fraction(1) / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int) -> "EisensteinElem":
        if n < 0:
            return self.inverse() ** (-n)
        result = EisensteinElem.one(self.prime, self.pi_prec)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # Precision and comparison
    def with_pi_prec(self, pi_prec: int) -> "EisensteinElem":
        if pi_prec > self.pi_prec:
            raise PrecisionError(f"element known mod pi^{self.pi_prec}, pi^{pi_prec} requested")
        return EisensteinElem.build(self.prime, self.coeffs, pi_prec)

    def equal_mod_pi(self, other, k: int) -> bool:
        other = self._coerce(other)
        if min(self.pi_prec, other.pi_prec) < k:
            raise PrecisionError(
                f"comparison mod pi^{k} needs pi-precision {k}, have {min(self.pi_prec, other.pi_prec)}"
            )
        return (self - other).v_pi() >= k

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).is_zero_at_precision()

    __hash__ = None

    def in_base_ring(self) -> bool:
        return all(c.is_zero_at_precision() for c in self.coeffs[1:])

    def to_scalar(self) -> PadicScalar:
        """The element as a PadicScalar; it must lie in Q_p at working precision."""
        if not self.in_base_ring():
            raise DomainError("element does not lie in Q_p")
        return self.coeffs[0]

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero_at_precision():
                continue
            terms.append(f"({c.lift()})*pi^{i}" if i else f"({c.lift()})")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(pi^{self.pi_prec})"
