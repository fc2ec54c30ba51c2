"""
PadicScalar - Elements of Q_p known to a finite, honest precision

Implements:
- Unit/valuation/relative-precision representation
- Ultrametric precision propagation for +, -, *, /, ** and inverse
- Exact zero distinguished from "zero at this precision"
- Rational embedding, lifts and digit expansions
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Union

from sympy import legendre_symbol, multiplicity

from src.core.errors import DomainError, ExactZeroDivisionError, PrecisionError

Rational = Union[int, Fraction]


def valuation_of(r: Rational, p: int) -> int:
    """v_p of a nonzero integer or fraction."""
    if r == 0:
        raise DomainError("valuation of exact zero is infinite")
    if isinstance(r, Fraction):
        return multiplicity(p, r.numerator) - multiplicity(p, r.denominator)
    return multiplicity(p, r)


def is_square_in_qp(r: Rational, p: int) -> bool:
    """Whether a nonzero rational is a square in Q_p."""
    v = valuation_of(r, p)
    if v % 2:
        return False
    u = Fraction(r) / Fraction(p) ** v
    n = u.numerator * u.denominator
    if p == 2:
        return n % 8 == 1
    return legendre_symbol(n % p, p) == 1


def _strip(n: int, p: int) -> tuple:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return n, k


@dataclass(frozen=True, eq=False)
class PadicScalar:
    """
    An element p^valuation * unit of Q_p, known modulo p^(valuation + rel_prec).

    Zero at finite precision O(p^k) is stored with unit 0, rel_prec 0 and
    valuation k; the exact zero carries the exact_zero flag.
    """
    prime: int
    unit: int
    valuation: int
    rel_prec: int
    exact_zero: bool = False

    # Constructors
    @classmethod
    def zero(cls, p: int) -> "PadicScalar":
        return cls(p, 0, 0, 0, exact_zero=True)

    @classmethod
    def zero_at(cls, p: int, absprec: int) -> "PadicScalar":
        return cls(p, 0, absprec, 0)

    @classmethod
    def from_rational(
        cls,
        p: int,
        r: Rational,
        rel_prec: int | None = None,
        abs_prec: int | None = None,
    ) -> "PadicScalar":
        """Embed an exact rational; give either a relative or an absolute precision."""
        if isinstance(r, PadicScalar):
            return r
        r = Fraction(r)
        if r == 0:
            if abs_prec is None:
                return cls.zero(p)
            return cls.zero_at(p, abs_prec)
        num, vn = _strip(r.numerator, p)
        den, vd = _strip(r.denominator, p)
        v = vn - vd
        if rel_prec is None:
            if abs_prec is None:
                raise DomainError("a precision is required to embed a rational")
            rel_prec = abs_prec - v
            if rel_prec <= 0:
                return cls.zero_at(p, abs_prec)
        elif abs_prec is not None:
            rel_prec = min(rel_prec, abs_prec - v)
            if rel_prec <= 0:
                return cls.zero_at(p, abs_prec)
        mod = p ** rel_prec
        return cls(p, num * pow(den, -1, mod) % mod, v, rel_prec)

    @classmethod
    def one(cls, p: int, rel_prec: int) -> "PadicScalar":
        return cls(p, 1, 0, rel_prec)

    # Precision bookkeeping
    @property
    def absprec(self) -> float:
        if self.exact_zero:
            return math.inf
        return self.valuation + self.rel_prec

    def is_zero_at_precision(self) -> bool:
        return self.exact_zero or self.unit == 0

    def is_integral(self) -> bool:
        return self.exact_zero or self.valuation >= 0

    def reduce_to(self, absprec: int) -> "PadicScalar":
        """The same element known only modulo p^absprec."""
        if self.exact_zero:
            return PadicScalar.zero_at(self.prime, absprec)
        if absprec >= self.absprec:
            return self
        if self.unit == 0 or absprec <= self.valuation:
            return PadicScalar.zero_at(self.prime, absprec)
        rel = absprec - self.valuation
        return PadicScalar(self.prime, self.unit % self.prime ** rel, self.valuation, rel)

    @staticmethod
    def _normalize(p: int, n: int, v: int, absprec: int) -> "PadicScalar":
        if n == 0:
            return PadicScalar.zero_at(p, absprec)
        n, k = _strip(n, p)
        val = v + k
        rel = absprec - val
        if rel <= 0:
            return PadicScalar.zero_at(p, absprec)
        return PadicScalar(p, n % p ** rel, val, rel)

    def _coerce(self, other, mode: str) -> "PadicScalar":
        if isinstance(other, PadicScalar):
            if other.prime != self.prime:
                raise DomainError(f"prime mismatch: {self.prime} vs {other.prime}")
            return other
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return PadicScalar.zero(self.prime)
            if mode == "mul":
                rel = self.rel_prec if self.rel_prec > 0 else 1
                return PadicScalar.from_rational(self.prime, other, rel_prec=rel)
            if self.exact_zero:
                raise PrecisionError("cannot infer a precision for an exact rational")
            return PadicScalar.from_rational(self.prime, other, abs_prec=int(self.absprec))
        return NotImplemented

    # Ring operations
    def __add__(self, other):
        other = self._coerce(other, "add")
        if other is NotImplemented:
            return NotImplemented
        if self.exact_zero:
            return other
        if other.exact_zero:
            return self
        p = self.prime
        A = min(self.absprec, other.absprec)
        v = min(self.valuation, other.valuation)
        if v >= A:
            return PadicScalar.zero_at(p, A)
        n = (self.unit * p ** (self.valuation - v) + other.unit * p ** (other.valuation - v)) % p ** (A - v)
        return PadicScalar._normalize(p, n, v, A)

    __radd__ = __add__

    def __neg__(self) -> "PadicScalar":
        if self.is_zero_at_precision():
            return self
        return PadicScalar(self.prime, (-self.unit) % self.prime ** self.rel_prec, self.valuation, self.rel_prec)

    def __sub__(self, other):
        other = self._coerce(other, "add")
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other, "add")
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other, "mul")
        if other is NotImplemented:
            return NotImplemented
        p = self.prime
        if self.exact_zero or other.exact_zero:
            return PadicScalar.zero(p)
        if self.unit == 0 or other.unit == 0:
            return PadicScalar.zero_at(p, self.valuation + other.valuation)
        rel = min(self.rel_prec, other.rel_prec)
        return PadicScalar(p, self.unit * other.unit % p ** rel, self.valuation + other.valuation, rel)

    __rmul__ = __mul__

    def inverse(self) -> "PadicScalar":
        if self.exact_zero:
            raise ExactZeroDivisionError("inverse of exact zero")
        if self.unit == 0:
            raise PrecisionError(f"inverse of O({self.prime}^{self.valuation}): zero at working precision")
        mod = self.prime ** self.rel_prec
        return PadicScalar(self.prime, pow(self.unit, -1, mod), -self.valuation, self.rel_prec)

    def __truediv__(self, other):
        other = self._coerce(other, "mul")
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other, "mul")
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> "PadicScalar":
        if n < 0:
            return self.inverse() ** (-n)
        p = self.prime
        if n == 0:
            if self.is_zero_at_precision():
                raise PrecisionError("0^0 at finite precision")
            return PadicScalar.one(p, self.rel_prec)
        if self.exact_zero:
            return self
        if self.unit == 0:
            return PadicScalar.zero_at(p, self.valuation * n)
        return PadicScalar(p, pow(self.unit, n, p ** self.rel_prec), self.valuation * n, self.rel_prec)

    def shift(self, k: int) -> "PadicScalar":
        """Multiply by p^k exactly."""
        if self.exact_zero:
            return self
        return PadicScalar(self.prime, self.unit, self.valuation + k, self.rel_prec)

    # Comparison
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)) and self.exact_zero:
            return other == 0
        coerced = self._coerce(other, "add")
        if coerced is NotImplemented:
            return NotImplemented
        return (self - coerced).is_zero_at_precision()

    __hash__ = None

    # Views
    def lift(self) -> Rational:
        """The canonical rational representative p^v * unit."""
        if self.is_zero_at_precision():
            return 0
        if self.valuation >= 0:
            return self.unit * self.prime ** self.valuation
        return Fraction(self.unit, self.prime ** (-self.valuation))

    def residue(self) -> int:
        """Image in F_p of an integral element."""
        if self.valuation < 0 and not self.is_zero_at_precision():
            raise DomainError("residue of a non-integral element")
        if self.is_zero_at_precision() or self.valuation > 0:
            return 0
        return self.unit % self.prime

    def int_mod(self, N: int) -> int:
        """Integer representative modulo p^N of an integral element known to precision N."""
        if self.exact_zero:
            return 0
        if self.absprec < N:
            raise PrecisionError(f"element known mod p^{self.absprec}, p^{N} requested")
        if self.valuation < 0:
            raise DomainError("element is not integral")
        return (self.unit * self.prime ** self.valuation) % self.prime ** N

    def digits(self) -> List[int]:
        """p-adic digits from p^valuation up to the last known digit."""
        digits = []
        n = self.unit
        for _ in range(self.rel_prec):
            digits.append(n % self.prime)
            n //= self.prime
        return digits

    def __repr__(self) -> str:
        if self.exact_zero:
            return "0"
        return f"{self.lift()} + O({self.prime}^{self.absprec})"
