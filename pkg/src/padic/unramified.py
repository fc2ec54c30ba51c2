"""
Unramified Extensions - Z_{p^f} with a Teichmueller-compatible modulus

Implements:
- The modulus P_T whose root is the Teichmueller lift of the residue generator
- Integral elements with absolute precision and exact Frobenius
- Teichmueller lifts by fixed-point iteration
- Norms, unit inverses and exact division by p
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from src.core.cache import computation_cache
from src.core.errors import DomainError, PrecisionError

from .finite_field import FiniteField, FiniteFieldElem, poly_mulmod, residue_modulus
from .scalar import PadicScalar


def _poly_pow(a: Sequence[int], n: int, modulus: Sequence[int], m: int) -> Tuple[int, ...]:
    f = len(modulus) - 1
    result: Tuple[int, ...] = (1 % m,) + (0,) * (f - 1)
    base = tuple(a)
    while n:
        if n & 1:
            result = poly_mulmod(result, base, modulus, m)
        base = poly_mulmod(base, base, modulus, m)
        n >>= 1
    return result


def _compute_modulus(p: int, f: int, N: int) -> Tuple[int, ...]:
    P0 = residue_modulus(p, f)
    m = p ** N
    q = p ** f
    if f == 1:
        return P0
    # 1. Teichmueller lift of the class of X in Z[X]/(P0)
    alpha = (0, 1) + (0,) * (f - 2)
    for _ in range(N + 1):
        nxt = _poly_pow(alpha, q, P0, m)
        if nxt == alpha:
            break
        alpha = nxt
    # 2. Product of (Y - alpha^(p^i)) over the Frobenius orbit
    conjugates = [alpha]
    for _ in range(f - 1):
        conjugates.append(_poly_pow(conjugates[-1], p, P0, m))
    zero = (0,) * f
    one = (1,) + (0,) * (f - 1)
    coeffs: List[Tuple[int, ...]] = [one]
    for beta in conjugates:
        shifted = [zero] + coeffs
        scaled = [poly_mulmod(c, beta, P0, m) for c in coeffs] + [zero]
        coeffs = [tuple((s - t) % m for s, t in zip(shifted[k], scaled[k])) for k in range(len(shifted))]
    # 3. The orbit product has coefficients in Z_p
    out = []
    for c in coeffs:
        if any(c[1:]):
            raise PrecisionError("Teichmueller modulus did not descend to Z_p")  # pragma: no cover
        out.append(c[0])
    return tuple(out)


def teichmueller_modulus(p: int, f: int, N: int) -> Tuple[int, ...]:
    """Monic P_T mod p^N, coefficients low degree first; P_T = P0 mod p."""
    return computation_cache.get_or_compute("modulus", (p, f, N), lambda: _compute_modulus(p, f, N))


def _frobenius_image(p: int, f: int, N: int) -> Tuple[int, ...]:
    modulus = teichmueller_modulus(p, f, N)
    return _poly_pow((0, 1) + (0,) * (f - 2), p, modulus, p ** N) if f > 1 else (0,)


@dataclass(frozen=True, eq=False)
class UnramifiedElem:
    """
    Integral element sum c_i alpha^i of Z_{p^f}, known modulo p^prec, where
    alpha is the Teichmueller root of P_T.
    """
    prime: int
    degree: int
    coeffs: Tuple[int, ...]
    prec: int

    @classmethod
    def from_int(cls, p: int, f: int, n: int, prec: int) -> "UnramifiedElem":
        m = p ** prec
        return cls(p, f, (n % m,) + (0,) * (f - 1), prec)

    @classmethod
    def from_scalar(cls, x: PadicScalar, f: int, prec: int | None = None) -> "UnramifiedElem":
        prec = prec if prec is not None else int(min(x.absprec, 10 ** 9))
        return cls.from_int(x.prime, f, x.int_mod(prec), prec)

    @classmethod
    def lift(cls, a: FiniteFieldElem, prec: int) -> "UnramifiedElem":
        """Naive lift of residue coordinates (P_T reduces to the residue modulus)."""
        return cls(a.field.prime, a.field.degree, tuple(a.coeffs), prec)

    @property
    def modulus(self) -> Tuple[int, ...]:
        return teichmueller_modulus(self.prime, self.degree, self.prec)

    @property
    def order(self) -> int:
        return self.prime ** self.degree

    def _coerce(self, other) -> "UnramifiedElem":
        if isinstance(other, UnramifiedElem):
            if (other.prime, other.degree) != (self.prime, self.degree):
                raise DomainError("elements of different unramified rings")
            return other
        if isinstance(other, int):
            return UnramifiedElem.from_int(self.prime, self.degree, other, self.prec)
        if isinstance(other, PadicScalar):
            return UnramifiedElem.from_scalar(other, self.degree, self.prec)
        return NotImplemented

    def with_prec(self, prec: int) -> "UnramifiedElem":
        if prec > self.prec:
            raise PrecisionError(f"cannot raise precision from {self.prec} to {prec}")
        m = self.prime ** prec
        return UnramifiedElem(self.prime, self.degree, tuple(c % m for c in self.coeffs), prec)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prec = min(self.prec, other.prec)
        m = self.prime ** prec
        return UnramifiedElem(self.prime, self.degree, tuple((a + b) % m for a, b in zip(self.coeffs, other.coeffs)), prec)

    __radd__ = __add__

    def __neg__(self) -> "UnramifiedElem":
        m = self.prime ** self.prec
        return UnramifiedElem(self.prime, self.degree, tuple((-a) % m for a in self.coeffs), self.prec)

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

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prec = min(self.prec, other.prec)
        m = self.prime ** prec
        modulus = teichmueller_modulus(self.prime, self.degree, prec)
        return UnramifiedElem(self.prime, self.degree, poly_mulmod(self.coeffs, other.coeffs, modulus, m), prec)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UnramifiedElem":
        if n < 0:
            return self.inverse() ** (-n)
        m = self.prime ** self.prec
        return UnramifiedElem(self.prime, self.degree, _poly_pow(self.coeffs, n, self.modulus, m), self.prec)

    def reduction(self) -> FiniteFieldElem:
        return FiniteField(self.prime, self.degree)(self.coeffs)

    def is_unit(self) -> bool:
        return not self.reduction().is_zero()

    def inverse(self) -> "UnramifiedElem":
        """Inverse of a unit by Newton iteration from the residue inverse."""
        if not self.is_unit():
            if not any(self.coeffs):
                raise PrecisionError("inverse of an element that is zero at working precision")
            raise DomainError("only units of Z_{p^f} are invertible here")
        y = UnramifiedElem.lift(self.reduction().inverse(), self.prec)
        known = 1
        while known < self.prec:
            y = y * (2 - self * y)
            known *= 2
        return y

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def frobenius(self, k: int = 1) -> "UnramifiedElem":
        """Lift of x -> x^p applied k times; fixes Z_p coordinates."""
        result = self
        for _ in range(k % self.degree if self.degree > 1 else 0):
            image = _frobenius_image(result.prime, result.degree, result.prec)
            m = result.prime ** result.prec
            acc = UnramifiedElem.from_int(result.prime, result.degree, 0, result.prec)
            power = UnramifiedElem.from_int(result.prime, result.degree, 1, result.prec)
            img = UnramifiedElem(result.prime, result.degree, image, result.prec)
            for c in result.coeffs:
                if c:
                    acc = acc + UnramifiedElem(
                        result.prime, result.degree, tuple(c * x % m for x in power.coeffs), result.prec
                    )
                power = power * img
            result = acc
        return result

    def conjugates(self) -> List["UnramifiedElem"]:
        return [self.frobenius(k) for k in range(self.degree)]

    def norm(self) -> PadicScalar:
        result = UnramifiedElem.from_int(self.prime, self.degree, 1, self.prec)
        for c in self.conjugates():
            result = result * c
        return result.to_scalar()

    def in_base_ring(self) -> bool:
        return not any(self.coeffs[1:])

    def to_scalar(self) -> PadicScalar:
        """The element as a PadicScalar; it must lie in Z_p."""
        if not self.in_base_ring():
            raise DomainError("element does not lie in Z_p")
        return PadicScalar.from_rational(self.prime, self.coeffs[0], abs_prec=self.prec)

    def coordinates(self) -> List[PadicScalar]:
        return [PadicScalar.from_rational(self.prime, c, abs_prec=self.prec) for c in self.coeffs]

    def valuation(self) -> int:
        """Minimum coordinate valuation; equals prec when zero at working precision."""
        vals = [c.valuation for c in self.coordinates()]
        return min(vals)

    def divide_by_p(self, k: int = 1) -> "UnramifiedElem":
        """Exact division by p^k; precision drops by k."""
        pk = self.prime ** k
        if any(c % pk for c in self.coeffs):
            raise DomainError(f"element is not divisible by {self.prime}^{k}")
        if k >= self.prec:
            raise PrecisionError("division by p exhausts the working precision")
        return UnramifiedElem(self.prime, self.degree, tuple(c // pk for c in self.coeffs), self.prec - k)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        m = self.prime ** min(self.prec, other.prec)
        return all((a - b) % m == 0 for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __repr__(self) -> str:
        return f"UnramifiedElem({self.coeffs} mod {self.prime}^{self.prec}, f={self.degree})"


def teichmueller(a: FiniteFieldElem, N: int) -> UnramifiedElem:
    """The (q-1)-th root of unity congruent to a, modulo p^N."""
    if a.is_zero():
        raise DomainError("the Teichmueller lift of 0 is not a root of unity")
    if N < 1:
        raise DomainError("precision must be >= 1")
    x = UnramifiedElem.lift(a, N)
    q = a.field.order
    for _ in range(N + 1):
        nxt = x ** q
        if nxt == x:
            return nxt
        x = nxt
    raise PrecisionError("Teichmueller iteration did not stabilise")  # pragma: no cover
