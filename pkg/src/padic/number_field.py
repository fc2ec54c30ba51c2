"""
Exact Unramified Numbers - Q(alpha) inside Q_{p^f}

Implements:
- Exact elements sum c_i alpha^i with rational c_i, alpha a root of the integer
  lift of the residue modulus
- Field arithmetic with inverses through sympy polynomial inversion
- p-adic valuation, reduction modulo p^r and residues
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

from sympy import Poly, QQ, Rational as SymRational, invert, symbols

from src.core.errors import DomainError, ExactZeroDivisionError

from .finite_field import FiniteField, FiniteFieldElem, residue_modulus
from .scalar import valuation_of

_X = symbols("X")


def _mulmod_exact(a: Sequence[Fraction], b: Sequence[Fraction], modulus: Sequence[int]) -> Tuple[Fraction, ...]:
    f = len(modulus) - 1
    prod = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    for k in range(len(prod) - 1, f - 1, -1):
        c = prod[k]
        if c:
            for j in range(f):
                prod[k - f + j] -= c * modulus[j]
        prod[k] = Fraction(0)
    out = prod[:f] + [Fraction(0)] * (f - len(prod[:f]))
    return tuple(out)


def reduce_rational(c: Fraction, p: int, r: int) -> Fraction:
    """Canonical representative n / p^k of c modulo p^r Z_p, with 0 <= n < p^(r+k)."""
    c = Fraction(c)
    den = c.denominator
    k = 0
    while den % p == 0:
        den //= p
        k += 1
    if r + k <= 0:
        return Fraction(0)
    m = p ** (r + k)
    n = c.numerator * pow(den, -1, m) % m
    return Fraction(n, p ** k)


@dataclass(frozen=True)
class UnramifiedRational:
    """Exact element of Q(alpha), where alpha generates Z_{p^f} over Z_p."""
    prime: int
    degree: int
    coeffs: Tuple[Fraction, ...]

    @classmethod
    def from_rational(cls, p: int, f: int, r: Union[int, Fraction]) -> "UnramifiedRational":
        return cls(p, f, (Fraction(r),) + (Fraction(0),) * (f - 1))

    @classmethod
    def from_coords(cls, p: int, f: int, coords: Sequence[Union[int, Fraction]]) -> "UnramifiedRational":
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) > f:
            raise DomainError(f"too many coordinates for degree {f}")
        return cls(p, f, coords + (Fraction(0),) * (f - len(coords)))

    @classmethod
    def generator(cls, p: int, f: int) -> "UnramifiedRational":
        if f < 2:
            raise DomainError("Q_p has no separate generator")
        return cls.from_coords(p, f, (0, 1))

    @property
    def modulus(self) -> Tuple[int, ...]:
        return residue_modulus(self.prime, self.degree)

    def _coerce(self, other) -> "UnramifiedRational":
        if isinstance(other, UnramifiedRational):
            if (other.prime, other.degree) != (self.prime, self.degree):
                raise DomainError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return UnramifiedRational.from_rational(self.prime, self.degree, other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return UnramifiedRational(self.prime, self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "UnramifiedRational":
        return UnramifiedRational(self.prime, self.degree, tuple(-a for a in self.coeffs))

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
        return UnramifiedRational(self.prime, self.degree, _mulmod_exact(self.coeffs, other.coeffs, self.modulus))

    __rmul__ = __mul__

    def inverse(self) -> "UnramifiedRational":
        if self.is_zero():
            raise ExactZeroDivisionError("inverse of zero in Q(alpha)")
        if self.degree == 1:
            return UnramifiedRational(self.prime, 1, (1 / self.coeffs[0],))
        num = Poly([SymRational(c.numerator, c.denominator) for c in reversed(self.coeffs)], _X, domain=QQ)
        mod = Poly(list(reversed(self.modulus)), _X, domain=QQ)
        inv = invert(num, mod)
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(inv.all_coeffs())]
        return UnramifiedRational.from_coords(self.prime, self.degree, coeffs)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> "UnramifiedRational":
        if n < 0:
            return self.inverse() ** (-n)
        result = UnramifiedRational.from_rational(self.prime, self.degree, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def valuation(self) -> float:
        """v_p; the basis 1, alpha, ..., alpha^(f-1) is integral and reduces to a basis of F_q."""
        vals = [valuation_of(c, self.prime) for c in self.coeffs if c]
        return min(vals) if vals else float("inf")

    def is_integral(self) -> bool:
        return self.valuation() >= 0

    def in_base_field(self) -> bool:
        return not any(self.coeffs[1:])

    def reduce_mod(self, r: int) -> "UnramifiedRational":
        """Canonical representative modulo p^r Z_{p^f}."""
        return UnramifiedRational(self.prime, self.degree, tuple(reduce_rational(c, self.prime, r) for c in self.coeffs))

    def residue(self) -> FiniteFieldElem:
        if not self.is_integral():
            raise DomainError("residue of a non-integral element")
        p = self.prime
        coords = []
        for c in self.coeffs:
            coords.append(c.numerator * pow(c.denominator, -1, p) % p)
        return FiniteField(p, self.degree)(coords)

    def __repr__(self) -> str:
        if self.degree == 1:
            return str(self.coeffs[0])
        terms = [f"{c}*a^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"
