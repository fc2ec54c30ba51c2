"""
Finite Fields - F_{p^f} with a reproducible modulus

Implements:
- Deterministic choice of the lexicographically-first monic irreducible modulus
- Canonical (fully reduced) element representation
- Field arithmetic, Frobenius, norm and trace
- Enumeration of all field elements
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, List, Sequence, Tuple

from sympy import Poly, factorint, isprime, symbols

from src.core.errors import DomainError, ExactZeroDivisionError

_X = symbols("X")


def poly_mulmod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], m: int) -> Tuple[int, ...]:
    """
    Product of a and b (coefficient lists, low degree first) reduced by a monic
    modulus polynomial and by the integer m.
    """
    f = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    for k in range(len(prod) - 1, f - 1, -1):
        c = prod[k] % m
        if c:
            for j in range(f):
                prod[k - f + j] -= c * modulus[j]
        prod[k] = 0
    out = [c % m for c in prod[:f]]
    out += [0] * (f - len(out))
    return tuple(out)


@lru_cache(maxsize=None)
def residue_modulus(p: int, f: int) -> Tuple[int, ...]:
    """
    Monic irreducible polynomial of degree f over F_p, first in the order of the
    integer c_0 + c_1 p + ... + c_{f-1} p^(f-1). Coefficients low degree first,
    leading 1 included.
    """
    if not isprime(p):
        raise DomainError(f"{p} is not prime")
    if f < 1:
        raise DomainError("degree must be >= 1")
    for code in range(p ** f):
        coeffs = []
        n = code
        for _ in range(f):
            coeffs.append(n % p)
            n //= p
        poly = Poly([1] + coeffs[::-1], _X, modulus=p)
        if poly.is_irreducible:
            return tuple(coeffs) + (1,)
    raise DomainError(f"no irreducible polynomial of degree {f} over F_{p}")  # pragma: no cover


@dataclass(frozen=True)
class FiniteField:
    """The field F_{p^f} = F_p[X]/(modulus)."""
    prime: int
    degree: int

    @property
    def modulus(self) -> Tuple[int, ...]:
        return residue_modulus(self.prime, self.degree)

    @property
    def order(self) -> int:
        return self.prime ** self.degree

    def __call__(self, value) -> "FiniteFieldElem":
        if isinstance(value, FiniteFieldElem):
            if value.field != self:
                raise DomainError("element of a different field")
            return value
        if isinstance(value, int):
            return FiniteFieldElem(self, (value % self.prime,) + (0,) * (self.degree - 1))
        coeffs = tuple(int(c) % self.prime for c in value)
        if len(coeffs) > self.degree:
            raise DomainError(f"too many coefficients for F_{self.order}")
        return FiniteFieldElem(self, coeffs + (0,) * (self.degree - len(coeffs)))

    def from_code(self, code: int) -> "FiniteFieldElem":
        """Element whose coefficients are the base-p digits of code."""
        coeffs = []
        for _ in range(self.degree):
            coeffs.append(code % self.prime)
            code //= self.prime
        return FiniteFieldElem(self, tuple(coeffs))

    def zero(self) -> "FiniteFieldElem":
        return self(0)

    def one(self) -> "FiniteFieldElem":
        return self(1)

    def generator(self) -> "FiniteFieldElem":
        """The smallest element (by code) of multiplicative order q - 1."""
        q1 = self.order - 1
        factors = list(factorint(q1))
        for code in range(1, self.order):
            g = self.from_code(code)
            if all(g ** (q1 // ell) != self.one() for ell in factors):
                return g
        raise DomainError("no generator found")  # pragma: no cover

    def elements(self) -> Iterator["FiniteFieldElem"]:
        for digits in product(range(self.prime), repeat=self.degree):
            yield FiniteFieldElem(self, tuple(reversed(digits)))

    def __repr__(self) -> str:
        return f"F_{self.order}"


@dataclass(frozen=True)
class FiniteFieldElem:
    """Element of F_{p^f} as coefficients c_0..c_{f-1} of 1, X, ..., X^(f-1)."""
    field: FiniteField
    coeffs: Tuple[int, ...]

    def _coerce(self, other) -> "FiniteFieldElem":
        if isinstance(other, FiniteFieldElem):
            if other.field != self.field:
                raise DomainError("elements of different finite fields")
            return other
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    @property
    def prime(self) -> int:
        return self.field.prime

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field.prime, self.field.degree, self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.prime
        return FiniteFieldElem(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "FiniteFieldElem":
        p = self.prime
        return FiniteFieldElem(self.field, tuple((-a) % p for a in self.coeffs))

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
        coeffs = poly_mulmod(self.coeffs, other.coeffs, self.field.modulus, self.prime)
        return FiniteFieldElem(self.field, coeffs)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "FiniteFieldElem":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "FiniteFieldElem":
        if self.is_zero():
            raise ExactZeroDivisionError("inverse of zero in a finite field")
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def frobenius(self, k: int = 1) -> "FiniteFieldElem":
        return self ** (self.prime ** k)

    def conjugates(self) -> List["FiniteFieldElem"]:
        return [self.frobenius(k) for k in range(self.field.degree)]

    def norm(self) -> int:
        result = self.field.one()
        for c in self.conjugates():
            result = result * c
        return result.coeffs[0]

    def trace(self) -> int:
        result = self.field.zero()
        for c in self.conjugates():
            result = result + c
        return result.coeffs[0]

    def in_prime_field(self) -> bool:
        return not any(self.coeffs[1:])

    def code(self) -> int:
        return sum(c * self.prime ** i for i, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        if self.field.degree == 1:
            return str(self.coeffs[0])
        terms = [f"{c}*X^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"
