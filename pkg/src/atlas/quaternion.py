"""
Quaternion Algebras - (alpha, beta)_Q with i^2 = alpha, j^2 = beta, ij = -ji

Implements:
- Exact arithmetic on a + b i + c j + d ij, reduced norm and trace
- Order closure checks for a Z-basis and normaliser checks
- The two algebras B_{2,3} and B_{2,inf} with their maximal orders
- The torsion search in the level-2 congruence group of B_{2,3}
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Any, Dict, List, Sequence, Tuple

from sympy import Matrix, Rational

from src.core.errors import DomainError

logger = logging.getLogger("padic-desk")


@dataclass(frozen=True)
class QuaternionAlgebra:
    alpha: Fraction
    beta: Fraction
    name: str = ""

    def __post_init__(self):
        if self.alpha == 0 or self.beta == 0:
            raise DomainError("structure constants must be nonzero")

    def __call__(self, a=0, b=0, c=0, d=0) -> "QuatElem":
        return QuatElem(self, (Fraction(a), Fraction(b), Fraction(c), Fraction(d)))

    def one(self) -> "QuatElem":
        return self(1)

    def i(self) -> "QuatElem":
        return self(0, 1)

    def j(self) -> "QuatElem":
        return self(0, 0, 1)

    def ij(self) -> "QuatElem":
        return self(0, 0, 0, 1)


@dataclass(frozen=True)
class QuatElem:
    algebra: QuaternionAlgebra
    coords: Tuple[Fraction, Fraction, Fraction, Fraction]

    def _same(self, other: "QuatElem") -> None:
        if other.algebra != self.algebra:
            raise DomainError("elements of different quaternion algebras")

    def __add__(self, other):
        if not isinstance(other, QuatElem):
            other = self.algebra(other)
        self._same(other)
        return QuatElem(self.algebra, tuple(x + y for x, y in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return QuatElem(self.algebra, tuple(-x for x in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QuatElem):
            c = Fraction(other)
            return QuatElem(self.algebra, tuple(x * c for x in self.coords))
        self._same(other)
        al, be = self.algebra.alpha, self.algebra.beta
        a1, b1, c1, d1 = self.coords
        a2, b2, c2, d2 = other.coords
        return QuatElem(self.algebra, (
            a1 * a2 + al * b1 * b2 + be * c1 * c2 - al * be * d1 * d2,
            a1 * b2 + b1 * a2 - be * c1 * d2 + be * d1 * c2,
            a1 * c2 + c1 * a2 + al * b1 * d2 - al * d1 * b2,
            a1 * d2 + d1 * a2 + b1 * c2 - c1 * b2,
        ))

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        if isinstance(other, QuatElem):
            return self * other.inverse()
        return self * (1 / Fraction(other))

    def __pow__(self, n: int) -> "QuatElem":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.algebra.one()
        for _ in range(n):
            result = result * self
        return result

    def conjugate(self) -> "QuatElem":
        a, b, c, d = self.coords
        return QuatElem(self.algebra, (a, -b, -c, -d))

    def nrd(self) -> Fraction:
        al, be = self.algebra.alpha, self.algebra.beta
        a, b, c, d = self.coords
        return a * a - al * b * b - be * c * c + al * be * d * d

    def trd(self) -> Fraction:
        return 2 * self.coords[0]

    def inverse(self) -> "QuatElem":
        n = self.nrd()
        if n == 0:
            raise DomainError("zero divisor has no inverse")
        return self.conjugate() * (1 / n)

    def __eq__(self, other) -> bool:
        if isinstance(other, QuatElem):
            return self.algebra == other.algebra and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self.coords == (Fraction(other), 0, 0, 0)
        return NotImplemented

    __hash__ = None

    def __repr__(self) -> str:
        names = ("", "i", "j", "ij")
        parts = [f"{c}{n}" if n else str(c) for c, n in zip(self.coords, names) if c]
        return " + ".join(parts) if parts else "0"


def _basis_matrix(basis: Sequence[QuatElem]) -> Matrix:
    if len(basis) != 4:
        raise DomainError("an order basis has four elements")
    M = Matrix([[Rational(x.numerator, x.denominator) for x in e.coords] for e in basis])
    if M.det() == 0:
        raise DomainError("basis does not span the algebra")
    return M


def coordinates_in(basis: Sequence[QuatElem], x: QuatElem, inverse: Matrix = None) -> List[Fraction]:
    """Coefficients of x in the basis (row vectors)."""
    inverse = inverse if inverse is not None else _basis_matrix(basis).inv()
    row = Matrix([[Rational(c.numerator, c.denominator) for c in x.coords]]) * inverse
    return [Fraction(int(v.p), int(v.q)) for v in row]


def _in_span(basis: Sequence[QuatElem], x: QuatElem, inverse: Matrix) -> bool:
    return all(c.denominator == 1 for c in coordinates_in(basis, x, inverse))


def order_closure_check(Q: QuaternionAlgebra, basis: Sequence[QuatElem]) -> Dict[str, Any]:
    """Whether the Z-span of the basis is a ring of integral elements containing 1."""
    inv = _basis_matrix(basis).inv()
    failures = []
    if not _in_span(basis, Q.one(), inv):
        failures.append("1 is not in the span")
    for k, x in enumerate(basis):
        if x.nrd().denominator != 1 or x.trd().denominator != 1:
            failures.append(f"basis element {k} is not integral")
    for a, x in enumerate(basis):
        for b, y in enumerate(basis):
            if not _in_span(basis, x * y, inv):
                failures.append(f"product {a}*{b} leaves the span")
    return {"closed": not failures, "failures": failures}


def normalizes_order(Q: QuaternionAlgebra, x: QuatElem, basis: Sequence[QuatElem]) -> bool:
    """x O x^-1 = O."""
    inv = _basis_matrix(basis).inv()
    xi = x.inverse()
    return all(_in_span(basis, x * e * xi, inv) and _in_span(basis, xi * e * x, inv) for e in basis)


def b23() -> QuaternionAlgebra:
    return QuaternionAlgebra(Fraction(-1), Fraction(3), "B_{2.3}")


def b2inf() -> QuaternionAlgebra:
    return QuaternionAlgebra(Fraction(-1), Fraction(-1), "B_{2,inf}")


def rho(Q: QuaternionAlgebra) -> QuatElem:
    return Q(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))


def maximal_order_basis(Q: QuaternionAlgebra) -> List[QuatElem]:
    """Z + Zi + Zj + Z rho with rho = (1 + i + j + ij)/2."""
    return [Q.one(), Q.i(), Q.j(), rho(Q)]


def torsion_search(bound: int, level: int = 2, traces: Sequence[int] = (-2, 2)) -> List[Tuple[int, int, int, int]]:
    """
    Integral a + bi + cj + dij in B_{2.3} with |a|,|b|,|c|,|d| <= bound,
    reduced trace in `traces` and reduced norm a^2 + b^2 - 3c^2 - 3d^2 = 1.

    Level 2 adds b = c = d != a (mod 2); level 1 imposes nothing more.
    """
    if bound < 1:
        raise DomainError("bound must be >= 1")
    if level not in (1, 2):
        raise DomainError("only levels 1 and 2 are searched")
    found = []
    for t in traces:
        if t % 2:
            continue
        a = t // 2
        if abs(a) > bound:
            continue
        for c in range(-bound, bound + 1):
            for d in range(-bound, bound + 1):
                b2 = 1 - a * a + 3 * c * c + 3 * d * d
                if b2 < 0:
                    continue
                r = isqrt(b2)
                if r * r != b2 or r > bound:
                    continue
                for b in sorted({r, -r}):
                    if level == 2 and not (b % 2 == c % 2 == d % 2 != a % 2):
                        continue
                    found.append((a, b, c, d))
    found.sort()
    logger.debug("torsion search bound=%d level=%d: %d elements", bound, level, len(found))
    return found


def torsion_search_gamma_plus_2(bound: int) -> List[Tuple[int, int, int, int]]:
    return torsion_search(bound, level=2, traces=(-2, 2))


def quotient_representatives(Q: QuaternionAlgebra) -> List[QuatElem]:
    """1, i, j, ij and (1 +- i +- j +- ij)/2: representatives of Gamma+ / Gamma+(2)."""
    half = Fraction(1, 2)
    reps = [Q.one(), Q.i(), Q.j(), Q.ij()]
    for sb in (1, -1):
        for sc in (1, -1):
            for sd in (1, -1):
                reps.append(Q(half, sb * half, sc * half, sd * half))
    return reps


def distinct_modulo_two(Q: QuaternionAlgebra, elements: Sequence[QuatElem], basis: Sequence[QuatElem]) -> int:
    """Number of classes of the elements in O / 2O."""
    inv = _basis_matrix(basis).inv()
    classes = set()
    for x in elements:
        coords = coordinates_in(basis, x, inv)
        if any(c.denominator != 1 for c in coords):
            raise DomainError(f"{x} is not in the order")
        classes.add(tuple(int(c) % 2 for c in coords))
    return len(classes)
