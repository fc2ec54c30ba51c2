"""
Truncated Series - Formal power series a_0 + a_1 z + ... + a_{N-1} z^{N-1}

Implements:
- Ring operations truncated at the smaller operand order
- Composition, multiplicative inverse and derivation
- Line-oriented text and structured document serialisation
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple

from src.core.errors import DomainError


def _zero_like(c: Any) -> Any:
    return c * 0


@dataclass(frozen=True, eq=False)
class TruncSeries:
    """
    Truncated power series with coefficients in an exact ring.

    Features:
    - Coefficients may be Fractions, PadicScalars, FiniteFieldElems or UnramifiedElems
    - The ring tag and variable label travel with the series
    - Arithmetic is exact; order is min of the operand orders
    """
    coeffs: Tuple[Any, ...]
    ring: str = "QQ"
    var: str = "z"

    def __post_init__(self):
        if not self.coeffs:
            raise DomainError("a truncated series needs order >= 1")

    # Construction
    @classmethod
    def from_list(cls, coeffs: Sequence[Any], ring: str = "QQ", var: str = "z") -> "TruncSeries":
        if ring == "QQ":
            coeffs = [Fraction(c) for c in coeffs]
        return cls(tuple(coeffs), ring, var)

    @classmethod
    def zero(cls, N: int, var: str = "z") -> "TruncSeries":
        return cls(tuple(Fraction(0) for _ in range(N)), "QQ", var)

    @classmethod
    def one(cls, N: int, var: str = "z") -> "TruncSeries":
        return cls.monomial(0, N, var=var)

    @classmethod
    def monomial(cls, k: int, N: int, c: Any = 1, var: str = "z") -> "TruncSeries":
        coeffs = [Fraction(0)] * N
        if k < N:
            coeffs[k] = Fraction(c)
        return cls(tuple(coeffs), "QQ", var)

    @classmethod
    def polynomial(cls, poly: Sequence[Any], N: int, var: str = "z") -> "TruncSeries":
        coeffs = [Fraction(0)] * N
        for i, c in enumerate(poly[:N]):
            coeffs[i] = Fraction(c)
        return cls(tuple(coeffs), "QQ", var)

    # Views
    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Any:
        return self.coeffs[n]

    def truncate(self, N: int) -> "TruncSeries":
        if N > self.order:
            raise DomainError(f"cannot extend a series of order {self.order} to {N}")
        return TruncSeries(self.coeffs[:N], self.ring, self.var)

    def _like(self, coeffs) -> "TruncSeries":
        return TruncSeries(tuple(coeffs), self.ring, self.var)

    def _check(self, other: "TruncSeries") -> None:
        if other.var != self.var:
            raise DomainError(f"series in {self.var} and {other.var} cannot be combined")

    # Ring operations
    def __add__(self, other):
        if isinstance(other, TruncSeries):
            self._check(other)
            N = min(self.order, other.order)
            return self._like(a + b for a, b in zip(self.coeffs[:N], other.coeffs[:N]))
        return self._like((self.coeffs[0] + other,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return self._like(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return self._like(c * other for c in self.coeffs)
        self._check(other)
        N = min(self.order, other.order)
        zero = _zero_like(self.coeffs[0])
        out: List[Any] = [zero] * N
        for i in range(N):
            a = self.coeffs[i]
            if a == 0:
                continue
            for j in range(N - i):
                b = other.coeffs[j]
                if b == 0:
                    continue
                out[i + j] = out[i + j] + a * b
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TruncSeries":
        if n < 0:
            return series_inverse(self) ** (-n)
        result = self._like([self.coeffs[0] ** 0] + [_zero_like(self.coeffs[0])] * (self.order - 1))
        for _ in range(n):
            result = result * self
        return result

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return self * series_inverse(other)
        return self._like(c / other for c in self.coeffs)

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by z^k, keeping the order."""
        zero = _zero_like(self.coeffs[0])
        return self._like(([zero] * k + list(self.coeffs))[: self.order])

    def substitute_power(self, k: int, N: int) -> "TruncSeries":
        """f(z^k) to order N."""
        zero = _zero_like(self.coeffs[0])
        out = [zero] * N
        for n, c in enumerate(self.coeffs):
            if n * k >= N:
                break
            out[n * k] = c
        if self.order * k < N:
            raise DomainError(f"f(z^{k}) is only known to order {self.order * k}")
        return self._like(out)

    def theta(self) -> "TruncSeries":
        """z d/dz; the order is preserved."""
        return self._like(c * n for n, c in enumerate(self.coeffs))

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        N = min(self.order, other.order)
        return all(a == b for a, b in zip(self.coeffs[:N], other.coeffs[:N]))

    __hash__ = None

    # Serialisation
    def to_text(self) -> str:
        lines = []
        for n, c in enumerate(self.coeffs):
            lines.append(f"{n}\t{_format_coeff(c)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, var: str = "z") -> "TruncSeries":
        coeffs = []
        for line in text.splitlines():
            if not line.strip():
                continue
            idx, value = line.split("\t")
            if int(idx) != len(coeffs):
                raise DomainError(f"series text out of order at index {idx}")
            coeffs.append(Fraction(value))
        return cls.from_list(coeffs, var=var)

    def to_document(self) -> Dict[str, Any]:
        return {
            "var": self.var,
            "ring": self.ring,
            "order": self.order,
            "coefficients": [_format_coeff(c) for c in self.coeffs],
        }

    def __repr__(self) -> str:
        shown = [f"{_format_coeff(c)}*{self.var}^{n}" for n, c in enumerate(self.coeffs[:6]) if c != 0]
        return " + ".join(shown or ["0"]) + f" + O({self.var}^{self.order})"


def _format_coeff(c: Any) -> str:
    if isinstance(c, (int, Fraction)):
        c = Fraction(c)
        return f"{c.numerator}/{c.denominator}"
    lift = getattr(c, "lift", None)
    if callable(lift):
        value = Fraction(lift())
        return f"{value.numerator}/{value.denominator}"
    return str(c)


def series_derive(f: TruncSeries) -> TruncSeries:
    """d/dz; the order drops by one."""
    if f.order == 1:
        raise DomainError("the derivative of an order-1 series carries no information")
    return TruncSeries(tuple(f.coeffs[n] * n for n in range(1, f.order)), f.ring, f.var)


def series_inverse(f: TruncSeries) -> TruncSeries:
    """1/f for f(0) invertible."""
    f0 = f.coeffs[0]
    if f0 == 0:
        raise DomainError("series with zero constant term is not invertible")
    g0 = f0 ** -1
    g = [g0]
    for n in range(1, f.order):
        acc = _zero_like(f0)
        for k in range(1, n + 1):
            if f.coeffs[k] != 0:
                acc = acc + f.coeffs[k] * g[n - k]
        g.append(-(g0 * acc))
    return TruncSeries(tuple(g), f.ring, f.var)


def series_compose(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """f(g(z)) for g(0) = 0, by Horner's rule."""
    if g.coeffs[0] != 0:
        raise DomainError("composition needs g(0) = 0")
    N = min(f.order, g.order)
    g = g.truncate(N)
    zero = _zero_like(f.coeffs[0])
    result = TruncSeries(tuple([f.coeffs[N - 1]] + [zero] * (N - 1)), f.ring, g.var)
    for k in range(N - 2, -1, -1):
        result = result * g + f.coeffs[k]
    return result
