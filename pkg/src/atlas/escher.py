"""
Escher Generators - A and B of Delta(2,4,6) in M_2(Q(sqrt-1, sqrt2, sqrt3))

Implements:
- Exact arithmetic in a multiquadratic field, basis of square-free monomials
- A^2 = B^6 = (AB)^4 = -I, tr(AB) = -sqrt2, det(AB) = 1
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from src.core.errors import DomainError

Monomial = Tuple[int, ...]


@dataclass(frozen=True)
class MultiQuadratic:
    """Q(sqrt s_1, ..., sqrt s_k) with the given squares."""
    squares: Tuple[int, ...]
    names: Tuple[str, ...]

    def elem(self, terms: Dict[Monomial, Any]) -> "MQElem":
        return MQElem(self, tuple(sorted((m, Fraction(c)) for m, c in terms.items() if c)))

    def scalar(self, c) -> "MQElem":
        return self.elem({(0,) * len(self.squares): c})

    def root(self, k: int, c=1) -> "MQElem":
        mono = tuple(1 if i == k else 0 for i in range(len(self.squares)))
        return self.elem({mono: c})


@dataclass(frozen=True)
class MQElem:
    ring: MultiQuadratic
    terms: Tuple[Tuple[Monomial, Fraction], ...]

    def _dict(self) -> Dict[Monomial, Fraction]:
        return dict(self.terms)

    def _coerce(self, other) -> "MQElem":
        if isinstance(other, MQElem):
            if other.ring != self.ring:
                raise DomainError("elements of different fields")
            return other
        return self.ring.scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = self._dict()
        for m, c in other.terms:
            out[m] = out.get(m, 0) + c
        return self.ring.elem(out)

    __radd__ = __add__

    def __neg__(self):
        return self.ring.elem({m: -c for m, c in self.terms})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                coeff = c1 * c2
                mono = []
                for e1, e2, s in zip(m1, m2, self.ring.squares):
                    if e1 and e2:
                        coeff *= s
                    mono.append((e1 + e2) % 2)
                key = tuple(mono)
                out[key] = out.get(key, 0) + coeff
        return self.ring.elem(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (MQElem, int, Fraction)):
            return self.terms == self._coerce(other).terms
        return NotImplemented

    __hash__ = None

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms:
            radical = "*".join(f"sqrt({n})" for e, n in zip(m, self.ring.names) if e)
            parts.append(f"{c}*{radical}" if radical else str(c))
        return " + ".join(parts)


Mat2 = List[List[MQElem]]


def mat_mul(x: Mat2, y: Mat2) -> Mat2:
    return [[x[r][0] * y[0][c] + x[r][1] * y[1][c] for c in range(2)] for r in range(2)]


def mat_pow(x: Mat2, n: int) -> Mat2:
    ring = x[0][0].ring
    out = [[ring.scalar(1), ring.scalar(0)], [ring.scalar(0), ring.scalar(1)]]
    for _ in range(n):
        out = mat_mul(out, x)
    return out


def _is_scalar(x: Mat2, c) -> bool:
    return x[0][0] == c and x[1][1] == c and x[0][1] == 0 and x[1][0] == 0


def escher_field() -> MultiQuadratic:
    return MultiQuadratic((-1, 2, 3), ("-1", "2", "3"))


def escher_generators() -> Tuple[Mat2, Mat2]:
    """A = sqrt-1 [[sqrt2, -1], [1, -sqrt2]], B = diag(sqrt3 + sqrt-1, sqrt3 - sqrt-1)/2."""
    K = escher_field()
    i, s2, s3 = K.root(0), K.root(1), K.root(2)
    half = Fraction(1, 2)
    A = [[i * s2, -i], [i, -(i * s2)]]
    B = [[(s3 + i) * half, K.scalar(0)], [K.scalar(0), (s3 - i) * half]]
    return A, B


def escher_generators_check() -> Dict[str, Any]:
    K = escher_field()
    A, B = escher_generators()
    AB = mat_mul(A, B)
    trace = AB[0][0] + AB[1][1]
    det = AB[0][0] * AB[1][1] - AB[0][1] * AB[1][0]
    checks = {
        "A^2 = -I": _is_scalar(mat_pow(A, 2), -1),
        "B^6 = -I": _is_scalar(mat_pow(B, 6), -1),
        "(AB)^4 = -I": _is_scalar(mat_pow(AB, 4), -1),
        "tr(AB) = -sqrt2": trace == -K.root(1),
        "det(AB) = 1": det == 1,
    }
    # A, B have orders 4 and 12 in SL_2; their images in PSL_2 have orders 2 and 6
    orders = {"A": _order_up_to_sign(A), "B": _order_up_to_sign(B), "AB": _order_up_to_sign(AB)}
    return {"checks": checks, "projective_orders": orders, "trace_AB": repr(trace), "ok": all(checks.values())}


def _order_up_to_sign(x: Mat2, limit: int = 24) -> int:
    power = x
    for n in range(1, limit + 1):
        if _is_scalar(power, 1) or _is_scalar(power, -1):
            return n
        power = mat_mul(power, x)
    raise DomainError(f"no projective order up to {limit}")  # pragma: no cover
