"""
Riemann Schemes - exponent tables of second-order Fuchsian equations on P^1

Implements:
- The hypergeometric scheme {0, 1-c} / {0, c-a-b} / {a, b}
- The uniformizing scheme with exponents (1 -+ 1/e)/2 at finite points
- Twists by z^alpha0 (z-1)^alpha1, the Fuchs relation and aligned text output

Exponents at infinity are listed with the sign convention in which the
hypergeometric equation has {a, b} there: a solution behaving like z^-s has
exponent s.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Sequence, Tuple

from src.core.errors import DomainError

from .triangles import HgdeParams, TriangleTriple

Pair = Tuple[Fraction, Fraction]


def _pair(x, y) -> Pair:
    return tuple(sorted((Fraction(x), Fraction(y))))


@dataclass(frozen=True)
class RiemannScheme:
    points: Tuple[str, str, str]
    exponents: Tuple[Pair, Pair, Pair]

    def __post_init__(self):
        if len(self.points) != 3 or len(self.exponents) != 3:
            raise DomainError("a Riemann scheme here has exactly three singular points")
        if self.points[2] != "inf":
            raise DomainError("the third singular point must be inf")

    def fuchs_sum(self) -> Fraction:
        return sum((x + y for x, y in self.exponents), Fraction(0))

    def satisfies_fuchs(self) -> bool:
        return self.fuchs_sum() == 1

    def exponent_differences(self) -> Tuple[Fraction, Fraction, Fraction]:
        return tuple(abs(y - x) for x, y in self.exponents)

    def at(self, point: str) -> Pair:
        return self.exponents[self.points.index(point)]

    def to_table(self) -> str:
        rows = [("point", "exponents", "difference")]
        for pt, (x, y) in zip(self.points, self.exponents):
            rows.append((pt, f"{x}, {y}", str(y - x)))
        widths = [max(len(r[i]) for r in rows) for i in range(3)]
        return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)

    def to_document(self) -> Dict[str, Any]:
        return {
            "points": list(self.points),
            "exponents": [[str(x), str(y)] for x, y in self.exponents],
            "fuchs_sum": str(self.fuchs_sum()),
        }


def riemann_scheme(h: HgdeParams) -> RiemannScheme:
    return RiemannScheme(
        ("0", "1", "inf"),
        (_pair(0, 1 - h.c), _pair(0, h.c - h.a - h.b), _pair(h.a, h.b)),
    )


def uniformizing_scheme(t: TriangleTriple, points: Sequence[str] = ("0", "1")) -> RiemannScheme:
    """Exponents (1 -+ 1/e)/2 at the two finite points and -(1 +- 1/e_inf)/2 at inf."""
    half = Fraction(1, 2)
    i0, i1, iinf = (Fraction(1, e) for e in t.as_tuple())
    return RiemannScheme(
        (points[0], points[1], "inf"),
        (
            _pair(half * (1 - i0), half * (1 + i0)),
            _pair(half * (1 - i1), half * (1 + i1)),
            _pair(-half * (1 + iinf), -half * (1 - iinf)),
        ),
    )


def scheme_twist(scheme: RiemannScheme, alpha0, alpha1) -> RiemannScheme:
    """Scheme of z^alpha0 (z-1)^alpha1 y for y a solution of the original equation."""
    alpha0, alpha1 = Fraction(alpha0), Fraction(alpha1)
    (x0, y0), (x1, y1), (xi, yi) = scheme.exponents
    s = alpha0 + alpha1
    return RiemannScheme(
        scheme.points,
        (_pair(x0 + alpha0, y0 + alpha0), _pair(x1 + alpha1, y1 + alpha1), _pair(xi - s, yi - s)),
    )


def uniformizing_twist(t: TriangleTriple) -> Tuple[Fraction, Fraction]:
    """The alpha_i = (-1 + 1/e_i)/2 that carry the uniformizing scheme to the hypergeometric one."""
    return (Fraction(-1, 2) + Fraction(1, 2 * t.e0), Fraction(-1, 2) + Fraction(1, 2 * t.e1))
