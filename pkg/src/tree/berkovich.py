"""
Berkovich Points - disk data for points of types 1 to 3 on the p-adic line

Implements:
- BerkovichPoint: classical points and disks D(a, p^rho) with rational rho = log_p(radius)
- Point types by radius membership in the value group p^Z
- Membership in the Drinfeld space P^1 minus P^1(Q_p)
- Retraction of disk points and Q_{p^f}-points onto the Q_p tree
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from src.core.errors import DomainError
from src.padic.number_field import UnramifiedRational
from src.padic.scalar import is_square_in_qp, valuation_of

from .vertex import TreeVertex, as_number


@dataclass(frozen=True)
class BerkovichPoint:
    prime: int
    degree: int
    kind: str
    center: UnramifiedRational
    log_radius: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind not in ("classical", "disk"):
            raise DomainError(f"unknown point kind {self.kind!r}")
        if (self.kind == "classical") != (self.log_radius is None):
            raise DomainError("classical points carry no radius, disk points need one")

    @classmethod
    def classical(cls, p: int, f: int, z) -> "BerkovichPoint":
        return cls(p, f, "classical", as_number(p, f, z))

    @classmethod
    def disk(cls, p: int, f: int, center, log_radius) -> "BerkovichPoint":
        rho = Fraction(log_radius)
        # only the class of the center modulo the disk matters
        level = math.ceil(-rho)
        return cls(p, f, "disk", as_number(p, f, center).reduce_mod(level), rho)

    @classmethod
    def from_vertex(cls, v: TreeVertex) -> "BerkovichPoint":
        return cls.disk(v.prime, v.degree, v.center, -v.level)

    def to_vertex(self) -> TreeVertex:
        if classify_point(self) != 2:
            raise DomainError("only type-2 points are vertices")
        return TreeVertex.make(self.prime, self.degree, int(-self.log_radius), self.center)

    def __str__(self) -> str:
        if self.kind == "classical":
            return f"classical({self.center!r})"
        return f"disk({self.center!r}, p^{self.log_radius})"


@dataclass(frozen=True)
class QuadraticPoint:
    """A root of a X^2 + b X + c over Q_p, given by its coefficients."""
    prime: int
    a: Fraction
    b: Fraction
    c: Fraction

    def discriminant(self) -> Fraction:
        return Fraction(self.b) ** 2 - 4 * Fraction(self.a) * Fraction(self.c)


def parse_point(p: int, f: int, text: str) -> BerkovichPoint:
    """
    'classical c0[,c1]' or 'disk c0[,c1] rho' with rho = log_p(radius).
    Type-4 descriptions ('nested ...') are rejected.
    """
    parts = text.split()
    if not parts:
        raise DomainError("empty point description")
    head = parts[0]
    if head == "nested":
        raise DomainError("type-4 points (nested disk families) are not supported")
    if head not in ("classical", "disk") or len(parts) != (2 if head == "classical" else 3):
        raise DomainError(f"cannot parse point {text!r}")
    try:
        center = UnramifiedRational.from_coords(p, f, [Fraction(c) for c in parts[1].split(",")])
        if head == "classical":
            return BerkovichPoint.classical(p, f, center)
        return BerkovichPoint.disk(p, f, center, Fraction(parts[2]))
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse point {text!r}: {exc}") from exc


def classify_point(x: BerkovichPoint) -> int:
    """1 classical, 2 radius in p^Z, 3 otherwise. Q_{p^f} is unramified so its value group is p^Z."""
    if x.kind == "classical":
        return 1
    return 2 if x.log_radius.denominator == 1 else 3


def in_drinfeld_space(z: Union[UnramifiedRational, BerkovichPoint, QuadraticPoint]) -> bool:
    if isinstance(z, QuadraticPoint):
        if z.a == 0:
            raise DomainError("leading coefficient must be nonzero")
        disc = z.discriminant()
        if disc == 0 or is_square_in_qp(disc, z.prime):
            raise DomainError("the polynomial is reducible over Q_p")
        return True
    if isinstance(z, BerkovichPoint):
        if z.kind == "disk":
            return True
        z = z.center
    return not z.in_base_field()


@dataclass(frozen=True)
class TreePoint:
    """The point at distance height in [0, 1) from vertex towards its parent."""
    vertex: TreeVertex
    height: Fraction = Fraction(0)

    def is_vertex(self) -> bool:
        return self.height == 0

    def __str__(self) -> str:
        if self.is_vertex():
            return self.vertex.label()
        return f"{self.vertex.label()}+{self.height}"


def _rational_distance_level(z: UnramifiedRational) -> float:
    """Largest r with z in a disk of radius |p|^r around a point of Q_p."""
    vals = [valuation_of(c, z.prime) for c in z.coeffs[1:] if c]
    return min(vals) if vals else float("inf")


def retract(x: Union[UnramifiedRational, BerkovichPoint]) -> TreePoint:
    """Image on the tree of PGL_2(Q_p); Q_p-rational classical points are ends and raise."""
    if isinstance(x, UnramifiedRational):
        x = BerkovichPoint.classical(x.prime, x.degree, x)
    z = x.center
    r0 = _rational_distance_level(z)
    level = r0 if x.kind == "classical" else min(Fraction(-x.log_radius), r0)
    if level == float("inf"):
        raise DomainError("Q_p-rational points are ends of the tree, not points of Omega")
    c0 = z.coeffs[0]
    top = math.ceil(level)
    vertex = TreeVertex.make(x.prime, 1, top, c0)
    return TreePoint(vertex, Fraction(top) - Fraction(level))
