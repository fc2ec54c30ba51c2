"""
PGL_2 Action - matrices up to scalars acting on the Bruhat-Tits tree

Implements:
- Pgl2Elem normalised so the smallest entry valuation is 0
- Action on vertices through lattice classes
- Hyperbolic / elliptic classification with translation length v(d) - 2 v(t)
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Sequence

from src.core.errors import DomainError
from src.padic.number_field import UnramifiedRational

from .vertex import (
    Entry,
    Matrix2,
    TreeVertex,
    as_matrix,
    mat_mul,
    neighbors,
    valuation,
    vertex_distance,
    vertex_from_lattice,
)


@dataclass(frozen=True)
class Pgl2Elem:
    prime: int
    degree: int
    entries: Matrix2

    @classmethod
    def of(cls, p: int, f: int, rows: Sequence[Sequence[Entry]]) -> "Pgl2Elem":
        m = as_matrix(p, f, rows)
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        if det.is_zero():
            raise DomainError("singular matrix is not in PGL_2")
        low = int(min(valuation(e) for row in m for e in row))
        scale = Fraction(p) ** (-low)
        return cls(p, f, tuple(tuple(e * scale for e in row) for row in m))

    @classmethod
    def identity(cls, p: int, f: int = 1) -> "Pgl2Elem":
        return cls.of(p, f, [[1, 0], [0, 1]])

    def trace(self):
        return self.entries[0][0] + self.entries[1][1]

    def det(self):
        m = self.entries
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]

    def __mul__(self, other: "Pgl2Elem") -> "Pgl2Elem":
        if (other.prime, other.degree) != (self.prime, self.degree):
            raise DomainError("elements over different fields")
        return Pgl2Elem.of(self.prime, self.degree, mat_mul(self.entries, other.entries))

    def inverse(self) -> "Pgl2Elem":
        (a, b), (c, d) = self.entries
        return Pgl2Elem.of(self.prime, self.degree, [[d, -b], [-c, a]])

    def same_class(self, other: "Pgl2Elem") -> bool:
        """Equal up to a scalar."""
        x = [e for row in self.entries for e in row]
        y = [e for row in other.entries for e in row]
        return all((x[i] * y[j] - x[j] * y[i]).is_zero() for i in range(4) for j in range(i + 1, 4))

    def act(self, v: TreeVertex) -> TreeVertex:
        if (v.prime, v.degree) != (self.prime, self.degree):
            raise DomainError("vertex of a different tree")
        return vertex_from_lattice(self.prime, self.degree, mat_mul(self.entries, v.lattice()))

    def displacement(self, v: TreeVertex) -> int:
        return vertex_distance(v, self.act(v))

    def rows(self):
        return [[repr(e) for e in row] for row in self.entries]


def pgl2_classify(g: Pgl2Elem) -> Dict[str, Any]:
    """Newton polygon of X^2 - tX + d: two slopes apart iff 2 v(t) < v(d)."""
    vt = valuation(g.trace())
    vd = int(valuation(g.det()))
    if vt != float("inf") and 2 * vt < vd:
        return {"kind": "hyperbolic", "translation_length": vd - 2 * int(vt), "v_trace": int(vt), "v_det": vd}
    return {
        "kind": "elliptic",
        "translation_length": 0,
        "v_trace": None if vt == float("inf") else int(vt),
        "v_det": vd,
        "note": "bounded orbits; parabolic elements are not separated",
    }


def random_element(p: int, f: int, rng: random.Random, bound: int = 30) -> Pgl2Elem:
    """Integer-coordinate element of GL_2(Q(alpha)) with nonzero determinant."""
    while True:
        rows = [
            [[rng.randint(-bound, bound) for _ in range(f)] for _ in range(2)]
            for _ in range(2)
        ]
        m = [[UnramifiedRational.from_coords(p, f, c) for c in row] for row in rows]
        if not (m[0][0] * m[1][1] - m[0][1] * m[1][0]).is_zero():
            return Pgl2Elem.of(p, f, m)


def random_vertex(p: int, f: int, rng: random.Random, depth: int = 6) -> TreeVertex:
    """Walk from the base vertex: the level drifts in [-depth, depth]."""
    v = TreeVertex.base(p, f)
    for _ in range(rng.randint(0, depth)):
        v = rng.choice(neighbors(v))
    return v
