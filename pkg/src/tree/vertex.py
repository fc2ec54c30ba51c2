"""
Bruhat-Tits Tree - vertices of the tree of PGL_2(Q_{p^f}) as closed disks

Implements:
- Normal form (r, a mod p^r) for the disk D(a, |p|^r) and lattice <(p^r, 0), (a, 1)>
- Neighbours (one up, q down), unique geodesics and distances
- Lattice classes to vertices by column reduction; elementary-divisor distances
- Balls around a vertex, explored subtree by subtree, and a DOT emitter
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from src.core.errors import DomainError
from src.core.parallel import ordered_map
from src.padic.number_field import UnramifiedRational

logger = logging.getLogger("padic-desk")

Entry = Union[int, Fraction, UnramifiedRational]
Matrix2 = Tuple[Tuple[UnramifiedRational, UnramifiedRational], Tuple[UnramifiedRational, UnramifiedRational]]


def as_number(p: int, f: int, x: Entry) -> UnramifiedRational:
    if isinstance(x, UnramifiedRational):
        if (x.prime, x.degree) != (p, f):
            raise DomainError("entry lives in a different field")
        return x
    return UnramifiedRational.from_rational(p, f, x)


def valuation(x: UnramifiedRational) -> float:
    return x.valuation()


@dataclass(frozen=True)
class TreeVertex:
    """The disk D(center, |p|^level); center is reduced modulo p^level."""
    prime: int
    degree: int
    level: int
    center: UnramifiedRational

    @classmethod
    def make(cls, p: int, f: int, level: int, center: Entry = 0) -> "TreeVertex":
        return cls(p, f, level, as_number(p, f, center).reduce_mod(level))

    @classmethod
    def base(cls, p: int, f: int = 1) -> "TreeVertex":
        return cls.make(p, f, 0, 0)

    @property
    def q(self) -> int:
        return self.prime ** self.degree

    def contains(self, x: UnramifiedRational) -> bool:
        return valuation(x - self.center) >= self.level

    def contains_disk(self, other: "TreeVertex") -> bool:
        return self.level <= other.level and self.contains(other.center)

    def parent(self) -> "TreeVertex":
        return TreeVertex.make(self.prime, self.degree, self.level - 1, self.center)

    def children(self) -> List["TreeVertex"]:
        p, f, r = self.prime, self.degree, self.level
        step = Fraction(p) ** r
        out = []
        for code in range(self.q):
            digits = [(code // p ** i) % p for i in range(f)]
            shift = UnramifiedRational.from_coords(p, f, [d * step for d in digits])
            out.append(TreeVertex.make(p, f, r + 1, self.center + shift))
        return out

    def lattice(self) -> Matrix2:
        p, f = self.prime, self.degree
        return (
            (as_number(p, f, Fraction(p) ** self.level), self.center),
            (as_number(p, f, 0), as_number(p, f, 1)),
        )

    def digits(self) -> Tuple[int, List[int]]:
        """(lo, d_lo..d_{level-1}): center = sum d_e p^e, d_e an F_q code."""
        p = self.prime
        coords = self.center.coeffs
        lo = min([0] + [-valuation_of_denominator(c, p) for c in coords if c])
        scaled = [int(c * Fraction(p) ** (-lo)) for c in coords]
        out = []
        for e in range(lo, self.level):
            out.append(sum(((n // p ** (e - lo)) % p) * p ** i for i, n in enumerate(scaled)))
        return lo, out

    def label(self) -> str:
        """'q:r:a' with a as comma-separated F_q codes from p^lo upwards; 'lo|' marks lo < 0."""
        lo, ds = self.digits()
        body = ",".join(str(d) for d in ds) or "-"
        if lo < 0:
            body = f"{lo}|{body}"
        return f"{self.q}:{self.level}:{body}"

    def __str__(self) -> str:
        return self.label()


def valuation_of_denominator(c: Fraction, p: int) -> int:
    k, den = 0, c.denominator
    while den % p == 0:
        den //= p
        k += 1
    return k


def neighbors(v: TreeVertex) -> List[TreeVertex]:
    """q + 1 neighbours: the parent disk first, then the q children by residue code."""
    return [v.parent()] + v.children()


def _check_same_tree(v: TreeVertex, w: TreeVertex) -> None:
    if (v.prime, v.degree) != (w.prime, w.degree):
        raise DomainError("vertices of different trees")


def join_level(v: TreeVertex, w: TreeVertex) -> int:
    """Level of the smallest disk containing both."""
    _check_same_tree(v, w)
    gap = valuation(v.center - w.center)
    level = min(v.level, w.level)
    if gap != float("inf"):
        level = min(level, int(gap))
    return level


def geodesic(v: TreeVertex, w: TreeVertex) -> List[TreeVertex]:
    s = join_level(v, w)
    up = [v]
    while up[-1].level > s:
        up.append(up[-1].parent())
    down = [w]
    while down[-1].level > s:
        down.append(down[-1].parent())
    if up[-1] != down[-1]:
        raise DomainError("ascending chains did not meet")  # pragma: no cover
    return up + list(reversed(down[:-1]))


def vertex_distance(v: TreeVertex, w: TreeVertex) -> int:
    s = join_level(v, w)
    return (v.level - s) + (w.level - s)


def _det(m: Matrix2) -> UnramifiedRational:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def as_matrix(p: int, f: int, rows: Sequence[Sequence[Entry]]) -> Matrix2:
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise DomainError("expected a 2x2 matrix")
    return tuple(tuple(as_number(p, f, x) for x in r) for r in rows)


def mat_mul(x: Matrix2, y: Matrix2) -> Matrix2:
    return tuple(tuple(x[r][0] * y[0][c] + x[r][1] * y[1][c] for c in range(2)) for r in range(2))


def vertex_from_lattice(p: int, f: int, rows: Sequence[Sequence[Entry]]) -> TreeVertex:
    """Vertex of the lattice spanned by the columns, by column reduction to [[p^r, a], [0, 1]]."""
    (a, b), (c, d) = as_matrix(p, f, rows)
    if _det(((a, b), (c, d))).is_zero():
        raise DomainError("lattice basis is degenerate")
    if d.is_zero() or (not c.is_zero() and valuation(c) < valuation(d)):
        a, b, c, d = b, a, d, c
    a = a - (c / d) * b
    x, y = a / d, b / d
    r = int(valuation(x))
    return TreeVertex.make(p, f, r, y)


def lattice_distance(p: int, f: int, m1: Sequence[Sequence[Entry]], m2: Sequence[Sequence[Entry]]) -> int:
    """Gap between the elementary divisors of m1^-1 m2."""
    x, y = as_matrix(p, f, m1), as_matrix(p, f, m2)
    det = _det(x)
    inv = ((x[1][1] / det, -x[0][1] / det), (-x[1][0] / det, x[0][0] / det))
    n = mat_mul(inv, y)
    low = min(valuation(e) for row in n for e in row)
    return int(valuation(_det(n)) - 2 * low)


def _subtree(v: TreeVertex, parent: Optional[TreeVertex], depth: int) -> List[Tuple[TreeVertex, Optional[TreeVertex]]]:
    out = [(v, parent)]
    if depth == 0:
        return out
    for w in neighbors(v):
        if w != parent:
            out.extend(_subtree(w, v, depth - 1))
    return out


def ball(v: TreeVertex, radius: int, threads: int = 1) -> List[Tuple[TreeVertex, Optional[TreeVertex]]]:
    """(vertex, parent towards v) for every vertex at distance <= radius, v first."""
    if radius < 0:
        raise DomainError("radius must be >= 0")
    if radius == 0:
        return [(v, None)]
    parts = ordered_map(lambda w: _subtree(w, v, radius - 1), neighbors(v), threads=threads)
    out = [(v, None)]
    for part in parts:
        out.extend(part)
    logger.debug("ball of radius %d around %s: %d vertices", radius, v, len(out))
    return out


def to_dot(entries: Iterable[Tuple[TreeVertex, Optional[TreeVertex]]], name: str = "tree") -> str:
    lines = [f"graph {name} {{"]
    for v, parent in entries:
        lines.append(f'  "{v.label()}";')
        if parent is not None:
            lines.append(f'  "{parent.label()}" -- "{v.label()}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
