"""
Triangle Triples - (e0, e1, e_inf) and the hypergeometric parameters they determine

Implements:
- Spherical / euclidean / hyperbolic classification with the Schwarz names
- triple -> (a, b, c) with 1 - c = 1/e0, c - a - b = 1/e1, a - b = 1/e_inf
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from src.core.errors import DomainError
from src.series.operators import DiffOperator, gauss_operator, hypergeometric_theta_operator

EUCLIDEAN = {(2, 3, 6), (2, 4, 4), (3, 3, 3)}
PLATONIC = {(2, 3, 3): "tetrahedral", (2, 3, 4): "octahedral", (2, 3, 5): "icosahedral"}


@dataclass(frozen=True)
class TriangleTriple:
    e0: int
    e1: int
    e_inf: int

    def __post_init__(self):
        if min(self.e0, self.e1, self.e_inf) < 2:
            raise DomainError(f"triangle indices must be >= 2, got {self.as_tuple()}")

    @classmethod
    def parse(cls, text: str) -> "TriangleTriple":
        try:
            parts = [int(x) for x in text.replace("(", "").replace(")", "").split(",")]
        except ValueError as exc:
            raise DomainError(f"cannot read a triple from {text!r}") from exc
        if len(parts) != 3:
            raise DomainError(f"a triple has three entries, got {len(parts)}")
        return cls(*parts)

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.e0, self.e1, self.e_inf)

    def sorted(self) -> Tuple[int, int, int]:
        return tuple(sorted(self.as_tuple()))

    @property
    def inverse_sum(self) -> Fraction:
        return Fraction(1, self.e0) + Fraction(1, self.e1) + Fraction(1, self.e_inf)

    @property
    def kind(self) -> str:
        s = self.inverse_sum
        if s > 1:
            return "spherical"
        if s == 1:
            return "euclidean"
        return "hyperbolic"

    def __str__(self) -> str:
        return "({},{},{})".format(*self.as_tuple())


def classify_triple(t: TriangleTriple) -> Dict[str, str]:
    kind = t.kind
    key = t.sorted()
    if kind == "spherical":
        if key[0] == 2 and key[1] == 2:
            name = f"dihedral D_{key[2]}"
        else:
            name = PLATONIC[key]
    elif kind == "euclidean":
        if key not in EUCLIDEAN:
            raise DomainError(f"{t} has inverse sum 1 but is not a euclidean triple")  # pragma: no cover
        name = "euclidean"
    else:
        name = "hyperbolic"
    return {"triple": str(t), "class": kind, "name": name}


@dataclass(frozen=True)
class HgdeParams:
    """z(z-1)y'' + (c - (a+b+1)z)y' - ab y = 0, up to sign."""
    a: Fraction
    b: Fraction
    c: Fraction

    @classmethod
    def of(cls, a, b, c) -> "HgdeParams":
        return cls(Fraction(a), Fraction(b), Fraction(c))

    def operator(self) -> DiffOperator:
        return gauss_operator(self.a, self.b, self.c)

    def theta_operator(self) -> DiffOperator:
        return hypergeometric_theta_operator(self.a, self.b, self.c)

    def to_document(self) -> Dict[str, str]:
        return {k: str(v) for k, v in (("a", self.a), ("b", self.b), ("c", self.c))}


def triple_to_hgde(t: TriangleTriple) -> HgdeParams:
    i0, i1, iinf = (Fraction(1, e) for e in t.as_tuple())
    a = (1 - i0 - i1 + iinf) / 2
    b = (1 - i0 - i1 - iinf) / 2
    return HgdeParams(a, b, 1 - i0)
