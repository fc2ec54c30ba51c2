"""
Amalgam Data - the p-adic (2,4,6) triangle groups as single-edge graphs of finite groups

Implements:
- D6 *_{D3} S4 for p = 3 and D6 *_{D2} D4 for p = 2
- Rational Euler characteristic sum 1/|G_v| - sum 1/|G_e|
- The covering data of the level-2 Shimura curve: quotient orders counted in the
  maximal order of B_{2.3}, genus from both orbifold covers
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from src.core.errors import DomainError

from .orbifold import covering_genus, orbifold_euler_char
from .quaternion import (
    QuaternionAlgebra,
    QuatElem,
    b23,
    distinct_modulo_two,
    maximal_order_basis,
    normalizes_order,
    quotient_representatives,
)


@dataclass(frozen=True)
class GraphOfGroups:
    """Finite graph of finite groups; edges join vertex indices."""
    vertices: Tuple[Tuple[str, int], ...]
    edges: Tuple[Tuple[str, int, int, int], ...]
    notes: Tuple[str, ...] = ()

    def __post_init__(self):
        for name, order, u, v in self.edges:
            for w in (u, v):
                if self.vertices[w][1] % order:
                    raise DomainError(f"edge group {name} does not embed in {self.vertices[w][0]}")

    def euler_characteristic(self) -> Fraction:
        return sum((Fraction(1, o) for _, o in self.vertices), Fraction(0)) - sum(
            (Fraction(1, e[1]) for e in self.edges), Fraction(0)
        )

    def to_document(self) -> Dict[str, Any]:
        return {
            "vertices": [{"group": n, "order": o} for n, o in self.vertices],
            "edges": [{"group": n, "order": o, "ends": [u, v]} for n, o, u, v in self.edges],
            "notes": list(self.notes),
            "euler_characteristic": str(self.euler_characteristic()),
        }


AMALGAMS = {
    3: GraphOfGroups((("D6", 12), ("S4", 24)), (("D3", 6, 0, 1),)),
    2: GraphOfGroups(
        (("D6", 12), ("D4", 8)),
        (("D2", 4, 0, 1),),
        ("the centre of D6 x D4 traces D2 onto itself",),
    ),
}

EXPECTED_EULER = Fraction(-1, 24)


@dataclass
class AmalgamReport:
    prime: int
    graph: GraphOfGroups
    checks: Dict[str, bool] = field(default_factory=dict)
    covering: Dict[str, Any] = field(default_factory=dict)

    def to_document(self) -> Dict[str, Any]:
        return {"p": self.prime, "graph": self.graph.to_document(), "checks": self.checks, "covering": self.covering}


def amalgam_data(p: int, triple: Tuple[int, int, int] = (2, 4, 6)) -> AmalgamReport:
    if tuple(sorted(triple)) != (2, 4, 6):
        raise DomainError("amalgam data is recorded for the (2,4,6) group only")
    if p not in AMALGAMS:
        raise DomainError(f"no amalgam decomposition recorded for p = {p}")
    graph = AMALGAMS[p]
    report = AmalgamReport(p, graph)
    chi = graph.euler_characteristic()
    report.checks["euler_characteristic = -1/24"] = chi == EXPECTED_EULER
    if p == 3:
        genus, automorphisms = level_two_curve()
        ratio = Fraction(genus - 1, automorphisms)
        report.covering = {"genus": genus, "automorphisms": automorphisms, "(g-1)/#Aut": str(ratio)}
        report.checks["(g-1)/#Aut = -chi"] = ratio == -chi
    return report


def _normaliser_index(Q: QuaternionAlgebra, basis: List[QuatElem]) -> int:
    """[Gamma* : Gamma+] as the number of reduced norms 1, 2, 3, 6 met by normalising elements."""
    one_plus_i = Q.one() + Q.i()
    candidates = [Q.one(), one_plus_i, Q.j(), one_plus_i * Q.j()]
    return len({abs(x.nrd()) for x in candidates if normalizes_order(Q, x, basis)})


def quotient_orders() -> List[Dict[str, Any]]:
    """Orders of Gamma+ and Gamma* modulo Gamma+(2), counted in the maximal order of B_{2.3}."""
    Q = b23()
    basis = maximal_order_basis(Q)
    level = distinct_modulo_two(Q, quotient_representatives(Q), basis)
    extended = level * _normaliser_index(Q, basis)
    return [
        {"quotient": "Gamma+/Gamma+(2)", "order": level, "group": "tetrahedral"},
        {"quotient": "Gamma*/Gamma+(2)", "order": extended, "group": "extended octahedral"},
    ]


def level_two_curve() -> Tuple[int, int]:
    """
    Genus of X+(2) from both covers: over the (2,2,3,3) orbifold with the degree
    of Gamma+/Gamma+(2) and over the (2,4,6) orbifold with the degree of
    Gamma*/Gamma+(2), which is also the order of the automorphism group.
    """
    small, large = (q["order"] for q in quotient_orders())
    g_small = covering_genus(orbifold_euler_char([2, 2, 3, 3]), small)
    g_large = covering_genus(orbifold_euler_char([2, 4, 6]), large)
    if g_small != g_large:
        raise DomainError("the two covers disagree on the genus")  # pragma: no cover
    return g_small, large
