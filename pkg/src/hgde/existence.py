"""
p-adic Triangle Groups - existence verdicts and commensurability classes

Implements:
- finite (Schwarz list) / none / arithmetic-infinite(row) / unknown verdicts
- The other triples sharing a Takeuchi row
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

from sympy import isprime

from src.atlas.takeuchi import TakeuchiRow, arithmetic_padic_triples, takeuchi_lookup
from src.core.errors import DomainError

from .triangles import TriangleTriple, classify_triple


@dataclass
class ExistenceVerdict:
    prime: int
    triple: TriangleTriple
    verdict: str
    detail: str = ""
    field: Optional[str] = None
    padic_disc: Optional[str] = None

    def to_document(self) -> Dict[str, Any]:
        doc: Dict[str, Any] = {"p": self.prime, "triple": str(self.triple), "verdict": self.verdict}
        if self.detail:
            doc["detail"] = self.detail
        if self.field is not None:
            doc["row"] = {"field": self.field, "padic_disc": self.padic_disc}
        return doc


def padic_existence(p: int, t: TriangleTriple, rows: Sequence[TakeuchiRow]) -> ExistenceVerdict:
    """
    Spherical triples give finite groups; euclidean ones never occur; hyperbolic
    ones need p <= 5 and are reported arithmetic only when the p-table lists them.
    Anything else is "unknown".
    """
    if not isprime(p):
        raise DomainError(f"p must be prime, got {p}")
    info = classify_triple(t)
    if info["class"] == "spherical":
        return ExistenceVerdict(p, t, "finite", info["name"])
    if info["class"] == "euclidean":
        return ExistenceVerdict(p, t, "none", "no p-adic triangle group has inverse sum 1")
    if p > 5:
        return ExistenceVerdict(p, t, "none", "no infinite p-adic triangle group for p > 5")
    key = t.sorted()
    for item in arithmetic_padic_triples(rows, p):
        if item.triple == key:
            return ExistenceVerdict(p, t, "arithmetic-infinite", field=item.field, padic_disc=item.padic_disc)
    return ExistenceVerdict(p, t, "unknown", f"{t} is not in the arithmetic {p}-adic table")


def commensurability_class(t: TriangleTriple, rows: Sequence[TakeuchiRow]) -> List[TriangleTriple]:
    """Triples sharing the Takeuchi row of t (t included); empty for non-arithmetic t."""
    row = takeuchi_lookup(rows, t.as_tuple())
    if row is None:
        return []
    return [TriangleTriple(*x) for x in row.triples]
