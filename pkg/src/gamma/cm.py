"""
CM Gamma Products - prod_u Gamma_p(<p u / d>)^(-eps(u)) for imaginary quadratic fields

Implements:
- Fundamental discriminants, the Kronecker character and brute-force class numbers
- The class-number identity 2hd/w = -sum eps(u) u as a table validator
- Loading and regenerating data/cm_discriminants.json
- Gamma_p products with the exponent w/4h kept symbolic
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Union

from sympy import factorint, jacobi_symbol

from src.core.errors import DataFileError, DomainError
from src.core.parallel import ordered_map
from src.padic.scalar import PadicScalar

from .morita import gamma_p

logger = logging.getLogger("padic-desk")

CM_TABLE_FILE = "cm_discriminants.json"


def kronecker(D: int, n: int) -> int:
    """Kronecker symbol (D/n) for n >= 1."""
    if n < 1:
        raise DomainError("the Kronecker symbol is used for n >= 1 only")
    result = 1
    while n % 2 == 0:
        n //= 2
        if D % 2 == 0:
            return 0
        result *= 1 if D % 8 in (1, 7) else -1
    if n == 1:
        return result
    return result * jacobi_symbol(D % n, n)


def _squarefree(n: int) -> bool:
    return all(e == 1 for e in factorint(n).values())


def is_fundamental(d: int) -> bool:
    """Whether -d is a fundamental discriminant (d > 0)."""
    if d <= 0:
        return False
    if d % 4 == 3:
        return _squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (1, 2) and _squarefree(m)
    return False


def fundamental_discriminants(limit: int) -> List[int]:
    return [d for d in range(3, limit + 1) if is_fundamental(d)]


def class_number(d: int) -> int:
    """Number of reduced forms (a, b, c) with b^2 - 4ac = -d."""
    h = 0
    a = 1
    while 3 * a * a <= d:
        for b in range(-a + 1, a + 1):
            num = b * b + d
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and a == c:
                continue
            if math.gcd(math.gcd(a, abs(b)), c) == 1:
                h += 1
        a += 1
    return h


def roots_of_unity(d: int) -> int:
    return {3: 6, 4: 4}.get(d, 2)


@dataclass(frozen=True)
class CmDiscriminantRow:
    """Fundamental discriminant -d with class number h and w roots of unity."""
    d: int
    h: int
    w: int

    def epsilon(self, u: int) -> int:
        return kronecker(-self.d, u)

    def character_sum(self) -> int:
        return -sum(self.epsilon(u) * u for u in range(1, self.d + 1))

    def satisfies_class_number_identity(self) -> bool:
        return Fraction(2 * self.h * self.d, self.w) == self.character_sum()

    def to_document(self) -> Dict[str, int]:
        return {"d": self.d, "h": self.h, "w": self.w}


def regenerate_cm_table(limit: int = 200) -> List[CmDiscriminantRow]:
    rows = [CmDiscriminantRow(d, class_number(d), roots_of_unity(d)) for d in fundamental_discriminants(limit)]
    logger.info("generated %d CM rows up to d = %d", len(rows), limit)
    return rows


def write_cm_table(rows: List[CmDiscriminantRow], path: Union[str, Path]) -> Path:
    path = Path(path)
    body = ",\n".join(" " + json.dumps(r.to_document()) for r in rows)
    path.write_text("[\n" + body + "\n]\n", encoding="utf-8")
    return path


def load_cm_table(path: Union[str, Path]) -> List[CmDiscriminantRow]:
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise DataFileError(f"{path} not found") from exc
    except json.JSONDecodeError as exc:
        raise DataFileError(f"{path}: {exc}") from exc
    if not isinstance(raw, list):
        raise DataFileError(f"{path}: expected an array of rows")
    rows = []
    for item in raw:
        try:
            rows.append(CmDiscriminantRow(int(item["d"]), int(item["h"]), int(item["w"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise DataFileError(f"{path}: malformed row {item!r}") from exc
    return rows


def validate_cm_table(rows: List[CmDiscriminantRow]) -> List[int]:
    """Discriminants whose row breaks the class-number identity or the oracle."""
    bad = []
    for row in rows:
        if not is_fundamental(row.d):
            bad.append(row.d)
        elif row.h != class_number(row.d) or row.w != roots_of_unity(row.d):
            bad.append(row.d)
        elif not row.satisfies_class_number_identity():
            bad.append(row.d)
    return bad


def find_row(rows: List[CmDiscriminantRow], d: int) -> CmDiscriminantRow:
    for row in rows:
        if row.d == d:
            return row
    raise DomainError(f"-{d} is not in the CM table")


@dataclass
class CmGammaProduct:
    prime: int
    d: int
    base_product: PadicScalar
    exponent: Fraction
    factors: List[Dict[str, Any]]

    def to_document(self) -> Dict[str, Any]:
        return {
            "p": self.prime,
            "d": self.d,
            "base_product": repr(self.base_product),
            "exponent": f"{self.exponent.numerator}/{self.exponent.denominator}",
            "factors": self.factors,
        }


def cm_gamma_product(p: int, row: CmDiscriminantRow, N: int, threads: int = 1) -> CmGammaProduct:
    """prod over (Z/d)^x of Gamma_p(<p u / d>)^(-eps(u)); the exponent w/4h is returned alongside."""
    if p == 2:
        raise DomainError("Gamma_p is only provided for odd p")
    if row.d % p == 0:
        raise DomainError(f"p = {p} ramifies in Q(sqrt(-{row.d}))")
    units = [u for u in range(1, row.d) if math.gcd(u, row.d) == 1]

    def factor(u: int):
        arg = Fraction(p * u % row.d, row.d)
        return arg, -row.epsilon(u), gamma_p(arg, N, prime=p)

    evaluated = ordered_map(factor, units, threads=threads)
    product = PadicScalar.one(p, N)
    factors = []
    for (arg, sign, value), u in zip(evaluated, units):
        product = product * (value if sign > 0 else value.inverse())
        factors.append({"u": u, "arg": f"{arg.numerator}/{arg.denominator}", "power": sign})
    return CmGammaProduct(p, row.d, product, Fraction(row.w, 4 * row.h), factors)
