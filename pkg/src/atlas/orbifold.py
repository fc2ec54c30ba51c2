"""
Orbifold Euler Characteristics - chi = 2 - 2g0 - sum (1 - 1/e_i) and smooth covers
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from src.core.errors import DomainError


def orbifold_euler_char(indices: Sequence[int], base_genus: int = 0) -> Fraction:
    if any(e < 1 for e in indices):
        raise DomainError("cone indices must be >= 1")
    if base_genus < 0:
        raise DomainError("genus must be >= 0")
    return 2 - 2 * base_genus - sum((1 - Fraction(1, e) for e in indices), Fraction(0))


def covering_genus(chi_orb: Fraction, degree: int) -> int:
    """Genus of a smooth unramified cover of the given degree: 2 - 2g = degree * chi."""
    if degree < 1:
        raise DomainError("degree must be >= 1")
    total = Fraction(chi_orb) * degree
    if total.denominator != 1 or total.numerator % 2 or total > 2:
        raise DomainError(f"no smooth cover of degree {degree}: degree * chi = {total}")
    return 1 - total.numerator // 2
