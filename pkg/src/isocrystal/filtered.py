"""
Filtered Isocrystals - (V, Phi, F^*) over Q_p with trivial sigma and N = 0

Implements:
- Newton number t_N = v_p(det Phi) and Hodge number t_H = sum i dim gr^i
- Phi-stable subspaces for distinct eigenvalues in Q_p (fast path and kernel oracle)
- Quadratic Frobenius split over Q_p but not over Q, handled in Q(sqrt D)
- Irreducibility certificates for Frobenius without rational eigenlines
- Weak admissibility with a violating subobject as witness
- Duals and a plain-text reader
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import Matrix, Poly, Rational, expand, eye, sqrt, symbols

from src.core.errors import DomainError, UnsupportedFrobeniusError
from src.padic.scalar import is_square_in_qp, valuation_of

logger = logging.getLogger("padic-desk")

_X = symbols("X")


def _fraction(x) -> Fraction:
    x = Rational(x)
    return Fraction(int(x.p), int(x.q))


def _rank(rows: Sequence[Sequence]) -> int:
    rows = [list(r) for r in rows]
    return Matrix(rows).rank(simplify=True) if rows else 0


def _as_columns(basis: Sequence[Sequence]) -> Matrix:
    return Matrix([list(v) for v in basis]).T


def _intersection_dim(a: Sequence[Sequence], b: Sequence[Sequence]) -> int:
    if not a or not b:
        return 0
    return _rank(a) + _rank(b) - _rank(list(a) + list(b))


def _orthogonal(basis: Sequence[Sequence], n: int) -> List[Tuple[Any, ...]]:
    if not basis:
        return [tuple(eye(n).row(i)) for i in range(n)]
    return [tuple(v) for v in Matrix([list(r) for r in basis]).nullspace()]


@dataclass(frozen=True)
class FiltrationStep:
    """F^jump is spanned by basis; it holds until the next listed jump."""
    jump: int
    basis: Tuple[Tuple[Any, ...], ...]

    @property
    def dim(self) -> int:
        return _rank(self.basis)


@dataclass
class FilteredIsocrystal:
    """
    Frobenius acts on column vectors; the flag is listed by increasing jump.

    Features:
    - F^i is the space of the least listed jump >= i, zero beyond the last jump
    - The first listed space is the whole of V
    """
    prime: int
    phi: Matrix
    flag: List[FiltrationStep]

    def __post_init__(self):
        self.phi = Matrix(self.phi)
        n = self.dimension
        if self.phi.shape != (n, n):
            raise DomainError("Frobenius must be a square matrix")
        if self.phi.det() == 0:
            raise DomainError("Frobenius must be invertible")
        if not self.flag:
            raise DomainError("a filtration needs at least one step")
        jumps = [s.jump for s in self.flag]
        if jumps != sorted(set(jumps)):
            raise DomainError("filtration jumps must be strictly increasing")
        if self.flag[0].dim != n:
            raise DomainError("the filtration must be exhaustive: the first step is the whole space")
        for lower, upper in zip(self.flag, self.flag[1:]):
            if upper.dim >= lower.dim or _intersection_dim(lower.basis, upper.basis) != upper.dim:
                raise DomainError(f"F^{upper.jump} must be a proper subspace of F^{lower.jump}")
            if upper.dim == 0:
                raise DomainError("zero steps are implicit past the last jump")

    @classmethod
    def build(cls, prime: int, phi: Sequence[Sequence], flag: Dict[int, Sequence[Sequence]]) -> "FilteredIsocrystal":
        steps = [
            FiltrationStep(i, tuple(tuple(Rational(x) for x in v) for v in flag[i]))
            for i in sorted(flag)
        ]
        return cls(prime, Matrix([[Rational(x) for x in row] for row in phi]), steps)

    @property
    def dimension(self) -> int:
        return self.phi.shape[0]

    def hodge_dims(self) -> Dict[int, int]:
        """dim gr^i at each jump."""
        out = {}
        for k, step in enumerate(self.flag):
            nxt = self.flag[k + 1].dim if k + 1 < len(self.flag) else 0
            out[step.jump] = step.dim - nxt
        return out

    def describe(self) -> Dict[str, Any]:
        return {
            "p": self.prime,
            "dimension": self.dimension,
            "phi": [[str(x) for x in self.phi.row(i)] for i in range(self.dimension)],
            "hodge": {str(i): d for i, d in self.hodge_dims().items()},
        }


def newton_number(V: FilteredIsocrystal, subspace: Optional[Sequence[Sequence]] = None) -> int:
    """v_p(det Phi) on V or on a Phi-stable subspace given by a basis."""
    if subspace is None:
        det = V.phi.det()
    else:
        B = _as_columns(subspace)
        restricted = (B.T * B).inv() * B.T * V.phi * B
        if B * restricted != V.phi * B:
            raise DomainError("subspace is not stable under Frobenius")
        det = expand(restricted.det())
        if not det.is_Rational:
            raise DomainError("subspace is not defined over Q: its Newton number comes from stable_subspaces")
    return valuation_of(_fraction(det), V.prime)


def hodge_number(V: FilteredIsocrystal, subspace: Optional[Sequence[Sequence]] = None) -> int:
    """sum i dim gr^i for the filtration induced on the subspace (V itself by default)."""
    if subspace is None:
        return sum(i * d for i, d in V.hodge_dims().items())
    dims = [_intersection_dim(subspace, step.basis) for step in V.flag]
    total = 0
    for k, step in enumerate(V.flag):
        nxt = dims[k + 1] if k + 1 < len(dims) else 0
        total += step.jump * (dims[k] - nxt)
    return total


def _newton_polygon_is_pure(coeffs: List[Fraction], p: int) -> Optional[Tuple[int, int]]:
    """(v(det), n) when the Newton polygon of the monic char poly is a single segment."""
    n = len(coeffs) - 1
    c0 = coeffs[-1]
    v0 = valuation_of(c0, p)
    for k in range(1, n):
        c = coeffs[n - k]
        if c != 0 and valuation_of(c, p) * n < v0 * (n - k):
            return None
    return v0, n


@dataclass
class FrobeniusShape:
    kind: str  # "split" or "irreducible"
    eigenvalues: List[Any] = field(default_factory=list)
    valuations: List[int] = field(default_factory=list)
    certificate: str = ""


def _quadratic_split(V: FilteredIsocrystal, coeffs: List[Fraction]) -> Optional[FrobeniusShape]:
    """
    Roots of X^2 + bX + c in Q(sqrt D), D = b^2 - 4c a nonzero square in Q_p.

    sqrt D is read as the p-adic root for which (-b + sqrt D)/2 has the smaller valuation.
    """
    _, b, c = coeffs
    disc = b * b - 4 * c
    if disc == 0 or not is_square_in_qp(disc, V.prime):
        return None
    vc = valuation_of(c, V.prime)
    if b != 0 and 2 * valuation_of(b, V.prime) < vc:
        low = valuation_of(b, V.prime)
    else:
        low = vc // 2
    root = sqrt(Rational(disc.numerator, disc.denominator))
    minus_b = Rational(-b.numerator, b.denominator)
    return FrobeniusShape(
        "split",
        [(minus_b + root) / 2, (minus_b - root) / 2],
        [low, vc - low],
        certificate=f"discriminant {disc} is a square in Q_{V.prime}",
    )


def frobenius_shape(V: FilteredIsocrystal) -> FrobeniusShape:
    n = V.dimension
    poly = Poly(V.phi.charpoly(_X).as_expr(), _X)
    rational_roots = poly.ground_roots()
    if sum(rational_roots.values()) == n and all(m == 1 for m in rational_roots.values()):
        values = sorted(_fraction(r) for r in rational_roots)
        return FrobeniusShape("split", values, [valuation_of(x, V.prime) for x in values])
    coeffs = [_fraction(c) for c in poly.all_coeffs()]
    pure = _newton_polygon_is_pure(coeffs, V.prime)
    if pure and gcd(pure[0], n) == 1:
        return FrobeniusShape("irreducible", certificate=f"single slope {pure[0]}/{n} in lowest terms")
    if n == 2:
        disc = coeffs[1] ** 2 - 4 * coeffs[2]
        if disc != 0 and not is_square_in_qp(disc, V.prime):
            return FrobeniusShape("irreducible", certificate="non-square discriminant")
        split = _quadratic_split(V, coeffs)
        if split is not None:
            return split
    if rational_roots and any(m > 1 for m in rational_roots.values()):
        raise UnsupportedFrobeniusError("Frobenius has a repeated eigenvalue")
    raise UnsupportedFrobeniusError("Frobenius is neither split with distinct eigenvalues nor certified irreducible")


def _symbolic(value) -> Any:
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    return value


def _eigenline(phi: Matrix, value) -> Tuple[Any, ...]:
    lam = _symbolic(value)
    if isinstance(value, Fraction):
        return tuple((phi - lam * eye(phi.shape[0])).nullspace()[0])
    # 2x2 with an irrational root: the upper right entry is nonzero
    a, b = phi[0, 0], phi[0, 1]
    return (b, expand(lam - a))


@dataclass(frozen=True)
class StableSubspace:
    eigenvalues: Tuple[Any, ...]
    basis: Tuple[Tuple[Any, ...], ...]
    newton: Optional[int] = None

    def same_space(self, other: "StableSubspace") -> bool:
        k = _rank(self.basis)
        return k == _rank(other.basis) and _intersection_dim(self.basis, other.basis) == k


def _whole_space(V: FilteredIsocrystal) -> StableSubspace:
    n = V.dimension
    return StableSubspace((), tuple(tuple(eye(n).row(i)) for i in range(n)), newton_number(V))


def stable_subspaces(V: FilteredIsocrystal) -> List[StableSubspace]:
    """Nonzero Phi-stable subspaces: spans of eigenline subsets, or V alone."""
    shape = frobenius_shape(V)
    n = V.dimension
    if shape.kind == "irreducible":
        return [_whole_space(V)]
    lines = [_eigenline(V.phi, value) for value in shape.eigenvalues]
    out = []
    for k in range(1, n + 1):
        for idx in combinations(range(n), k):
            out.append(
                StableSubspace(
                    tuple(shape.eigenvalues[i] for i in idx),
                    tuple(lines[i] for i in idx),
                    sum(shape.valuations[i] for i in idx),
                )
            )
    return out


def stable_subspaces_oracle(V: FilteredIsocrystal) -> List[StableSubspace]:
    """Kernels of prod_{lam in S} (Phi - lam) over every nonempty eigenvalue subset S."""
    shape = frobenius_shape(V)
    if shape.kind != "split":
        raise UnsupportedFrobeniusError("the kernel oracle needs split Frobenius")
    n = V.dimension
    out = []
    for k in range(1, n + 1):
        for idx in combinations(range(n), k):
            M = eye(n)
            for i in idx:
                M = (M * (V.phi - _symbolic(shape.eigenvalues[i]) * eye(n))).applyfunc(expand)
            out.append(
                StableSubspace(
                    tuple(shape.eigenvalues[i] for i in idx),
                    tuple(tuple(v) for v in M.nullspace(simplify=True)),
                    sum(shape.valuations[i] for i in idx),
                )
            )
    return out


@dataclass
class AdmissibilityResult:
    admissible: bool
    t_hodge: int
    t_newton: int
    shape: str
    witness: Optional[StableSubspace] = None
    witness_numbers: Optional[Tuple[int, int]] = None
    checked: int = 0

    def to_document(self) -> Dict[str, Any]:
        doc: Dict[str, Any] = {
            "weakly_admissible": self.admissible,
            "t_H": self.t_hodge,
            "t_N": self.t_newton,
            "frobenius": self.shape,
            "subobjects_checked": self.checked,
        }
        if self.witness is not None:
            doc["witness"] = {
                "eigenvalues": [str(x) for x in self.witness.eigenvalues],
                "basis": [[str(x) for x in v] for v in self.witness.basis],
                "t_H": self.witness_numbers[0],
                "t_N": self.witness_numbers[1],
            }
        return doc


def weakly_admissible(V: FilteredIsocrystal, oracle: bool = False) -> AdmissibilityResult:
    """
    t_H(V) = t_N(V) and t_H(V') <= t_N(V') for every nonzero stable V'.

    A failing total equality reports V itself as the witness.
    """
    shape = frobenius_shape(V)
    tH, tN = hodge_number(V), newton_number(V)
    subs = stable_subspaces_oracle(V) if oracle else stable_subspaces(V)
    result = AdmissibilityResult(True, tH, tN, shape.kind, checked=len(subs))
    if tH != tN:
        full = subs[-1]
        result.admissible = False
        result.witness, result.witness_numbers = full, (tH, tN)
        return result
    for sub in subs:
        h = hodge_number(V, sub.basis)
        nn = sub.newton if sub.newton is not None else newton_number(V, sub.basis)
        if h > nn:
            result.admissible = False
            result.witness, result.witness_numbers = sub, (h, nn)
            break
    logger.debug("weak admissibility over %d subobjects: %s", len(subs), result.admissible)
    return result


def dual(V: FilteredIsocrystal) -> FilteredIsocrystal:
    """Phi^-T with F^j(V*) the annihilator of F^(1-j)(V)."""
    n = V.dimension
    phi = V.phi.inv().T
    steps = [FiltrationStep(-V.flag[-1].jump, tuple(tuple(eye(n).row(i)) for i in range(n)))]
    for k in range(len(V.flag) - 2, -1, -1):
        steps.append(FiltrationStep(-V.flag[k].jump, tuple(_orthogonal(V.flag[k + 1].basis, n))))
    return FilteredIsocrystal(V.prime, phi, steps)


def parse_isocrystal(text: str) -> FilteredIsocrystal:
    """
    Read the plain-text form:

        p 5
        phi
        1 0
        0 5
        filtration
        0: 1 0 ; 0 1
        1: 1 1

    Comments start with '#'. Entries are integers or fractions a/b.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    prime = None
    phi: List[List[Rational]] = []
    flag: Dict[int, List[List[Rational]]] = {}
    section = None
    try:
        for ln in lines:
            head = ln.split()[0].lower()
            if head == "p" and section is None:
                prime = int(ln.split()[1])
            elif head in ("phi", "filtration"):
                section = head
            elif section == "phi":
                phi.append([Rational(x) for x in ln.split()])
            elif section == "filtration":
                label, rows = ln.split(":", 1)
                flag[int(label)] = [[Rational(x) for x in r.split()] for r in rows.split(";") if r.strip()]
            else:
                raise DomainError(f"unexpected line {ln!r}")
    except (ValueError, TypeError, IndexError) as exc:
        raise DomainError(f"malformed isocrystal text: {exc}") from exc
    if prime is None or not phi or not flag:
        raise DomainError("isocrystal text needs 'p', 'phi' and 'filtration' sections")
    if any(len(r) != len(phi) for r in phi) or any(len(v) != len(phi) for rows in flag.values() for v in rows):
        raise DomainError("row lengths must match the dimension")
    return FilteredIsocrystal.build(prime, phi, flag)
