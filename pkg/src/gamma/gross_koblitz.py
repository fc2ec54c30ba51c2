"""
Gross-Koblitz - Gamma_p at k/(p-1) against Gauss sums of Dwork exponentials

Implements:
- Three-way comparison: Gamma_p(k/(p-1)), the twisted sum over (p-1)-th roots of
  unity and the telescoped coefficient sum (1-p) pi^(-k) sum_m e_{(p-1)m+k}
- The telescoping identity G_k - G_{p-1+k} = (1-p) e_k
- Dwork exponentials at roots of unity are p-th roots of unity congruent to 1 + z pi
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional

from src.core.errors import DomainError, PrecisionError
from src.core.parallel import ordered_map
from src.padic.eisenstein import EisensteinElem
from src.padic.finite_field import FiniteField
from src.padic.unramified import teichmueller

from .dwork import DworkCoeffs, dwork_coeffs, dwork_exp_eval, terms_for, valuation_bound
from .morita import gamma_p

logger = logging.getLogger("padic-desk")


def _check_prime(p: int, k: int, top: int) -> None:
    if p == 2:
        raise DomainError("Gross-Koblitz checks need an odd prime")
    if not 0 <= k <= top:
        raise DomainError(f"k = {k} outside 0..{top}")


def _teichmueller_scalar(p: int, a: int, pi_prec: int):
    return teichmueller(FiniteField(p, 1)(a), math.ceil(pi_prec / (p - 1)) + 1).to_scalar()


@dataclass
class GrossKoblitzReport:
    prime: int
    k: int
    pi_prec: int
    lhs: EisensteinElem
    rhs_gauss_sum: EisensteinElem
    rhs_robert: EisensteinElem
    equal: bool

    def to_document(self) -> Dict[str, Any]:
        return {
            "p": self.prime,
            "k": self.k,
            "pi_prec": self.pi_prec,
            "lhs": repr(self.lhs),
            "rhs_gauss_sum": repr(self.rhs_gauss_sum),
            "rhs_robert": repr(self.rhs_robert),
            "equal": self.equal,
        }


def gross_koblitz_check(p: int, k: int, pi_prec: int = 40, threads: int = 1) -> GrossKoblitzReport:
    """Compare the three expressions for Gamma_p(k/(p-1)) modulo pi^pi_prec."""
    _check_prime(p, k, p - 2)
    work = pi_prec + k
    M = max(
        terms_for(p, work),
        (p - 1) * terms_for(p, work, offset=k, stride=p - 1) + k,
    ) + 1
    coeffs = dwork_coeffs(p, M, work)

    gamma_value = gamma_p(Fraction(k, p - 1), math.ceil(pi_prec / (p - 1)) + 1, prime=p)
    lhs = EisensteinElem.from_scalar(p, gamma_value, pi_prec)

    def twisted(a: int) -> EisensteinElem:
        zeta = _teichmueller_scalar(p, a, work)
        return dwork_exp_eval(zeta, coeffs, work).scale(zeta ** (-k))

    terms = ordered_map(twisted, range(1, p), threads=threads)
    gauss = EisensteinElem.zero(p, work)
    for t in terms:
        gauss = gauss + t
    rhs_gauss = (-gauss).shift_pi(-k).with_pi_prec(pi_prec)

    robert = EisensteinElem.zero(p, work)
    m = 0
    while (p - 1) * m + k < coeffs.count and valuation_bound(p, (p - 1) * m + k) < work:
        robert = robert + coeffs[(p - 1) * m + k]
        m += 1
    rhs_robert = robert.scale(1 - p).shift_pi(-k).with_pi_prec(pi_prec)

    equal = lhs.equal_mod_pi(rhs_gauss, pi_prec) and lhs.equal_mod_pi(rhs_robert, pi_prec)
    logger.info("Gross-Koblitz p=%d k=%d mod pi^%d: %s", p, k, pi_prec, "equal" if equal else "DIFFERENT")
    return GrossKoblitzReport(p, k, pi_prec, lhs, rhs_gauss, rhs_robert, equal)


@dataclass
class RobertIdentityReport:
    prime: int
    k: int
    n_terms: int
    precision: int
    holds: bool

    def __bool__(self) -> bool:
        return self.holds

    def to_document(self) -> Dict[str, Any]:
        return {"p": self.prime, "k": self.k, "n_terms": self.n_terms, "pi_prec": self.precision, "holds": self.holds}


def _g_series(coeffs: DworkCoeffs, j: int, n_terms: int, work: int) -> EisensteinElem:
    """G_j = sum_{n < n_terms} e_{pn+j} (-pi)^(-n) (j/(p-1))_n."""
    p = coeffs.prime
    a = Fraction(j, p - 1)
    poch = Fraction(1)
    total = EisensteinElem.zero(p, work)
    for n in range(n_terms):
        if n:
            poch *= a + n - 1
        if poch == 0:
            break
        term = coeffs[p * n + j].shift_pi(-n)
        if n % 2:
            term = -term
        total = total + term.with_pi_prec(work) * poch
    return total


def robert_identity_check(
    p: int,
    k: int,
    n_terms: Optional[int] = None,
    pi_prec: int = 30,
) -> RobertIdentityReport:
    """
    G_k - G_{p-1+k} = (1-p) e_k, checked modulo the pi-power that the truncation
    at n_terms and the table precision warrant.
    """
    _check_prime(p, k, p - 2)
    needed = max(
        terms_for(p, pi_prec, offset=k, stride=p, loss=1),
        terms_for(p, pi_prec, offset=p - 1 + k, stride=p, loss=1),
    )
    n_terms = needed if n_terms is None else n_terms
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    # tail bound of the first omitted term of either series
    tails = [
        valuation_bound(p, p * n_terms + j) - n_terms for j in (k, p - 1 + k)
    ]
    precision = min(pi_prec, math.floor(min(tails)))
    if precision < 1:
        raise PrecisionError(f"{n_terms} terms warrant no pi-adic precision")
    table_prec = precision + n_terms
    coeffs = dwork_coeffs(p, p * n_terms + p - 1 + k, table_prec)
    lhs = _g_series(coeffs, k, n_terms, precision) - _g_series(coeffs, p - 1 + k, n_terms, precision)
    rhs = coeffs[k].with_pi_prec(precision).scale(1 - p)
    holds = lhs.equal_mod_pi(rhs, precision)
    logger.debug("Robert identity p=%d k=%d: %d terms, pi^%d, %s", p, k, n_terms, precision, holds)
    return RobertIdentityReport(p, k, n_terms, precision, holds)


def zeta_p_check(p: int, a: int, pi_prec: int = 20) -> Dict[str, Any]:
    """
    R = E_pi(omega(a)) for the Teichmueller root omega(a): R^p = 1 and
    R = 1 + omega(a) pi modulo pi^2.
    """
    if p == 2:
        raise DomainError("the Dwork exponential is only provided for odd p")
    if a % p == 0:
        raise DomainError("0 has no Teichmueller root of unity")
    coeffs = dwork_coeffs(p, terms_for(p, pi_prec) + 1, pi_prec)
    zeta = _teichmueller_scalar(p, a, pi_prec)
    R = dwork_exp_eval(zeta, coeffs)
    expected = EisensteinElem.pi(p, pi_prec).scale(zeta) + 1
    return {
        "p": p,
        "a": a,
        "value": repr(R),
        "pth_power_is_one": (R ** p).equal_mod_pi(1, pi_prec),
        "congruence_mod_pi2": R.equal_mod_pi(expected, 2),
    }
