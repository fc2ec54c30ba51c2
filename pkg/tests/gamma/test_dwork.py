from fractions import Fraction

import pytest

from src.core.errors import DomainError, PrecisionError
from src.gamma import (
    dwork_coeffs,
    gamma_p,
    gamma_p_analytic,
    gross_koblitz_check,
    robert_identity_check,
    terms_for,
    valuation_bound,
    zeta_p_check,
)
from src.padic import EisensteinElem


def test_first_dwork_coefficients():
    coeffs = dwork_coeffs(5, 10, 16)
    pi = EisensteinElem.pi(5, 16)
    assert coeffs[0] == 1
    assert coeffs[1] == pi
    assert coeffs[2] == pi ** 2 / 2
    assert coeffs[3] == pi ** 3 / 6


def test_coefficient_valuations_respect_bound():
    p = 7
    coeffs = dwork_coeffs(p, 30, 40)
    for n in range(31):
        assert coeffs[n].v_pi() >= valuation_bound(p, n)


def test_table_length_is_enforced():
    coeffs = dwork_coeffs(5, 4, 10)
    with pytest.raises(PrecisionError):
        coeffs[5]
    with pytest.raises(DomainError):
        dwork_coeffs(2, 4, 10)


def test_terms_for_needs_convergence():
    assert terms_for(5, 0) == 0
    with pytest.raises(DomainError):
        terms_for(3, 10, stride=1, loss=1)


@pytest.mark.parametrize("a", [1, 2, 3, 4])
def test_dwork_exponential_at_roots_of_unity(a):
    result = zeta_p_check(5, a)
    assert result["pth_power_is_one"]
    assert result["congruence_mod_pi2"]


def test_zeta_check_rejects_zero():
    with pytest.raises(DomainError):
        zeta_p_check(5, 10)


@pytest.mark.parametrize("x", [Fraction(1, 3), Fraction(-1, 2), Fraction(7, 4), 0, -2])
def test_analytic_gamma_matches_morita(x):
    p, T, N = 5, 20, 5
    x = Fraction(x)
    k = int(-x.numerator * pow(x.denominator, -1, p) % p)
    n_max = terms_for(p, T + p, stride=p, loss=1)
    coeffs = dwork_coeffs(p, p * (n_max + 1) + p, T + n_max + p)
    analytic = gamma_p_analytic(x, k, coeffs)
    common = min(analytic.pi_prec, (p - 1) * N)
    assert analytic.equal_mod_pi(EisensteinElem.from_scalar(p, gamma_p(x, N, prime=p), common), common)


def test_analytic_gamma_at_negative_integers():
    coeffs = dwork_coeffs(7, 80, 30)
    value = gamma_p_analytic(-3, 3, coeffs)
    assert value.pi_prec >= 1
    assert value == Fraction(1, 6)


def test_analytic_gamma_checks_residue_class():
    coeffs = dwork_coeffs(5, 60, 30)
    with pytest.raises(DomainError):
        gamma_p_analytic(Fraction(1, 3), 0, coeffs)
    with pytest.raises(DomainError):
        gamma_p_analytic(0, 5, coeffs)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_gross_koblitz_all_residues(p):
    for k in range(p - 1):
        report = gross_koblitz_check(p, k, pi_prec=40)
        assert report.equal, report.to_document()


@pytest.mark.slow
def test_gross_koblitz_thirteen():
    for k in range(12):
        assert gross_koblitz_check(13, k, pi_prec=40, threads=2).equal


def test_gross_koblitz_rejects_out_of_range():
    with pytest.raises(DomainError):
        gross_koblitz_check(5, 4)
    with pytest.raises(DomainError):
        gross_koblitz_check(2, 0)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_robert_identity(p):
    for k in range(p - 1):
        report = robert_identity_check(p, k, pi_prec=30)
        assert report
        assert report.precision == 30


def test_robert_identity_with_few_terms_lowers_precision():
    report = robert_identity_check(5, 1, n_terms=3, pi_prec=30)
    assert report.precision < 30
    assert report.holds
