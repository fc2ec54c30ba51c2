import pytest

from src.core.errors import DomainError
from src.crystal import (
    count_points_bruteforce,
    count_points_dwork,
    counting_precision,
    fp_eval,
    fp_special_values,
    hasse_interval,
    hasse_poly,
    legendre_gm_check,
    legendre_twist_relation,
    unit_root,
    unit_root_from_trace,
    unit_root_report,
)
from src.padic import FiniteField, UnramifiedElem, teichmueller


def test_hasse_interval():
    assert hasse_interval(5) == (2, 10)
    assert counting_precision(5, 1) == 2
    assert counting_precision(7, 2) == 2


def test_bruteforce_count_for_p5_s2():
    assert count_points_bruteforce(5, 1, 2) == 8


def test_dwork_count_for_p5_s2():
    assert count_points_dwork(5, 1, 2) == 8


@pytest.mark.parametrize("p", [5, 7])
def test_dwork_count_over_prime_field(p):
    h = hasse_poly(p)
    for s0 in range(2, p):
        if h(s0) == 0:
            with pytest.raises(DomainError):
                count_points_dwork(p, 1, s0)
            continue
        assert count_points_dwork(p, 1, s0) == count_points_bruteforce(p, 1, s0)


@pytest.mark.slow
def test_dwork_count_p13_all_ordinary():
    h = hasse_poly(13)
    for s0 in range(2, 13):
        if h(s0):
            assert count_points_dwork(13, 1, s0, threads=2) == count_points_bruteforce(13, 1, s0)


def test_dwork_count_over_quadratic_extension(rng):
    field = FiniteField(7, 2)
    h = hasse_poly(7)
    candidates = [a for a in field.elements() if not a.in_prime_field() and not h(a).is_zero()]
    s0 = rng.choice(candidates)
    report = unit_root_report(7, 2, s0)
    assert report.agree
    assert report.count_dwork + report.trace == 7 ** 2 + 1


@pytest.mark.parametrize(
    "p, n",
    [(5, 2), pytest.param(5, 3, marks=pytest.mark.slow), pytest.param(7, 2, marks=pytest.mark.slow)],
)
def test_dwork_count_over_extension_fields(p, n):
    h = hasse_poly(p)
    for s0 in FiniteField(p, n).elements():
        if s0.is_zero() or (s0 - 1).is_zero() or h(s0).is_zero():
            continue
        assert count_points_dwork(p, n, s0) == count_points_bruteforce(p, n, s0), s0


@pytest.mark.parametrize("p", [5, 7])
def test_fp_reduces_to_hasse_polynomial(rng, p):
    field = FiniteField(p, 3)
    h = hasse_poly(p)
    ordinary = [a for a in field.elements() if not (a.is_zero() or (a - 1).is_zero() or h(a).is_zero())]
    for s0 in rng.sample(ordinary, 50):
        omega = teichmueller(s0, 2)
        assert fp_eval(p, omega, 1).reduction() == h(s0), s0


def test_unit_root_from_trace():
    u = unit_root_from_trace(5, 1, -2, 6).int_mod(6)
    assert (u * u + 2 * u + 5) % 5 ** 6 == 0
    assert u % 5 == 3
    report = unit_root_report(5, 1, 2, N=4)
    assert unit_root_from_trace(5, 1, report.trace, 4) == report.unit_root
    with pytest.raises(DomainError):
        unit_root_from_trace(7, 1, 0, 4)


def test_unit_root_lies_in_zp():
    U = unit_root(5, 2, FiniteField(5, 2)((2, 1)), 3)
    assert U.is_integral()
    assert U.valuation == 0


def test_degenerate_parameters_rejected():
    for s0 in (0, 1):
        with pytest.raises(DomainError):
            count_points_bruteforce(5, 1, s0)
    with pytest.raises(DomainError):
        count_points_dwork(3, 1, 2)
    with pytest.raises(DomainError):
        count_points_bruteforce(2, 1, 1)


def test_report_document():
    doc = unit_root_report(5, 1, 2).to_document()
    assert doc["count_dwork"] == 8
    assert doc["trace"] == -2
    assert doc["zeta_numerator"] == "1 - (-2)T + 5T^2"
    assert doc["agree"]


@pytest.mark.parametrize("p, n, s0, relation", [(5, 1, 2, "equal"), (7, 1, 3, "sum 2q+2"), (3, 2, (0, 1), "equal")])
def test_twist_relation(p, n, s0, relation):
    result = legendre_twist_relation(p, n, FiniteField(p, n)(s0) if isinstance(s0, tuple) else s0)
    assert result["relation"] == relation
    assert result["holds"]


def test_fp_at_one():
    value = fp_eval(5, UnramifiedElem.from_int(5, 1, 1, 6), 6)
    assert value == 1


def test_fp_rejects_supersingular_points():
    with pytest.raises(DomainError):
        fp_eval(7, UnramifiedElem.from_int(7, 1, -1, 4), 4)


def test_fp_frobenius_product_is_invariant():
    omega = teichmueller(FiniteField(5, 2)((2, 1)), 3)
    product = fp_eval(5, omega, 3) * fp_eval(5, omega.frobenius(), 3)
    assert product.in_base_ring()


def test_special_values_default_precision():
    result = fp_special_values(5, 6)
    assert result["f_p(1) = 1"]
    assert result["f_p(-1) matches"]


@pytest.mark.slow
def test_special_values_p13():
    result = fp_special_values(13, 8)
    assert result["limit_precision"] == 5
    assert result["trace"] == 6
    assert result["unit_root"] == result["gamma_expression"]
    assert result["f_p(1) = 1"]
    assert result["f_p(-1) matches"]


@pytest.mark.slow
def test_special_values_high_precision():
    result = fp_special_values(5, 8)
    assert result["limit_precision"] == 8
    assert result["f_p(-1)"] == result["unit_root"] == result["gamma_expression"]
    assert result["f_p(1) = 1"]
    assert result["f_p(-1) matches"]


def test_special_values_need_p_one_mod_four():
    with pytest.raises(DomainError):
        fp_special_values(7, 4)


def test_gauss_manin_identities():
    report = legendre_gm_check(12)
    assert report.ok, report.checks
    assert report.constants["y11(1/2)"] == "1"
    assert report.constants["y12(1/2)"] == "0"
    assert report.constants["det(1/2)"] == "1"


def test_gauss_manin_needs_order():
    with pytest.raises(DomainError):
        legendre_gm_check(3)
