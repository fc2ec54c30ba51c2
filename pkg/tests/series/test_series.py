from fractions import Fraction
from math import factorial

import pytest

from src.core.errors import DomainError
from src.series import TruncSeries, series_compose, series_derive, series_inverse


def exp_series(N: int) -> TruncSeries:
    return TruncSeries.from_list([Fraction(1, factorial(n)) for n in range(N)])


def test_order_is_minimum_of_operands():
    a = TruncSeries.one(5)
    b = TruncSeries.monomial(1, 3)
    assert (a + b).order == 3
    assert (a * b).order == 3


def test_inverse_of_one_minus_z():
    f = TruncSeries.from_list([1, -1, 0, 0, 0, 0])
    assert series_inverse(f) == TruncSeries.from_list([1] * 6)


def test_inverse_needs_unit_constant_term():
    with pytest.raises(DomainError):
        series_inverse(TruncSeries.monomial(1, 4))


def test_exp_squared_is_exp_of_two_z():
    N = 8
    two_z = TruncSeries.monomial(1, N, 2)
    assert exp_series(N) ** 2 == series_compose(exp_series(N), two_z)


def test_compose_requires_vanishing_constant_term():
    with pytest.raises(DomainError):
        series_compose(exp_series(4), TruncSeries.one(4))


def test_derive_drops_one_order():
    d = series_derive(exp_series(7))
    assert d.order == 6
    assert d == exp_series(6)
    with pytest.raises(DomainError):
        series_derive(TruncSeries.one(1))


def test_theta_and_shift():
    f = TruncSeries.from_list([1, 2, 3])
    assert f.theta() == TruncSeries.from_list([0, 2, 6])
    assert f.shift(1) == TruncSeries.from_list([0, 1, 2])


def test_substitute_power():
    f = TruncSeries.from_list([1, 1, 1])
    assert f.substitute_power(2, 5) == TruncSeries.from_list([1, 0, 1, 0, 1])
    assert f.substitute_power(2, 5).is_even()
    with pytest.raises(DomainError):
        f.substitute_power(2, 7)


def test_variables_must_match():
    with pytest.raises(DomainError):
        TruncSeries.one(3, var="z") + TruncSeries.one(3, var="t")


def test_empty_series_is_rejected():
    with pytest.raises(DomainError):
        TruncSeries(())


def test_text_format():
    f = TruncSeries.from_list([1, Fraction(-1, 2), 0])
    assert f.to_text() == "0\t1/1\n1\t-1/2\n2\t0/1\n"
    assert TruncSeries.from_text(f.to_text()) == f
    with pytest.raises(DomainError):
        TruncSeries.from_text("1\t1/1\n")


def test_document():
    doc = TruncSeries.from_list([1, 2]).to_document()
    assert doc == {"var": "z", "ring": "QQ", "order": 2, "coefficients": ["1/1", "2/1"]}
