from fractions import Fraction

import pytest

from src.core.errors import DomainError
from src.gamma import gamma_orbit_product, gamma_p, log_gamma_combination
from src.padic import PadicScalar


@pytest.mark.parametrize("n, expected", [(0, 1), (1, -1), (2, 1), (3, -2), (4, 6), (6, 24)])
def test_small_integers_in_q5(n, expected):
    assert gamma_p(n, 8, prime=5) == expected


def _functional_equation_holds(x: int, p: int, N: int) -> bool:
    factor = -x if x % p else -1
    return gamma_p(x + 1, N, prime=p) == gamma_p(x, N, prime=p) * factor


def test_functional_equation():
    p, N = 7, 6
    for x in (Fraction(1, 3), Fraction(2, 5), Fraction(-3, 4)):
        lhs = gamma_p(x + 1, N, prime=p)
        rhs = gamma_p(x, N, prime=p) * (-x)
        assert lhs == rhs


@pytest.mark.parametrize("p", [5, 7])
def test_functional_equation_at_multiples_of_p(p):
    for x in (0, p, 3 * p, p ** 4):
        assert _functional_equation_holds(x, p, 12)


@pytest.mark.slow
@pytest.mark.parametrize("p", [5, 7])
def test_functional_equation_random_sweep(rng, p):
    N = 12
    for _ in range(5000):
        x = rng.randrange(p ** N)
        assert _functional_equation_holds(x, p, N), x


@pytest.mark.parametrize("p", [5, 7])
def test_reflection_random_sweep(rng, p):
    N = 12
    for _ in range(500):
        x = rng.randrange(p ** N)
        product = gamma_p(x, N, prime=p) * gamma_p(1 - x, N, prime=p)
        x0 = x % p or p
        assert product == (-1) ** x0, x
        assert product ** 2 == 1


@pytest.mark.parametrize("p, sign", [(5, -1), (7, 1), (13, -1)])
def test_reflection_at_one_half(p, sign):
    value = gamma_p(Fraction(1, 2), 10, prime=p)
    assert value ** 2 == sign
    assert value ** 4 == 1


def test_value_depends_on_residue_mod_p_power():
    a = gamma_p(Fraction(1, 3), 4, prime=5)
    b = gamma_p(Fraction(1, 3) + 5 ** 4, 4, prime=5)
    assert a == b


def test_padic_argument():
    x = PadicScalar.from_rational(5, Fraction(1, 3), abs_prec=6)
    assert gamma_p(x, 6) == gamma_p(Fraction(1, 3), 6, prime=5)


def test_rejects_bad_arguments():
    with pytest.raises(DomainError):
        gamma_p(Fraction(1, 5), 4, prime=5)
    with pytest.raises(DomainError):
        gamma_p(1, 4, prime=2)
    with pytest.raises(DomainError):
        gamma_p(1, 4)


def test_orbit_of_length_one():
    assert gamma_orbit_product(7, 2, 1, 6) == gamma_p(Fraction(2, 6), 6, prime=7)


def test_reflection_combination_vanishes():
    value = log_gamma_combination(5, {Fraction(1, 3): 1, Fraction(2, 3): 1}, 6)
    assert value.is_zero_at_precision()
