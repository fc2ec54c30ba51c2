import pytest

from src.core.errors import DomainError
from src.crystal import hasse_functional_equations, hasse_poly, is_ordinary, supersingular_roots
from src.padic import FiniteField


@pytest.mark.parametrize(
    "p, coeffs, text",
    [
        (3, (2, 2), "2z + 2"),
        (5, (1, 4, 1), "1z^2 + 4z + 1"),
        (7, (6, 5, 5, 6), "6z^3 + 5z^2 + 5z + 6"),
    ],
)
def test_hasse_polynomials(p, coeffs, text):
    h = hasse_poly(p)
    assert h.coeffs == coeffs
    assert h.degree == (p - 1) // 2
    assert repr(h) == text


def test_hasse_at_minus_one_for_p_three_mod_four():
    assert hasse_poly(7)(-1) == 0
    assert hasse_poly(11)(-1) == 0
    assert hasse_poly(13)(-1) != 0


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_functional_equations(p):
    assert hasse_functional_equations(p) == {"reflection": True, "inversion": True}


def test_even_primes_rejected():
    with pytest.raises(DomainError):
        hasse_poly(2)


def test_supersingular_roots():
    assert [r.code() for r in supersingular_roots(3)] == [2]
    roots5 = supersingular_roots(5)
    assert len(roots5) == 2
    assert all(not r.in_prime_field() for r in roots5)
    assert roots5[0].frobenius() == roots5[1]
    roots7 = supersingular_roots(7)
    assert len(roots7) == 3
    assert FiniteField(7, 2)(6) in roots7


def test_is_ordinary():
    F = FiniteField(5, 1)
    assert is_ordinary(F(2))
    assert not is_ordinary(FiniteField(3, 1)(2))
