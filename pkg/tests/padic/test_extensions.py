from fractions import Fraction

import pytest

from src.core.errors import DomainError, PrecisionError
from src.padic import (
    EisensteinElem,
    FiniteField,
    PadicScalar,
    UnramifiedElem,
    UnramifiedRational,
    padic_exp,
    padic_log,
    reduce_rational,
    residue_modulus,
    teichmueller,
)


def test_residue_modulus_is_first_irreducible():
    assert residue_modulus(3, 2) == (1, 0, 1)
    assert residue_modulus(2, 2) == (1, 1, 1)
    with pytest.raises(DomainError):
        residue_modulus(9, 2)


def test_finite_field_basics():
    F = FiniteField(3, 2)
    assert F.order == 9
    assert len(list(F.elements())) == 9
    g = F.generator()
    powers = {(g ** k).code() for k in range(8)}
    assert len(powers) == 8
    x = F((0, 1))
    assert x * x == F(-1)
    assert x.frobenius() == -x
    assert x.norm() == 1
    assert x.trace() == 0
    assert F(2).in_prime_field()


def test_finite_field_inverse():
    F = FiniteField(5, 2)
    for a in F.elements():
        if not a.is_zero():
            assert a * a.inverse() == F.one()


@pytest.mark.parametrize("p, f", [(5, 1), (3, 2), (2, 3)])
def test_teichmueller_is_root_of_unity(p, f):
    F = FiniteField(p, f)
    a = F.generator()
    t = teichmueller(a, 6)
    assert t ** (F.order - 1) == 1
    assert t.reduction() == a


def test_teichmueller_of_zero_is_rejected():
    with pytest.raises(DomainError):
        teichmueller(FiniteField(5, 1).zero(), 4)


def test_unramified_frobenius_and_norm():
    F = FiniteField(3, 2)
    t = teichmueller(F((0, 1)), 5)
    # Frobenius acts on Teichmueller points as x -> x^p
    assert t.frobenius() == t ** 3
    assert t.frobenius(2) == t
    assert t.norm() == 1


def test_unramified_inverse_and_division():
    x = UnramifiedElem(3, 2, (2, 1), 6)
    assert x * x.inverse() == 1
    with pytest.raises(DomainError):
        UnramifiedElem(3, 2, (3, 0), 6).inverse()
    y = UnramifiedElem(3, 2, (9, 18), 6).divide_by_p(2)
    assert y.coeffs == (1, 2)
    assert y.prec == 4


def test_log_of_p_is_zero():
    assert padic_log(PadicScalar.from_rational(5, 5, rel_prec=6)).is_zero_at_precision()


def test_log_of_roots_of_unity_is_zero():
    t = teichmueller(FiniteField(7, 1)(3), 6)
    assert padic_log(t) == 0


def test_exp_inverts_log():
    six = PadicScalar.from_rational(5, 6, rel_prec=8)
    assert padic_exp(padic_log(six)) == six


def test_exp_rejects_units():
    with pytest.raises(DomainError):
        padic_exp(PadicScalar.from_rational(5, 2, rel_prec=5))
    with pytest.raises(DomainError):
        padic_exp(PadicScalar.from_rational(2, 2, rel_prec=5))


def test_eisenstein_relation():
    pi = EisensteinElem.pi(5, 20)
    assert pi ** 4 == -5
    assert pi.v_pi() == 1
    assert (pi ** 6).v_pi() == 6


def test_eisenstein_rejects_p_equal_two():
    with pytest.raises(DomainError):
        EisensteinElem.one(2, 10)


def test_eisenstein_comparison_needs_precision():
    a = EisensteinElem.one(5, 8)
    with pytest.raises(PrecisionError):
        a.equal_mod_pi(a, 9)
    assert a.equal_mod_pi(1 + EisensteinElem.pi(5, 8) ** 3, 3)


def test_unramified_rational_generator_squares_to_minus_one():
    s = UnramifiedRational.generator(3, 2)
    assert s ** 2 == UnramifiedRational.from_rational(3, 2, -1)
    assert s.valuation() == 0
    assert (s / 3).valuation() == -1
    assert not s.in_base_field()


def test_reduce_rational():
    assert reduce_rational(Fraction(1, 2), 5, 1) == 3
    assert reduce_rational(Fraction(1, 10), 5, 1) == Fraction(13, 5)
    assert reduce_rational(Fraction(7, 25), 5, -3) == 0
