from fractions import Fraction

import pytest

from src.atlas import (
    GraphOfGroups,
    QuaternionAlgebra,
    amalgam_data,
    b23,
    b2inf,
    distinct_modulo_two,
    escher_generators,
    escher_generators_check,
    level_two_curve,
    maximal_order_basis,
    normalizes_order,
    order_closure_check,
    quotient_orders,
    quotient_representatives,
    torsion_search,
    torsion_search_gamma_plus_2,
)
from src.atlas.amalgam import _normaliser_index
from src.atlas.escher import mat_mul
from src.atlas.quaternion import rho
from src.core.errors import DomainError


def test_quaternion_arithmetic():
    Q = b23()
    i, j = Q.i(), Q.j()
    assert i * i == -1
    assert j * j == 3
    assert i * j == Q.ij()
    assert j * i == -Q.ij()
    x = Q(1, 2, 3, 4)
    assert x * x.inverse() == 1
    assert x.nrd() == (x * x.conjugate()).coords[0]
    assert rho(Q).nrd() == -1
    assert rho(Q).trd() == 1


def test_algebra_rejects_zero_constants():
    with pytest.raises(DomainError):
        QuaternionAlgebra(Fraction(0), Fraction(3))


def test_mixed_algebras_rejected():
    with pytest.raises(DomainError):
        b23().i() * b2inf().i()


def test_zero_divisor_has_no_inverse():
    with pytest.raises(DomainError):
        b23()(0).inverse()


def test_maximal_order_is_closed():
    Q = b23()
    report = order_closure_check(Q, maximal_order_basis(Q))
    assert report == {"closed": True, "failures": []}


def test_non_integral_basis_detected():
    Q = b23()
    report = order_closure_check(Q, [Q.one(), Q.i(), Q.j(), Q.ij() * Fraction(1, 2)])
    assert not report["closed"]
    assert "basis element 3 is not integral" in report["failures"]


def test_degenerate_basis_rejected():
    Q = b23()
    with pytest.raises(DomainError):
        order_closure_check(Q, [Q.one(), Q.i(), Q.i(), Q.j()])
    with pytest.raises(DomainError):
        order_closure_check(Q, [Q.one(), Q.i()])


def test_normaliser():
    Q = b23()
    basis = maximal_order_basis(Q)
    assert normalizes_order(Q, Q.i(), basis)
    assert normalizes_order(Q, Q.one() + Q.i(), basis)
    assert normalizes_order(Q, Q.j(), basis)
    assert not normalizes_order(Q, Q(1, 2), basis)


def test_level_two_group_is_torsion_free():
    assert torsion_search_gamma_plus_2(6) == [(-1, 0, 0, 0), (1, 0, 0, 0)]


def test_unrestricted_search_finds_order_four_elements():
    found = torsion_search(3, level=1, traces=(0,))
    assert (0, 1, 0, 0) in found
    assert (0, 2, 1, 0) in found
    assert all(a == 0 for a, _, _, _ in found)


def test_search_arguments():
    with pytest.raises(DomainError):
        torsion_search(0)
    with pytest.raises(DomainError):
        torsion_search(3, level=3)


def test_quotient_has_twelve_classes():
    Q = b23()
    reps = quotient_representatives(Q)
    assert len(reps) == 12
    assert distinct_modulo_two(Q, reps, maximal_order_basis(Q)) == 12


def test_classes_outside_the_order():
    Q = b23()
    with pytest.raises(DomainError):
        distinct_modulo_two(Q, [Q.i() * Fraction(1, 2)], maximal_order_basis(Q))


def test_escher_generators():
    report = escher_generators_check()
    assert report["ok"]
    assert all(report["checks"].values())
    assert report["projective_orders"] == {"A": 2, "B": 6, "AB": 4}


def test_escher_generators_have_unit_determinant():
    A, B = escher_generators()
    for m in (A, B, mat_mul(A, B)):
        assert m[0][0] * m[1][1] - m[0][1] * m[1][0] == 1


@pytest.mark.parametrize("p,groups", [(3, ["D6", "S4"]), (2, ["D6", "D4"])])
def test_amalgams(p, groups):
    report = amalgam_data(p)
    doc = report.to_document()
    assert all(report.checks.values())
    assert [v["group"] for v in doc["graph"]["vertices"]] == groups
    assert doc["graph"]["euler_characteristic"] == "-1/24"


def test_level_two_covering():
    report = amalgam_data(3, triple=(6, 4, 2))
    assert report.covering["genus"] == 3
    assert report.covering["automorphisms"] == 48
    assert report.covering["(g-1)/#Aut"] == "1/24"
    assert level_two_curve() == (3, 48)


def test_amalgam_arguments():
    with pytest.raises(DomainError):
        amalgam_data(5)
    with pytest.raises(DomainError):
        amalgam_data(3, triple=(2, 3, 7))


def test_edge_group_must_embed():
    with pytest.raises(DomainError):
        GraphOfGroups((("A", 6), ("B", 4)), (("C", 3, 0, 1),))


def test_quotient_orders():
    assert [q["order"] for q in quotient_orders()] == [12, 48]


def test_quotient_orders_follow_the_maximal_order():
    Q = b23()
    basis = maximal_order_basis(Q)
    level, extended = quotient_orders()
    assert level["order"] == distinct_modulo_two(Q, quotient_representatives(Q), basis)
    assert extended["order"] == level["order"] * _normaliser_index(Q, basis)
    assert _normaliser_index(Q, basis) == 4
