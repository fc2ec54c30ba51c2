from fractions import Fraction

import pytest

from src.core.errors import DomainError
from src.hgde import (
    HgdeParams,
    TriangleTriple,
    classify_triple,
    riemann_scheme,
    scheme_twist,
    triple_to_hgde,
    uniformizing_scheme,
    uniformizing_twist,
)
from src.series import hypergeometric_series


@pytest.mark.parametrize(
    "text, kind, name",
    [
        ("2,2,7", "spherical", "dihedral D_7"),
        ("2,3,3", "spherical", "tetrahedral"),
        ("(2,3,4)", "spherical", "octahedral"),
        ("5,3,2", "spherical", "icosahedral"),
        ("2,3,6", "euclidean", "euclidean"),
        ("2,4,4", "euclidean", "euclidean"),
        ("3,3,3", "euclidean", "euclidean"),
        ("2,3,7", "hyperbolic", "hyperbolic"),
        ("2,4,6", "hyperbolic", "hyperbolic"),
    ],
)
def test_classification(text, kind, name):
    info = classify_triple(TriangleTriple.parse(text))
    assert info["class"] == kind
    assert info["name"] == name


@pytest.mark.parametrize("text", ["2,3", "2,x,3", "1,3,7"])
def test_bad_triples(text):
    with pytest.raises(DomainError):
        TriangleTriple.parse(text)


def test_parameters_of_2_4_6():
    h = triple_to_hgde(TriangleTriple(2, 4, 6))
    assert h == HgdeParams.of(Fraction(5, 24), Fraction(1, 24), Fraction(1, 2))


@pytest.mark.parametrize("triple", [(2, 4, 6), (2, 3, 7), (3, 3, 4), (2, 2, 5)])
def test_exponent_differences_recover_the_triple(triple):
    t = TriangleTriple(*triple)
    scheme = riemann_scheme(triple_to_hgde(t))
    assert scheme.satisfies_fuchs()
    assert scheme.exponent_differences() == tuple(Fraction(1, e) for e in triple)


@pytest.mark.parametrize("triple", [(2, 4, 6), (2, 3, 7), (4, 6, 6)])
def test_uniformizing_twist(triple):
    t = TriangleTriple(*triple)
    uniform = uniformizing_scheme(t)
    assert uniform.satisfies_fuchs()
    assert scheme_twist(uniform, *uniformizing_twist(t)) == riemann_scheme(triple_to_hgde(t))


def test_scheme_views():
    scheme = riemann_scheme(HgdeParams.of("1/2", "1/2", 1))
    assert scheme.at("inf") == (Fraction(1, 2), Fraction(1, 2))
    assert scheme.to_document()["fuchs_sum"] == "1"
    assert scheme.to_table().splitlines()[0].split() == ["point", "exponents", "difference"]


def test_params_operator_annihilates_series():
    h = triple_to_hgde(TriangleTriple(2, 3, 7))
    f = hypergeometric_series(h.a, h.b, h.c, 10)
    assert h.operator().apply(f).is_zero()
    assert h.theta_operator().apply(f).is_zero()
