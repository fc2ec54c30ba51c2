import pytest

from src.core.errors import DomainError, UnsupportedFrobeniusError
from src.isocrystal import (
    FilteredIsocrystal,
    dual,
    frobenius_shape,
    hodge_number,
    newton_number,
    parse_isocrystal,
    stable_subspaces,
    stable_subspaces_oracle,
    weakly_admissible,
)

P = 5
FULL = [[1, 0], [0, 1]]


def ordinary(line):
    return FilteredIsocrystal.build(P, [[1, 0], [0, P]], {0: FULL, 1: [line]})


def test_rank_one():
    V = FilteredIsocrystal.build(P, [[P]], {1: [[1]]})
    assert newton_number(V) == 1
    assert hodge_number(V) == 1
    assert weakly_admissible(V).admissible


def test_numbers_of_scalar_frobenius():
    V = FilteredIsocrystal.build(P, [[P, 0], [0, P]], {1: FULL})
    assert newton_number(V) == 2
    assert hodge_number(V) == 2
    assert V.hodge_dims() == {1: 2}


def test_generic_line_is_admissible():
    result = weakly_admissible(ordinary([1, 1]))
    assert result.admissible
    assert (result.t_hodge, result.t_newton) == (1, 1)
    assert result.shape == "split"
    assert result.checked == 3
    assert result.witness is None


def test_slope_zero_line_is_a_witness():
    result = weakly_admissible(ordinary([1, 0]))
    assert not result.admissible
    assert result.witness.eigenvalues == (1,)
    assert result.witness_numbers == (1, 0)
    doc = result.to_document()
    assert doc["weakly_admissible"] is False
    assert doc["witness"]["eigenvalues"] == ["1"]


def test_oracle_agrees_with_eigenlines():
    for line in ([1, 1], [1, 0], [0, 1]):
        V = ordinary(line)
        assert weakly_admissible(V, oracle=True).admissible == weakly_admissible(V).admissible
        fast, slow = stable_subspaces(V), stable_subspaces_oracle(V)
        assert len(fast) == len(slow)
        assert all(a.same_space(b) for a, b in zip(fast, slow))


def test_unequal_totals_report_the_whole_space():
    V = FilteredIsocrystal.build(P, [[1, 0], [0, P]], {0: FULL})
    result = weakly_admissible(V)
    assert not result.admissible
    assert result.witness_numbers == (0, 1)


def test_supersingular_shape_has_no_subobjects():
    V = FilteredIsocrystal.build(P, [[0, P], [1, 0]], {0: FULL, 1: [[1, 0]]})
    shape = frobenius_shape(V)
    assert shape.kind == "irreducible"
    assert "1/2" in shape.certificate
    result = weakly_admissible(V)
    assert result.admissible
    assert result.checked == 1
    with pytest.raises(UnsupportedFrobeniusError):
        stable_subspaces_oracle(V)


def test_non_square_discriminant_certificate():
    # X^2 - 2 over Q_5: unit roots, 2 is not a square mod 5
    V = FilteredIsocrystal.build(P, [[0, 2], [1, 0]], {0: FULL})
    assert frobenius_shape(V).certificate == "non-square discriminant"


def test_frobenius_split_over_qp_only():
    # X^2 - 6: no rational root, but 6 = 1 mod 5 is a square in Q_5
    V = FilteredIsocrystal.build(P, [[0, 6], [1, 0]], {0: FULL})
    shape = frobenius_shape(V)
    assert shape.kind == "split"
    assert shape.valuations == [0, 0]
    assert {str(x) for x in shape.eigenvalues} == {"sqrt(6)", "-sqrt(6)"}
    result = weakly_admissible(V)
    assert result.admissible
    assert result.shape == "split"
    assert result.checked == 3
    assert weakly_admissible(V, oracle=True).admissible
    fast, slow = stable_subspaces(V), stable_subspaces_oracle(V)
    assert all(a.same_space(b) for a, b in zip(fast, slow))


def test_quadratic_split_with_two_slopes():
    # X^2 + X + 5 has discriminant -19 = 1 mod 5 and roots of valuation 0 and 1
    phi = [[0, -P], [1, -1]]
    V = FilteredIsocrystal.build(P, phi, {0: FULL, 1: [[1, 0]]})
    shape = frobenius_shape(V)
    assert shape.valuations == [0, 1]
    result = weakly_admissible(V)
    assert result.admissible
    assert (result.t_hodge, result.t_newton) == (1, 1)
    assert [s.newton for s in stable_subspaces(V)] == [0, 1, 1]

    flat = weakly_admissible(FilteredIsocrystal.build(P, phi, {0: FULL}))
    assert not flat.admissible
    assert flat.witness_numbers == (0, 1)


def test_repeated_eigenvalue_is_unsupported():
    V = FilteredIsocrystal.build(P, [[P, 0], [0, P]], {1: FULL})
    with pytest.raises(UnsupportedFrobeniusError):
        weakly_admissible(V)


def test_dual_of_admissible_object():
    V = ordinary([1, 1])
    D = dual(V)
    assert newton_number(D) == -1
    assert hodge_number(D) == -1
    assert weakly_admissible(D).admissible
    assert not weakly_admissible(dual(ordinary([1, 0]))).admissible


@pytest.mark.parametrize(
    "phi, flag",
    [
        ([[1, 0], [0, 0]], {0: FULL}),
        ([[1, 0], [0, P]], {1: FULL, 0: [[1, 0]]}),
        ([[1, 0], [0, P]], {0: [[1, 0]]}),
        ([[1, 0], [0, P]], {0: FULL, 1: FULL}),
        ([[1, 0, 0], [0, 1, 0]], {0: FULL}),
    ],
)
def test_invalid_objects(phi, flag):
    with pytest.raises(DomainError):
        FilteredIsocrystal.build(P, phi, flag)


def test_hodge_number_of_subspace():
    V = ordinary([1, 1])
    assert hodge_number(V, [[1, 1]]) == 1
    assert hodge_number(V, [[1, 0]]) == 0
    with pytest.raises(DomainError):
        newton_number(V, [[1, 1]])


TEXT = """
# ordinary elliptic curve shape
p 5
phi
1 0
0 5
filtration
0: 1 0 ; 0 1
1: 1 1
"""


def test_parse_text_form():
    V = parse_isocrystal(TEXT)
    assert V.prime == 5
    assert V.describe() == {"p": 5, "dimension": 2, "phi": [["1", "0"], ["0", "5"]], "hodge": {"0": 1, "1": 1}}
    assert weakly_admissible(V).admissible


@pytest.mark.parametrize(
    "text",
    [
        "p 5\nphi\n1 0\n0 5\n",
        "p five\nphi\n1\nfiltration\n0: 1\n",
        "p 5\nphi\n1 0\n0 5\nfiltration\n0: 1 0 0\n",
        "hello\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(DomainError):
        parse_isocrystal(text)
