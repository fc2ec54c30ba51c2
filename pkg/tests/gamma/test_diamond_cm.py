from fractions import Fraction

import pytest

from src.core.errors import DataFileError, DomainError
from src.gamma import (
    CmDiscriminantRow,
    class_number,
    cm_gamma_product,
    diamond_Gp,
    diamond_convergence_report,
    diamond_telescoping_check,
    find_row,
    fundamental_discriminants,
    gamma_p,
    kronecker,
    load_cm_table,
    regenerate_cm_table,
    validate_cm_table,
    write_cm_table,
)
from src.gamma.cm import CM_TABLE_FILE

X = Fraction(1, 24)


def test_diamond_levels_stabilise():
    report = diamond_convergence_report(3, X, [1, 2, 3])
    assert report.stabilising
    assert len(report.values) == 3
    assert report.to_document()["difference_valuations"] == report.difference_valuations


def test_diamond_needs_two_levels():
    with pytest.raises(DomainError):
        diamond_convergence_report(3, X, [2])


@pytest.mark.parametrize("m", [2, 3])
def test_diamond_telescoping(m):
    assert diamond_telescoping_check(3, X, m) >= m - 1


def test_diamond_requires_prime_for_rationals():
    with pytest.raises(DomainError):
        diamond_Gp(X, 1)
    with pytest.raises(DomainError):
        diamond_Gp(X, -1, prime=3)


def test_fundamental_discriminants():
    assert fundamental_discriminants(24) == [3, 4, 7, 8, 11, 15, 19, 20, 23, 24]


@pytest.mark.parametrize("d, h", [(3, 1), (4, 1), (23, 3), (56, 4), (163, 1)])
def test_class_numbers(d, h):
    assert class_number(d) == h


def test_kronecker_at_two():
    assert kronecker(-3, 2) == -1
    assert kronecker(-7, 2) == 1
    assert kronecker(-4, 2) == 0


def test_shipped_table_is_valid(data_dir):
    rows = load_cm_table(data_dir / CM_TABLE_FILE)
    assert len(rows) == 62
    assert validate_cm_table(rows) == []
    assert all(r.satisfies_class_number_identity() for r in rows)


def test_regeneration_reproduces_table(data_dir, tmp_path):
    rows = regenerate_cm_table(200)
    assert rows == load_cm_table(data_dir / CM_TABLE_FILE)
    out = write_cm_table(rows, tmp_path / CM_TABLE_FILE)
    assert out.read_text(encoding="utf-8") == (data_dir / CM_TABLE_FILE).read_text(encoding="utf-8")


def test_validation_flags_bad_rows():
    rows = [CmDiscriminantRow(7, 2, 2), CmDiscriminantRow(12, 1, 2), CmDiscriminantRow(8, 1, 2)]
    assert validate_cm_table(rows) == [7, 12]


def test_broken_table_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(DataFileError):
        load_cm_table(path)
    path.write_text('[{"d": 3}]', encoding="utf-8")
    with pytest.raises(DataFileError):
        load_cm_table(path)
    with pytest.raises(DataFileError):
        load_cm_table(tmp_path / "missing.json")


def test_find_row():
    rows = regenerate_cm_table(20)
    assert find_row(rows, 7).h == 1
    with pytest.raises(DomainError):
        find_row(rows, 5)


def test_cm_product_for_d3():
    row = CmDiscriminantRow(3, 1, 6)
    product = cm_gamma_product(5, row, 6)
    expected = gamma_p(Fraction(1, 3), 6, prime=5) / gamma_p(Fraction(2, 3), 6, prime=5)
    assert product.base_product == expected
    assert product.exponent == Fraction(3, 2)
    assert [f["power"] for f in product.factors] == [-1, 1]


def test_cm_product_for_d4():
    product = cm_gamma_product(7, CmDiscriminantRow(4, 1, 4), 6, threads=2)
    assert product.exponent == 1
    assert product.to_document()["exponent"] == "1/1"


def test_cm_product_rejects_ramified_prime():
    with pytest.raises(DomainError):
        cm_gamma_product(7, CmDiscriminantRow(7, 1, 2), 4)
