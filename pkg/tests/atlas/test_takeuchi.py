import json
from fractions import Fraction

import pytest

from src.atlas import (
    arithmetic_padic_triples,
    canonical_text,
    covering_genus,
    format_table,
    load_takeuchi,
    orbifold_euler_char,
    padic_table,
    takeuchi_lookup,
    write_takeuchi,
)
from src.atlas.takeuchi import EXPECTED_PADIC_COUNTS, TAKEUCHI_FILE, checksum, place_label
from src.core.errors import DataFileError, DomainError


@pytest.fixture
def rows(data_dir):
    return load_takeuchi(data_dir / TAKEUCHI_FILE)


def test_shipped_table_counts(rows):
    assert len(rows) == 18
    assert sum(len(r.triples) for r in rows) == 76
    first = rows[0]
    assert first.field == "Q"
    assert first.disc == ("2", "3")
    assert first.triples == ((2, 4, 6), (2, 6, 6), (3, 4, 4), (3, 6, 6))


@pytest.mark.parametrize("p", sorted(EXPECTED_PADIC_COUNTS))
def test_padic_counts(rows, p):
    assert len(arithmetic_padic_triples(rows, p)) == EXPECTED_PADIC_COUNTS[p]


def test_no_padic_triples_beyond_five(rows):
    assert arithmetic_padic_triples(rows, 7) == []
    assert padic_table(rows, 11) == []


def test_place_labels():
    assert place_label(2, "Q") == "2"
    assert place_label(2, "Q(sqrt(2))") == "v2"


def test_lookup_ignores_order(rows):
    row = takeuchi_lookup(rows, (6, 2, 4))
    assert row is rows[0]
    assert takeuchi_lookup(rows, (2, 3, 7)) is not None
    assert takeuchi_lookup(rows, (2, 3, 6)) is None


def test_padic_discriminant_drops_the_place(rows):
    table = padic_table(rows, 3)
    first = table[0]
    assert first["field"] == "Q"
    assert first["padic_disc"] == "2"
    assert [2, 4, 6] in first["triples"]
    assert rows[0].padic_disc(2) == "3"


def test_format_table_aligns_columns(rows):
    text = format_table(padic_table(rows, 3))
    lines = text.splitlines()
    assert lines[0].startswith("field")
    assert "(2,4,6)" in lines[1]
    starts = {line.index(line.split()[1]) for line in lines[:2]}
    assert len(starts) == 1


def test_format_full_rows(rows):
    text = format_table([r.to_document() for r in rows])
    assert text.splitlines()[1].split()[1] == "2.3"


def test_rewrite_is_byte_identical(rows, data_dir, tmp_path):
    out = write_takeuchi(rows, tmp_path / TAKEUCHI_FILE)
    assert out.read_bytes() == (data_dir / TAKEUCHI_FILE).read_bytes()
    sidecar = (tmp_path / (TAKEUCHI_FILE + ".sha256")).read_text(encoding="utf-8")
    assert sidecar.split()[0] == checksum(canonical_text(rows))
    assert load_takeuchi(out) == rows


def test_checksum_mismatch(tmp_data_dir):
    path = tmp_data_dir / TAKEUCHI_FILE
    path.write_text(path.read_text(encoding="utf-8") + "\n", encoding="utf-8")
    with pytest.raises(DataFileError, match="checksum"):
        load_takeuchi(path)
    assert len(load_takeuchi(path, verify_checksum=False)) == 18


def test_missing_rows_rejected(tmp_data_dir):
    path = tmp_data_dir / TAKEUCHI_FILE
    raw = json.loads(path.read_text(encoding="utf-8"))
    raw["rows"] = raw["rows"][1:]
    path.write_text(json.dumps(raw), encoding="utf-8")
    with pytest.raises(DataFileError, match="18"):
        load_takeuchi(path, verify_checksum=False)


def test_malformed_files(tmp_path):
    with pytest.raises(DataFileError):
        load_takeuchi(tmp_path / "absent.json")
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(DataFileError):
        load_takeuchi(bad)
    bad.write_text('{"rows": [{"field": "Q", "disc": [], "triples": [[2, 3]]}]}', encoding="utf-8")
    with pytest.raises(DataFileError, match="malformed"):
        load_takeuchi(bad)


def test_orbifold_euler_characteristics():
    assert orbifold_euler_char([2, 4, 6]) == Fraction(-1, 12)
    assert orbifold_euler_char([2, 3, 7]) == Fraction(-1, 42)
    assert orbifold_euler_char([2, 2, 3, 3]) == Fraction(-1, 3)
    assert orbifold_euler_char([], base_genus=2) == -2
    with pytest.raises(DomainError):
        orbifold_euler_char([0, 2])
    with pytest.raises(DomainError):
        orbifold_euler_char([2], base_genus=-1)


def test_covering_genus():
    assert covering_genus(Fraction(-1, 12), 48) == 3
    assert covering_genus(Fraction(-1, 3), 12) == 3
    assert covering_genus(Fraction(-1, 42), 84) == 2
    with pytest.raises(DomainError):
        covering_genus(Fraction(-1, 12), 5)
    with pytest.raises(DomainError):
        covering_genus(Fraction(-1, 12), 0)
