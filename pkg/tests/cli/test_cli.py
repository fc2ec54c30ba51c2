import io
import json
import sys

import pytest

from src.cli import COMMANDS, HANDLERS, parse_args
from src.core.errors import DataFileError, DomainError, UsageError
from src.main import main, run
from tests.conftest import DATA_DIR


def invoke(*argv, fmt="text"):
    out = io.StringIO()
    status = run([*argv, "--data-dir", str(DATA_DIR), "--format", fmt, "--no-timing"], stdout=out)
    assert status == 0
    return out.getvalue()


def document(*argv):
    return json.loads(invoke(*argv, fmt="json-doc"))


def test_every_command_has_a_handler():
    assert set(HANDLERS) == set(COMMANDS)


def test_golden_json(golden_dir):
    assert invoke("hasse", "--p", "5", fmt="json-doc") == (golden_dir / "hasse_p5.json").read_text(encoding="utf-8")


def test_golden_takeuchi_table(golden_dir):
    expected = (golden_dir / "takeuchi_padic3.txt").read_text(encoding="utf-8")
    assert invoke("takeuchi", "--padic", "3") == expected


def test_golden_pgl2(golden_dir):
    expected = (golden_dir / "pgl2_diag.txt").read_text(encoding="utf-8")
    assert invoke("pgl2", "--p", "3", "--matrix", "1,0;0,3") == expected


def test_document_shape():
    doc = document("ssing", "--p", "7")
    assert list(doc) == ["command", "inputs", "outputs", "precision", "elapsed_ms"]
    assert doc["command"] == "ssing"
    assert doc["outputs"]["count"] == 3
    assert doc["elapsed_ms"] == 0


def test_timing_is_reported():
    out = io.StringIO()
    run(["ssing", "--p", "5", "--data-dir", str(DATA_DIR), "--format", "json-doc"], stdout=out)
    assert isinstance(json.loads(out.getvalue())["elapsed_ms"], int)


def test_gamma_command():
    doc = document("gamma", "--p", "5", "--x", "3", "--prec", "4")
    assert doc["inputs"] == {"p": 5, "x": "3"}
    assert doc["outputs"]["value"].endswith("O(5^4)")
    assert doc["precision"] == {"N": 4}


def test_escher_command():
    outputs = document("escher", "--bound", "10")["outputs"]
    assert outputs["escher"]["ok"]
    quaternions = outputs["quaternions"]
    assert quaternions["torsion_free"]
    assert quaternions["control_contains_i"]
    assert quaternions["quotient_classes"] == 12
    assert all(o["closed"] for o in quaternions["maximal_orders"].values())


def test_amalgam_command():
    outputs = document("amalgam", "--p", "2")["outputs"]
    assert outputs["graph"]["euler_characteristic"] == "-1/24"
    assert outputs["orbifold"]["chi(2,4,6)"] == "-1/12"
    assert outputs["orbifold"]["level_two_genus"] == 3


def test_tree_command(tmp_path):
    dot = tmp_path / "tree.dot"
    outputs = document(
        "tree", "--p", "3", "--radius", "2", "--to", "2:5", "--point", "disk 0 1/2", "--out", str(dot)
    )["outputs"]
    assert outputs["ball_size"] == 17
    assert outputs["distance"] == 2
    assert outputs["lattice_distance"] == 2
    assert outputs["geodesic"] == ["3:0:-", "3:1:2", "3:2:2,1"]
    assert outputs["point"]["type"] == 3
    assert outputs["point"]["retraction"] == "3:0:-+1/2"
    assert dot.read_text(encoding="utf-8").startswith("graph tree {")


def test_tree_samples():
    outputs = document("tree", "--p", "2", "--samples", "3", "--seed", "7")["outputs"]
    assert outputs["properties"] == {"samples": 3, "seed": 7, "isometry": True, "geodesics": True}


def test_newton_presets(tmp_path):
    svg = tmp_path / "np.svg"
    outputs = document("np", "--preset", "irregular", "--out", str(svg))["outputs"]
    assert outputs["slopes"] == [{"slope": "3/2", "multiplicity": 2}]
    assert outputs["irregularity"] == 3
    assert not outputs["regular"]
    assert svg.read_text(encoding="utf-8").startswith("<svg")
    assert document("np", "--preset", "hypergeometric")["outputs"]["regular"]


def test_newton_text():
    text = invoke("np", "--preset", "bessel")
    assert text.rstrip().endswith("irregularity 2")


def test_wa_command(tmp_path):
    path = tmp_path / "ordinary.txt"
    path.write_text("p 5\nphi\n1 0\n0 5\nfiltration\n0: 1 0 ; 0 1\n1: 1 1\n", encoding="utf-8")
    outputs = document("wa", str(path))["outputs"]
    assert outputs["weakly_admissible"]
    assert outputs["object"]["dimension"] == 2


def test_regen_data_is_byte_identical(tmp_path):
    outputs = document("regen-data", "--out", str(tmp_path))["outputs"]
    assert outputs["cm_rows"] == 62
    assert outputs["cm_invalid"] == []
    for name in ("cm_discriminants.json", "takeuchi.json"):
        assert (tmp_path / name).read_bytes() == (DATA_DIR / name).read_bytes()


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["gamma"],
        ["nosuchcommand"],
        ["gamma", "--x", "abc"],
        ["hasse", "--p", "4"],
        ["hasse", "--prec", "0"],
        ["count", "--s0", "x"],
    ],
)
def test_usage_errors(argv):
    with pytest.raises(UsageError) as info:
        run([*argv, "--data-dir", str(DATA_DIR)] if argv else argv, stdout=io.StringIO())
    assert info.value.exit_code == 64


def test_missing_data_directory(tmp_path):
    with pytest.raises(UsageError):
        run(["hasse", "--data-dir", str(tmp_path / "absent")], stdout=io.StringIO())


def test_domain_errors(tmp_path):
    with pytest.raises(DomainError) as info:
        run(["hasse", "--p", "2", "--data-dir", str(DATA_DIR)], stdout=io.StringIO())
    assert info.value.exit_code == 2
    with pytest.raises(DataFileError):
        run(["wa", str(tmp_path / "none.txt"), "--data-dir", str(DATA_DIR)], stdout=io.StringIO())


def test_parse_args_keeps_shared_flags():
    args = parse_args(["radius", "--p", "3", "--n-max", "81", "--threads", "2"])
    assert (args.p, args.n_max, args.threads, args.n_min) == (3, 81, 2, None)


@pytest.mark.parametrize(
    "argv,code",
    [
        (["hasse", "--p", "7"], 0),
        (["hasse", "--p", "9"], 64),
        (["hasse", "--p", "2"], 2),
    ],
)
def test_main_exit_status(monkeypatch, capsys, argv, code):
    monkeypatch.setattr(sys, "argv", ["padic-desk", *argv, "--data-dir", str(DATA_DIR)])
    with pytest.raises(SystemExit) as info:
        main()
    assert info.value.code == code
    if code == 0:
        assert "6z^3 + 5z^2 + 5z + 6" in capsys.readouterr().out
