import json

import numpy as np
import pytest

import finspec as fs
from finspec import cli
from finspec.triple import (standard_ko_triple, triple_from_json,
                            triple_to_json)


def write_json(path, doc):
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.fixture
def ko0_path(tmp_path):
    return write_json(tmp_path / "ko0.json", triple_to_json(standard_ko_triple(0)))


@pytest.fixture
def two_point_path(tmp_path):
    t = fs.two_point_geometry(0.5)[1]
    return write_json(tmp_path / "tp.json", triple_to_json(t))


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_passes_on_ko_triple(ko0_path, capsys):
    code, out, _ = run(capsys, "validate", ko0_path)
    assert code == 0
    doc = json.loads(out)
    assert doc["pass"] is True
    assert doc["ko_dimension"] == [0]


def test_validate_fails_on_nonhermitian_dirac(tmp_path, capsys):
    doc = triple_to_json(standard_ko_triple(0))
    doc["dirac"]["entries"][0][1] = [3.0, 0.0]  # break self-adjointness
    path = write_json(tmp_path / "bad.json", doc)
    code, out, _ = run(capsys, "validate", path)
    assert code == 1
    report = json.loads(out)
    names = {c["name"]: c["pass"] for c in report["validation"]["checks"]}
    assert names["dirac_selfadjoint"] is False


def test_validate_missing_file_is_io_error(capsys):
    code, _, err = run(capsys, "validate", "/no/such/file.json")
    assert code == 3
    assert "I/O" in err


def test_malformed_json_is_usage_error(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, _ = run(capsys, "validate", str(path))
    assert code == 2


def test_unknown_subcommand_is_usage_error(capsys):
    code, _, _ = run(capsys, "frobnicate", "x.json")
    assert code == 2


def test_distance_pair(two_point_path, capsys):
    code, out, _ = run(capsys, "distance", two_point_path, "--states", "1", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["distance"]["value"] == pytest.approx(0.5, rel=1e-6)


def test_distance_matrix_deterministic(two_point_path, capsys):
    code1, out1, _ = run(capsys, "distance", two_point_path, "--seed", "4")
    code2, out2, _ = run(capsys, "distance", two_point_path, "--seed", "4")
    assert code1 == code2 == 0
    assert out1 == out2


def test_example_validate_distance_pipeline(tmp_path, capsys):
    ex = str(tmp_path / "ex.json")
    code, _, _ = run(capsys, "example", "interval_3", "--length", "2.0",
                     "--out", ex)
    assert code == 0
    code, out, _ = run(capsys, "distance", ex)
    assert code == 0
    doc = json.loads(out)
    assert doc["matrix"][0][2] == pytest.approx(2.0, rel=1e-6)


def test_example_unknown_name(capsys):
    code, _, _ = run(capsys, "example", "moebius_7")
    assert code == 2


def test_decompose_writes_components(tmp_path, capsys, monkeypatch):
    t = fs.direct_sum(fs.two_point_geometry(1.0)[1], fs.two_point_geometry(2.0)[1])
    path = write_json(tmp_path / "sum.json", triple_to_json(t))
    prefix = str(tmp_path / "part")
    code, out, _ = run(capsys, "decompose", path, "--out", prefix)
    assert code == 0
    doc = json.loads(out)
    assert doc["components"] == 2
    assert doc["character_counts"] == [2, 2]
    for f in doc["files"]:
        sub = triple_from_json(json.loads(open(f).read()))
        assert fs.validate_triple(sub).passed


def test_morphism_identity_exit_zero(tmp_path, ko0_path, capsys):
    t = standard_ko_triple(0)
    morph = {
        "kind": "sf",
        "character_map": [1],
        "phi_matrix": {"dim": 2, "entries": [[[1.0, 0.0], [0.0, 0.0]],
                                             [[0.0, 0.0], [1.0, 0.0]]]},
        "flags": {"real": True, "even": True, "isometric": True},
    }
    mpath = write_json(tmp_path / "id.json", morph)
    code, out, _ = run(capsys, "morphism", ko0_path, ko0_path, mpath)
    assert code == 0
    doc = json.loads(out)
    assert doc["pass"] is True
    residuals = [c["residual"] for c in doc["checks"]]
    assert max(residuals) <= 1e-8


def test_compare_report(tmp_path, capsys):
    g = fs.lattice_circle(4, 1.0)[0]
    from finspec.geometry import geometry_to_json
    path = write_json(tmp_path / "g.json", geometry_to_json(g))
    code, out, _ = run(capsys, "compare", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["infinite_pattern_match"] is True
    assert doc["max_relative_deviation"] <= 1e-6


def test_out_flag_writes_file(tmp_path, ko0_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "validate", ko0_path, "--out", str(target))
    assert code == 0
    assert json.loads(target.read_text())["pass"] is True
