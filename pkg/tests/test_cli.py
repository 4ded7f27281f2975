import io as stdio
import json

import numpy as np
import pytest

from pickspace import io
from pickspace.cli import run

from conftest import opposite_axes_points


def _run(argv, stdin=None, monkeypatch=None):
    out, err = stdio.StringIO(), stdio.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", stdio.StringIO(stdin))
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def _write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.fixture
def axes(tmp_path):
    return _write(tmp_path, "axes.json", io.points_document(opposite_axes_points()))


@pytest.fixture
def two_disk(tmp_path):
    return _write(tmp_path, "two.json", {"m": 1, "points": [[0], [0.5]]})


def _json_run(argv, **kw):
    code, out, err = _run(argv + ["--json"], **kw)
    assert code == 0, err
    doc = json.loads(out)
    io.validate_report(doc)
    return doc


def test_classify_opposite_axes(axes):
    doc = _json_run(["classify", axes])
    res = doc["result"]
    assert all(res[name]["status"] == "false" for name in (
        "c1_geodesic", "c2_triples", "c3_extremal_product",
        "c4_r_orthogonal", "c5_orthogonal_gram", "c6_model"))
    assert res["consistent"] and not res["is_model_space"]
    assert doc["input_kind"] == "points"


def test_delta_two_points(two_disk):
    doc = _json_run(["delta", two_disk])
    np.testing.assert_allclose(doc["result"]["delta"], [[0, 0.5], [0.5, 0]], atol=1e-12)


def test_delta_text(two_disk):
    code, out, _ = _run(["delta", two_disk])
    assert code == 0 and "0.5" in out


def test_gen_geodesic_pipe_classify(monkeypatch):
    code, gen_out, _ = _run(["gen", "--geodesic", "--n", "4", "--seed", "7"])
    assert code == 0
    doc = _json_run(["classify", "-"], stdin=gen_out, monkeypatch=monkeypatch)
    assert doc["result"]["is_model_space"] and doc["result"]["consistent"]
    assert all(doc["result"][k]["status"] == "true" for k in ("c1_geodesic", "c6_model"))


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_gen_generic_pipe_classify(monkeypatch, seed):
    _, gen_out, _ = _run(["gen", "--generic", "--n", "5", "--m", "3", "--seed", str(seed)])
    doc = _json_run(["classify", "-"], stdin=gen_out, monkeypatch=monkeypatch)
    res = doc["result"]
    assert res["consistent"] and not res["is_model_space"]
    assert res["c4_r_orthogonal"]["status"] == "false"


def test_gen_deterministic():
    a = _run(["gen", "--geodesic", "--n", "5", "--m", "3", "--seed", "11"])[1]
    b = _run(["gen", "--geodesic", "--n", "5", "--m", "3", "--seed", "11"])[1]
    c = _run(["gen", "--geodesic", "--n", "5", "--m", "3", "--seed", "12"])[1]
    assert a == b and a != c
    io.parse_document(a)


def test_gram_input_commands(tmp_path):
    g = np.array([[1, 1], [1, 4 / 3]])
    path = _write(tmp_path, "g.json", {"n": 2, "entries": g.tolist()})
    doc = _json_run(["dual", path])
    entries = np.array(doc["result"]["entries"])
    np.testing.assert_allclose(entries[..., 0], [[4, -3], [-3, 3]], atol=1e-9)
    doc = _json_run(["orthogonalize", path])
    assert doc["result"]["verdict"] == "r_orthogonal"
    doc = _json_run(["realize", path])
    assert doc["result"]["m"] == 1
    doc = _json_run(["probe-dual", path])
    assert doc["result"]["dual_in_F"] and doc["result"]["dual_in_M"]
    doc = _json_run(["classify", path])
    assert doc["result"]["gram_route"]["agrees"]


def test_blaschke_input(tmp_path):
    path = _write(tmp_path, "b.json", {"zeros": [0, [0.5, 0], [-0.5, 0]]})
    doc = _json_run(["extremal", path, "--base", "0"])
    assert doc["result"]["value"] == pytest.approx(0.25)
    assert doc["result"]["excess"] == pytest.approx(0, abs=1e-10)
    doc = _json_run(["geodesic", path])
    assert doc["result"]["in_single_geodesic"]


def test_extremal_base_out_of_range(two_disk):
    code, _, err = _run(["extremal", two_disk, "--base", "5"])
    assert code == 2 and "--base" in err


def test_congruent(tmp_path, axes):
    other = _write(tmp_path, "o.json", io.points_document(opposite_axes_points()[[0, 2, 1]]))
    assert _json_run(["congruent", axes, other])["result"]["congruent"]
    moved = _write(tmp_path, "m.json", io.points_document(opposite_axes_points(0.5, 0.3)))
    assert not _json_run(["congruent", axes, moved])["result"]["congruent"]


def test_orthogonalize_degenerate(tmp_path):
    path = _write(tmp_path, "i.json", {"n": 2, "entries": [[1, 0], [0, 1]]})
    doc = _json_run(["orthogonalize", path])
    assert doc["result"]["verdict"] == "degenerate" and doc["result"]["lambdas"] is None


def test_malformed_json_is_line_anchored(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{\n  "m": 1,\n  "points": [[0], [0.5]\n}')
    code, _, err = _run(["delta", str(path)])
    assert code == 2 and f"{path}:4" in err


def test_schema_error_is_line_anchored(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{\n  "m": 1,\n  "points": [["x"]]\n}')
    code, _, err = _run(["delta", str(path)])
    assert code == 2 and f"{path}:3" in err


def test_dimension_mismatch(tmp_path):
    path = _write(tmp_path, "d.json", {"m": 2, "points": [[0], [0.5]]})
    assert _run(["delta", path])[0] == 2


def test_missing_file():
    assert _run(["delta", "/nonexistent/file.json"])[0] == 2


def test_numerical_failure_exit_code(tmp_path):
    path = _write(tmp_path, "dup.json", {"m": 1, "points": [[0.3], [0.3]]})
    code, _, err = _run(["classify", path])
    assert code == 3 and "DuplicatePoints" in err
    bergman = (1 / (1 - np.outer([0, 0.5, 0.5j], np.conj([0, 0.5, 0.5j])).T)) ** 2
    path = _write(tmp_path, "berg.json", {"n": 3, "entries": io.complex_list(bergman)})
    assert _run(["classify", path])[0] == 3


def test_unknown_subcommand():
    assert _run(["frobnicate"])[0] == 2


def test_tolerance_precedence(tmp_path, monkeypatch, two_disk):
    doc = _json_run(["delta", two_disk])
    assert doc["tolerances"] == {"psd_tol": 1e-9, "rankone_tol": 1e-8, "match_tol": 1e-8}
    with_tol = _write(tmp_path, "t.json", {"m": 1, "points": [[0], [0.5]],
                                           "tolerances": {"match_tol": 1e-6}})
    assert _json_run(["delta", with_tol])["tolerances"]["match_tol"] == 1e-6
    monkeypatch.setenv("PICKSPACE_TOL", "1e-5")
    doc = _json_run(["delta", with_tol])
    assert doc["tolerances"] == {"psd_tol": 1e-5, "rankone_tol": 1e-5, "match_tol": 1e-5}
    doc = _json_run(["delta", with_tol, "--tol-rankone", "1e-3"])
    assert doc["tolerances"]["rankone_tol"] == 1e-3 and doc["tolerances"]["psd_tol"] == 1e-5
    monkeypatch.setenv("PICKSPACE_TOL", "abc")
    assert _run(["delta", two_disk])[0] == 2


def test_twelve_significant_digits(two_disk):
    code, out, _ = _run(["dual", two_disk, "--json"])
    entries = json.loads(out)["result"]["entries"]
    assert entries[1][1][0] == 3.0
    assert all(len(repr(abs(v)).replace(".", "").lstrip("0")) <= 13
               for row in entries for e in row for v in e)
