import json

import pytest

from partpoly import cli
from partpoly.geomoracle import enumerate_vertices, hrep_from_dict
from partpoly.report import Check


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_hpoly_all_methods_text(capsys):
    code, out, _ = run(capsys, "hpoly", "A", "5", "--K", "1,2,4", "--method", "all")
    assert code == 0
    for name in ("faces", "precup", "characters"):
        assert f"{name}:" in out
    assert out.count("[1, 9, 17, 9, 1]") == 3
    assert "1 + 9t + 17t^2 + 9t^3 + t^4" in out


def test_hpoly_json_schema(capsys):
    code, out, _ = run(capsys, "hpoly", "A", "4", "--K", "1,3", "--method", "all", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert list(report) == sorted(report)
    assert report["job"]["label"] == "A_3" and report["job"]["K"] == [1, 3]
    assert report["h_polynomial"] == {"faces": [1, 6, 6, 1], "precup": [1, 6, 6, 1], "characters": [1, 6, 6, 1]}
    assert report["f_vector"] == [14, 21, 9, 1]
    assert report["precup_set"]["size"] == 14
    assert all({"name", "pass", "detail"} <= set(c) for c in report["checks"])
    assert report["version"] == cli.__version__
    assert "timing" not in report


def test_timing_flag(capsys):
    _, out, _ = run(capsys, "hpoly", "A", "3", "--format", "json", "--timing")
    assert "timing" in json.loads(out)


def test_output_is_deterministic(capsys):
    args = ("verify", "cross-method", "B", "3", "--all-K", "--format", "json")
    first = run(capsys, *args)[1]
    second = run(capsys, *args)[1]
    parallel = run(capsys, *args, "--workers", "2")[1]
    assert first == second == parallel


@pytest.mark.parametrize(
    "argv",
    [
        ["hpoly", "B", "3", "--method", "characters"],
        ["hpoly", "A", "3", "--K", "5"],
        ["hpoly", "A", "3", "--K", "x"],
        ["hpoly", "E", "3"],
        ["hpoly", "A", "1"],
        ["frobnicate", "A", "3"],
        ["verify", "nosuch", "A", "3"],
        ["hpoly", "B", "4", "--method", "precup", "--budget", "10"],
        ["export", "B", "5"],
        ["export", "A", "3", "--anchor", "1,2,3"],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    assert cli.main(argv) == 1


@pytest.mark.parametrize("suite", cli.SUITES)
def test_every_suite_runs(capsys, suite):
    code, out, _ = run(capsys, "verify", suite, "A", "3", "--all-K")
    assert code == 0, out
    assert "[PASS]" in out and "[FAIL]" not in out


def test_alternating_control_reported(capsys):
    code, out, _ = run(capsys, "verify", "orbit-product", "A", "3", "--K", "1,2", "--format", "json")
    report = json.loads(out)
    names = [c["name"] for c in report["checks"]]
    assert "orbit-product:alternating-control" in names and code == 0


def test_verification_failure_exit_2(capsys, monkeypatch):
    def broken(*args):
        c = Check("forced")
        c.record(False, "forced failure")
        return [c]

    monkeypatch.setattr(cli, "_verify_one", broken)
    code, out, _ = run(capsys, "verify", "geometry", "A", "3")
    assert code == 2 and "[FAIL] forced" in out


def test_export_roundtrip(tmp_path, capsys):
    path = tmp_path / "d3.json"
    assert cli.main(["export", "D", "3", "--K", "3", "--out", str(path)]) == 0
    blob = json.loads(path.read_text())
    hrep = hrep_from_dict(blob)
    verts = enumerate_vertices(hrep)
    assert [[f"{x.numerator}/{x.denominator}" for x in v] for v in verts] == blob["vertices"]


def test_export_with_anchor(capsys):
    code, out, _ = run(capsys, "export", "A", "3", "--anchor=-2,0,2")
    assert code == 0
    assert json.loads(out)["anchor"] == ["-2/1", "0/1", "2/1"]


def test_geometry_with_anchor(capsys):
    code, out, _ = run(capsys, "verify", "geometry", "A", "4", "--K", "2", "--anchor=-5,-1,2,4")
    assert code == 0 and "[FAIL]" not in out


def test_sweep_and_facets(capsys):
    code, out, _ = run(capsys, "sweep", "D", "3")
    assert code == 0 and "methods-agree" in out
    code, out, _ = run(capsys, "facets", "B", "3", "--K", "2,3", "--format", "json")
    assert json.loads(out)["facets"][-2:] == ["H(2)", "H(3)"]
    code, out, _ = run(capsys, "fvector", "A", "3", "--all-K", "--format", "json")
    assert [r["f_vector"] for r in json.loads(out)["results"]][0] == [6, 6, 1]
