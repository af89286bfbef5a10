"""Command line driver: report shapes, exit protocol, determinism."""

import json
import os

import pytest

from zamobelt.cli import main


def run(capsys, *argv) -> tuple:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_belt_initial_cluster(capsys):
    code, out, _ = run(capsys, "belt", "A2", "--steps", "0")
    assert code == 0
    doc = json.loads(out)
    assert doc["cluster"] == "x1, x2"
    assert doc["steps"] == 0


def test_halfperiod_report_keys_and_values(capsys):
    code, out, _ = run(capsys, "halfperiod", "fig1-A5starD4")
    assert code == 0
    doc = json.loads(out)
    assert list(doc) == [
        "name",
        "N",
        "period",
        "sigma",
        "colorBehavior",
        "identity",
        "censusSize",
        "catalogVersion",
    ]
    assert doc["N"] == 10
    assert doc["period"] == 20
    assert doc["sigma"] == "(8 9)"
    assert doc["colorBehavior"] == "preserving"
    assert doc["identity"] is False
    assert doc["censusSize"] is None


def test_halfperiod_census_size_for_tensor_with_point(capsys):
    code, out, _ = run(capsys, "halfperiod", "A3")
    doc = json.loads(out)
    assert code == 0 and doc["censusSize"] == 9


def test_green_report(capsys):
    code, out, _ = run(capsys, "green", "A2")
    assert code == 0
    doc = json.loads(out)
    assert doc["lengths"] == [3, 2]
    assert doc["certificates"][0]["sequence"] == [2, 1, 2]
    assert doc["certificates"][1]["sequence"] == [1, 2]
    assert all(c["finalCIsMinusPermutation"] for c in doc["certificates"])
    assert doc["frozenIsomorphism"] == {"sigma": "(1 2)", "matchesSymbolic": True}


def test_green_skip_symbolic(capsys):
    code, out, _ = run(capsys, "green", "B2", "--skip-symbolic")
    doc = json.loads(out)
    assert code == 0
    assert doc["frozenIsomorphism"]["matchesSymbolic"] is None


def test_census_csv(capsys):
    code, out, _ = run(capsys, "census", "A2")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "name,lambdaSeed,period,red,blue,ties"
    assert lines[1] == "A2,-1,10,6,4,0"


def test_census_mismatch_exits_one(capsys):
    # the single point bigraph ties on every event, so counts cannot match
    code, out, _ = run(capsys, "census", "A1")
    assert code == 1
    lines = out.strip().split("\n")
    assert len(lines) == 3  # header, primary, perturbed rerun
    assert lines[1].endswith(",0,0,4")


def test_tropical_report(capsys):
    code, out, _ = run(capsys, "tropical", "B2xB2", "--trials", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["periodsDivide2N"] is True
    assert doc["halfPeriodShiftOk"] is True
    assert doc["sigma"] == "id"


def test_dual_check_report(capsys):
    code, out, _ = run(capsys, "dual-check", "G2", "--trials", "4")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog-list")
    assert code == 0
    doc = json.loads(out)
    names = [e["name"] for e in doc["entries"]]
    assert "A2" in names and "fig2-F4xA2" in names
    fig2 = next(e for e in doc["entries"] if e["name"] == "fig2-F4xA2")
    assert fig2["hGamma"] == 12 and fig2["hDelta"] == 3 and fig2["N"] == 15


def test_unknown_name_exits_two(capsys):
    code, out, err = run(capsys, "halfperiod", "Q9")
    assert code == 2
    assert "catalog" in err


def test_bad_json_file_exits_two(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "halfperiod", str(bad))
    assert code == 2


def test_json_file_target(tmp_path, capsys):
    doc = {"n": 2, "b": [[0, 2], [-1, 0]], "epsilon": ["w", "b"]}
    path = tmp_path / "c2.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "halfperiod", str(path))
    assert code == 0
    report = json.loads(out)
    assert report["N"] == 6 and report["period"] == 6


def test_term_guard_environment_variable(capsys, monkeypatch):
    monkeypatch.setenv("ZAMOBELT_TERM_GUARD", "2")
    code, _, err = run(capsys, "halfperiod", "A2")
    assert code == 2
    assert "guard" in err


def test_term_guard_flag_overrides_environment(capsys, monkeypatch):
    monkeypatch.setenv("ZAMOBELT_TERM_GUARD", "2")
    code, _, _ = run(capsys, "halfperiod", "A2", "--term-guard", "1000000")
    assert code == 0


def test_reports_are_byte_identical_across_runs(capsys):
    first = run(capsys, "halfperiod", "A2xA3")
    second = run(capsys, "halfperiod", "A2xA3")
    assert first == second
    third = run(capsys, "tropical", "A3", "--trials", "7", "--seed", "42")
    fourth = run(capsys, "tropical", "A3", "--trials", "7", "--seed", "42")
    assert third == fourth


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "halfperiod", "A2", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["N"] == 5


def test_suite_runs_all_and_aggregates(tmp_path, capsys):
    configs = [
        {"command": "halfperiod", "target": "A2"},
        {"command": "census", "target": "A3"},
        {"command": "halfperiod", "target": "NOPE"},
    ]
    path = tmp_path / "suite.json"
    path.write_text(json.dumps(configs))
    code, out, _ = run(capsys, "suite", str(path))
    assert code == 2  # worst member: the unknown name
    doc = json.loads(out)
    assert doc["summary"] == {"total": 3, "verified": 2, "falsified": 0, "errors": 1}
    assert doc["results"][2]["exitCode"] == 2


def test_suite_parallel_matches_serial(tmp_path, capsys):
    configs = [
        {"command": "halfperiod", "target": "A2"},
        {"command": "halfperiod", "target": "A3"},
        {"command": "census", "target": "B2"},
        {"command": "dual-check", "target": "C2", "trials": 3},
    ]
    path = tmp_path / "suite.json"
    path.write_text(json.dumps(configs))
    serial = run(capsys, "suite", str(path))
    parallel = run(capsys, "suite", str(path), "--jobs", "4")
    assert serial == parallel
    assert serial[0] == 0
