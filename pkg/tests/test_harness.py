import json
import os

import pytest

from dunklsb.errors import InvalidParameterError, UnsupportedMultiplicityError
from dunklsb.harness import CATALOG, SuiteConfig, emit_report, load_config, run_verification
from dunklsb.harness import report as report_mod
from dunklsb.harness.cli import main
from dunklsb.harness.runner import Report

Z2 = dict(family="A1^N", N=1, mu=["1"], basis_degree=6, kernel_degree=24)


@pytest.fixture(scope="module")
def z2_report():
    return run_verification(SuiteConfig(**Z2))


def test_config_rejects_bad_values():
    with pytest.raises(UnsupportedMultiplicityError):
        SuiteConfig(family="B", N=2, mu=["-1", "1"])
    with pytest.raises(UnsupportedMultiplicityError):
        SuiteConfig(family="B", N=2, mu=["1+2j", "1"])
    with pytest.raises(InvalidParameterError):
        SuiteConfig(family="B", N=2, mu=["1", "1"], t=["0"])
    with pytest.raises(InvalidParameterError):
        SuiteConfig(family="B", N=2, mu=["1", "1"], basis_degree=6, kernel_degree=8)
    with pytest.raises(InvalidParameterError):
        SuiteConfig.from_dict({"family": "B", "N": 2, "mu": [1, 1], "colour": "red"})


def test_every_check_reported_once(z2_report):
    ids = [r.id for r in z2_report.results]
    assert ids == [e.id for e in CATALOG]
    for r in z2_report.results:
        assert r.status in ("pass", "fail", "skipped", "error")
        if r.status == "skipped":
            assert r.reason and r.passed is None
        else:
            assert r.passed == (r.status == "pass")


def test_z2_passes(z2_report):
    bad = [(r.id, r.residual, r.reason) for r in z2_report.results if r.passed is False]
    assert not bad


def test_trivial_multiplicity_rank_two():
    # mu = 0: Dunkl operators are partial derivatives and every identity is classical
    rep = run_verification(SuiteConfig(family="A1^N", N=2, mu=["0", "0"], basis_degree=4, kernel_degree=24))
    bad = [(r.id, r.residual, r.reason) for r in rep.results if r.passed is False]
    assert not bad


def test_only_filter(z2_report):
    rep = run_verification(SuiteConfig(**Z2), only=["c01", "4"])
    assert [r.id for r in rep.results] == ["c01", "c04"]


def test_json_round_trip_and_determinism(z2_report):
    doc = json.loads(emit_report(z2_report, "json"))
    assert doc["summary"]["passed"] is True
    assert len(doc["checks"]) == len(CATALOG)
    assert doc["meta"]["seed"] == 0
    assert SuiteConfig.from_dict(doc["meta"]["config"]).to_dict() == z2_report.config.to_dict()

    again = json.loads(emit_report(run_verification(SuiteConfig(**Z2)), "json"))
    for d in (doc, again):
        d["meta"].pop("timings")
        d["meta"].pop("total_time")
    assert json.dumps(doc, sort_keys=True) == json.dumps(again, sort_keys=True)


def test_csv_and_text(z2_report):
    lines = emit_report(z2_report, "csv").splitlines()
    assert lines[0].startswith("id,criterion,status")
    assert len(lines) == len(CATALOG) + 1
    text = emit_report(z2_report, "text")
    assert text.rstrip().endswith(f"{len(CATALOG)} checks in {z2_report.meta['total_time']}s")
    with pytest.raises(ValueError):
        emit_report(z2_report, "xml")


def test_empty_report():
    rep = Report(SuiteConfig(**Z2), [], {})
    doc = json.loads(emit_report(rep, "json"))
    assert doc["checks"] == [] and doc["summary"]["pass"] == 0 and doc["summary"]["passed"] is True
    assert emit_report(rep, "csv").strip() == ",".join(report_mod.FIELDS)


def test_atomic_write_leaves_nothing_on_failure(tmp_path, monkeypatch, z2_report):
    target = tmp_path / "report.json"
    target.write_text("previous")

    def boom(*_):
        raise OSError("disk full")

    monkeypatch.setattr(report_mod.os, "replace", boom)
    with pytest.raises(OSError):
        emit_report(z2_report, "json", str(target))
    assert target.read_text() == "previous"
    assert sorted(os.listdir(tmp_path)) == ["report.json"]


def test_cli_verify(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps(dict(Z2, mu=["1/2"])))
    assert load_config(cfg).mu == ["1/2"]
    out = tmp_path / "sub" / "r.csv"
    assert main(["verify", "--config", str(cfg), "--out", str(out), "--format", "csv", "--seed", "5"]) == 0
    assert out.read_text().startswith("id,criterion")
    assert "report written" in capsys.readouterr().out


def test_cli_verify_failure_exit_code(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    # an impossible tolerance makes the numeric checks fail
    cfg.write_text(json.dumps(dict(Z2, tolerances={"kernel": -1.0})))
    assert main(["verify", "--config", str(cfg), "--format", "text"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_cli_kernel(capsys):
    assert main(["kernel", "--version", "E", "--family", "A1^N", "--N", "1", "--mu", "0",
                 "--z", "0.5", "--q", "1.5"]) == 0
    out = capsys.readouterr().out.split("\n")
    assert complex(out[0].split()[1]).real == pytest.approx(2.718281828459045 ** 0.75, abs=1e-12)
    assert out[1] == "truncation_degree 24"
    assert main(["kernel", "--version", "C", "--t", "1/2", "--z", "0.1,0.2j", "--q", "0.3,-0.1"]) == 0
    assert capsys.readouterr().out.startswith("value ")


def test_cli_basis_and_errors(capsys):
    assert main(["basis", "--degree", "2", "--family", "B", "--N", "2", "--mu", "1/2,3/2"]) == 0
    rows = capsys.readouterr().out.strip().splitlines()
    assert len(rows) == 1 + 1 + 2 + 3
    assert main(["kernel", "--version", "E", "--z", "1", "--q", "1"]) == 2
    assert "error" in capsys.readouterr().err
    assert main(["verify", "--config", "/nonexistent/cfg.json"]) == 2
