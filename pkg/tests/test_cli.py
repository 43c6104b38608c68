"""CLI tests 命令行测试"""

from __future__ import annotations

import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from spectral_cubics.cli import app
from spectral_cubics.models.reports import CorpusEntry
from spectral_cubics.utils.logger import LogLevel, logger

GOLDEN = Path(__file__).parent / "data" / "atlas_golden.json"

runner = CliRunner()


@pytest.fixture(autouse=True)
def quiet_home(tmp_path, monkeypatch):
    """Keep settings and error logs out of the real home directory 隔离主目录"""
    home = tmp_path / "home"
    monkeypatch.setenv("SPECTRAL_CUBICS_HOME", str(home))
    for key in ("SHEAR_SCHEDULE", "REFINE_BUDGET", "SEED", "WORKERS", "FUZZ_CASES"):
        monkeypatch.delenv(f"SPECTRAL_CUBICS_{key}", raising=False)
    monkeypatch.setattr(logger, "level", LogLevel.ERROR)
    return home


def _json(result):
    assert result.stdout.strip(), result.output
    return json.loads(result.stdout)


def test_atlas_json_matches_golden():
    result = runner.invoke(app, ["--json", "atlas"])
    assert result.exit_code == 0, result.output
    assert _json(result) == json.loads(GOLDEN.read_text(encoding="utf-8"))


def test_atlas_check_passes():
    result = runner.invoke(app, ["--json", "atlas", "--check"])
    assert result.exit_code == 0, result.output
    assert _json(result)


def test_gf2_verify_with_small_fuzz():
    args = ["--json", "--seed", "3", "gf2", "verify", "-m", "J", "--fuzz", "4"]
    result = runner.invoke(app, args)
    assert result.exit_code == 0, result.output
    report = _json(result)
    assert report["failures"] == []
    assert set(report["matrix"]) == {"J", "fuzz"}
    assert report["seed"] == 3


def test_gf2_model_dump():
    result = runner.invoke(app, ["gf2", "model", "J"])
    assert result.exit_code == 0, result.output
    dump = _json(result)
    assert dump["name"] == "J"
    assert len(dump["gram"]) == dump["dim"]


def test_gf2_model_unknown_code_is_an_input_error():
    result = runner.invoke(app, ["--json", "gf2", "model", "C6"])
    assert result.exit_code == 2
    assert _json(result)["status"] == 2


def test_examples_prints_a_document():
    result = runner.invoke(app, ["examples", "segre6"])
    assert result.exit_code == 0, result.output
    doc = _json(result)
    assert doc["parameters"]["binodal"] == "true"
    assert len(doc["line"]) == 2


def test_examples_rejects_malformed_param():
    result = runner.invoke(app, ["--json", "examples", "nest-theta", "-p", "epsilon"])
    assert result.exit_code == 2
    assert "key=value" in _json(result)["error"]["message"]


def test_missing_file_gives_error_payload(tmp_path):
    result = runner.invoke(app, ["--json", "spectral", str(tmp_path / "missing.json")])
    assert result.exit_code == 2
    payload = _json(result)
    assert payload["status"] == 2
    assert payload["error"]["type"] == "InputError"
    assert "cannot read" in payload["error"]["message"]


def test_parse_error_reports_position(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"curve": "x^5 + y^5 + q"}), encoding="utf-8")
    result = runner.invoke(app, ["--json", "spectral", str(path)])
    assert result.exit_code == 2
    assert "column" in _json(result)["error"]["message"]


def test_spectral_on_nest_document(tmp_path):
    path = tmp_path / "nest.json"
    made = runner.invoke(app, ["examples", "nest-theta", "-p", "epsilon=1/100", "-o", str(path)])
    assert made.exit_code == 0, made.output
    assert path.exists()

    result = runner.invoke(app, ["--json", "spectral", str(path)])
    assert result.exit_code == 0, result.output
    report = _json(result)
    assert report["topology"]["class_code"] == "J⊔1⟨1⟩"
    assert report["atlas"]["status"] == "Pass"
    assert report["run_id"].startswith("run_")


def test_topology_from_poly():
    result = runner.invoke(app, ["--json", "topology", "--poly", "x^5 + y^5 + z^5"])
    assert result.exit_code == 0, result.output
    assert _json(result)["class_code"] == "J"


def test_topology_needs_exactly_one_source():
    result = runner.invoke(app, ["--json", "topology"])
    assert result.exit_code == 2


def test_corpus_reports_each_document(tmp_path):
    docs = tmp_path / "docs"
    docs.mkdir()
    (docs / "fermat.json").write_text(json.dumps({"curve": "x^5 + y^5 + z^5"}), encoding="utf-8")
    (docs / "broken.json").write_text("{", encoding="utf-8")
    result = runner.invoke(app, ["--json", "corpus", str(docs)])
    assert result.exit_code == 2
    entries = {Path(e["source"]).name: e for e in _json(result)}
    assert entries["fermat.json"]["exit_code"] == 0
    assert entries["broken.json"]["exit_code"] == 2


def test_corpus_failure_outranks_violation(tmp_path, monkeypatch):
    entries = [
        CorpusEntry(source="a.json", status="Violation"),
        CorpusEntry(source="b.json", status="Error", exit_code=3, error={"code": "StageError"}),
        CorpusEntry(source="c.json", status="Error", exit_code=2, error={"code": "InputError"}),
    ]
    monkeypatch.setattr("spectral_cubics.cli.run_corpus", lambda directory, settings: entries)
    result = runner.invoke(app, ["--json", "corpus", str(tmp_path)])
    assert result.exit_code == 3
    assert [e["status"] for e in _json(result)] == ["Violation", "Error", "Error"]

    entries.pop(1)
    assert runner.invoke(app, ["--json", "corpus", str(tmp_path)]).exit_code == 4
    entries.pop(0)
    assert runner.invoke(app, ["--json", "corpus", str(tmp_path)]).exit_code == 2


def test_config_set_and_show(quiet_home):
    result = runner.invoke(app, ["config", "set", "grid_size", "64"])
    assert result.exit_code == 0, result.output
    assert (quiet_home / "config.json").exists()

    shown = runner.invoke(app, ["--json", "--chart", "2", "config", "show"])
    assert shown.exit_code == 0, shown.output
    settings = _json(shown)
    assert settings["grid_size"] == 64
    assert settings["shear_schedule"] == [2]


def test_config_set_rejects_unknown_key():
    result = runner.invoke(app, ["--json", "config", "set", "colour", "red"])
    assert result.exit_code == 2
    assert _json(result)["error"]["details"]["known"].startswith("shear_schedule")
