"""Settings layering tests 分层设置测试"""

import json

import pytest

from spectral_cubics.models.config import DEFAULT_SHEAR_SCHEDULE, AnalysisSettings
from spectral_cubics.utils.config import get_config_path, load_settings, save_settings


@pytest.fixture(autouse=True)
def home(tmp_path, monkeypatch):
    monkeypatch.setenv("SPECTRAL_CUBICS_HOME", str(tmp_path))
    for key in ("SHEAR_SCHEDULE", "REFINE_BUDGET", "SEED", "WORKERS", "FUZZ_CASES"):
        monkeypatch.delenv(f"SPECTRAL_CUBICS_{key}", raising=False)
    return tmp_path


def test_defaults_without_file():
    settings = load_settings()
    assert settings.shear_schedule == DEFAULT_SHEAR_SCHEDULE
    assert settings.grid_size == 120
    assert settings.epsilon_start == "1/10"


def test_save_writes_under_home(home):
    path = save_settings(AnalysisSettings(refine_budget=80))
    assert path == home / "config.json" == get_config_path()
    assert json.loads(path.read_text(encoding="utf-8"))["refine_budget"] == 80
    assert load_settings().refine_budget == 80


def test_env_beats_file_and_flags_beat_env(monkeypatch):
    save_settings(AnalysisSettings(seed=1, workers=2))
    monkeypatch.setenv("SPECTRAL_CUBICS_SEED", "5")
    monkeypatch.setenv("SPECTRAL_CUBICS_SHEAR_SCHEDULE", "3, -3")
    settings = load_settings({"seed": 9, "refine_budget": None})
    assert settings.seed == 9
    assert settings.workers == 2
    assert settings.shear_schedule == [3, -3]
    assert settings.refine_budget == 60


def test_malformed_env_values_are_ignored(monkeypatch):
    monkeypatch.setenv("SPECTRAL_CUBICS_WORKERS", "many")
    monkeypatch.setenv("SPECTRAL_CUBICS_SHEAR_SCHEDULE", "1,a")
    settings = load_settings()
    assert settings.workers == 1
    assert settings.shear_schedule == DEFAULT_SHEAR_SCHEDULE


def test_invalid_file_is_ignored(home):
    (home / "config.json").write_text(json.dumps({"grid_size": 2}), encoding="utf-8")
    assert load_settings().grid_size == 120
    (home / "config.json").write_text("{not json", encoding="utf-8")
    assert load_settings().grid_size == 120


def test_empty_shear_schedule_is_rejected():
    with pytest.raises(ValueError):
        AnalysisSettings(shear_schedule=[])
