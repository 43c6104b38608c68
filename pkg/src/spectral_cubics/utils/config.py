"""Configuration management 配置管理

Layered settings: defaults, ~/.spectral-cubics/config.json, environment, CLI flags
分层设置：默认值、配置文件、环境变量、命令行参数
"""

import json
import os
from pathlib import Path
from typing import Any, Optional

from dotenv import load_dotenv
from pydantic import ValidationError

from ..models.config import AnalysisSettings
from .file_storage import ensure_dir_exists, get_base_dir
from .logger import logger

_ENV_PREFIX = "SPECTRAL_CUBICS_"


def get_config_path() -> Path:
    """Get the settings file path 获取设置文件路径"""
    return get_base_dir() / "config.json"


def load_file_settings() -> dict[str, Any]:
    """Settings stored in the config file, {} when absent or invalid 配置文件中的设置"""
    path = get_config_path()
    if not path.exists():
        return {}
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
        # Validate early so a broken file is reported once 提前校验
        AnalysisSettings(**data)
        return data
    except (OSError, json.JSONDecodeError, ValidationError, TypeError) as e:
        logger.warn("Ignoring invalid settings file", {"path": str(path), "error": str(e)})
        return {}


def _load_env() -> dict[str, Any]:
    """Read SPECTRAL_CUBICS_* variables 读取环境变量"""
    load_dotenv(override=False)
    values: dict[str, Any] = {}

    shears = os.getenv(f"{_ENV_PREFIX}SHEAR_SCHEDULE")
    if shears:
        try:
            values["shear_schedule"] = [int(k) for k in shears.split(",") if k.strip()]
        except ValueError:
            logger.warn("Ignoring malformed shear schedule", {"value": shears})

    for key in ("refine_budget", "seed", "workers", "fuzz_cases"):
        raw = os.getenv(f"{_ENV_PREFIX}{key.upper()}")
        if raw is None:
            continue
        try:
            values[key] = int(raw)
        except ValueError:
            logger.warn("Ignoring malformed integer setting", {"key": key, "value": raw})
    return values


def load_settings(overrides: Optional[dict[str, Any]] = None) -> AnalysisSettings:
    """Load layered analysis settings 加载分层分析设置

    Args:
        overrides: CLI flag values; None entries are skipped 命令行参数，None 跳过

    Returns:
        Analysis settings 分析设置
    """
    merged: dict[str, Any] = {}
    merged.update(load_file_settings())
    merged.update(_load_env())
    if overrides:
        merged.update({k: v for k, v in overrides.items() if v is not None})
    return AnalysisSettings(**merged)


def save_settings(settings: AnalysisSettings) -> Path:
    """Save settings to the config file 保存设置到配置文件

    Returns:
        Path written 写入路径
    """
    path = get_config_path()
    ensure_dir_exists(path.parent)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(settings.model_dump(), f, indent=2, ensure_ascii=False)
    return path
