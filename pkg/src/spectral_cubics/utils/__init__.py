"""Utilities package 工具包

Export all utility functions
导出所有工具函数
"""

from .file_storage import (
    get_today_date_string,
    ensure_dir_exists,
    get_base_dir,
    append_json_line,
)
from .logger import logger, LogLevel, RunLogger
from .config import get_config_path, load_file_settings, load_settings, save_settings
from .error_log import get_error_log_dir, record_error
from .metadata import CURRENT_VERSION, run_metadata
from .validation import (
    DOCUMENT_KINDS,
    ValidationError,
    ValidationResult,
    document_kind,
    format_validation_errors,
    validate_document,
)

__all__ = [
    # File storage
    "get_today_date_string",
    "ensure_dir_exists",
    "get_base_dir",
    "append_json_line",
    # Logger
    "logger",
    "LogLevel",
    "RunLogger",
    # Config
    "get_config_path",
    "load_file_settings",
    "load_settings",
    "save_settings",
    # Error log
    "get_error_log_dir",
    "record_error",
    # Metadata
    "CURRENT_VERSION",
    "run_metadata",
    # Validation
    "DOCUMENT_KINDS",
    "ValidationError",
    "ValidationResult",
    "document_kind",
    "format_validation_errors",
    "validate_document",
]
