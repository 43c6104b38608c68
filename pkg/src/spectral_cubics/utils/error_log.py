"""Error logging 错误日志

Record unexpected failures as daily JSON lines
将意外失败记录为每日 JSON 行
"""

from datetime import datetime
from pathlib import Path
from typing import Any, Optional

from .file_storage import append_json_line, get_base_dir, get_today_date_string


def get_error_log_dir() -> Path:
    """Error log directory 错误日志目录"""
    return get_base_dir() / "error_logs"


def record_error(
    error: Exception,
    run_id: str,
    stage: Optional[str] = None,
    source: Optional[str] = None,
) -> None:
    """Record error details 记录错误详情

    Input errors (exit code 2) are the user's to fix and are not recorded.
    输入错误（退出码 2）由用户修正，不记录。

    Args:
        error: Exception 异常
        run_id: Run ID 运行 ID
        stage: Pipeline stage that failed 失败的流水线阶段
        source: Input document path or example name 输入文档路径或示例名称
    """
    if getattr(error, "exit_code", None) == 2:
        return

    error_dict: dict[str, Any] = {
        "type": type(error).__name__,
        "message": str(error),
    }
    code = getattr(error, "code", None)
    if code:
        error_dict["code"] = code

    record = {
        "timestamp": datetime.now().isoformat(),
        "run_id": run_id,
        "stage": stage,
        "source": source,
        "error": error_dict,
    }
    log_file = get_error_log_dir() / f"errors-{get_today_date_string()}.jsonl"
    append_json_line(log_file, record)
