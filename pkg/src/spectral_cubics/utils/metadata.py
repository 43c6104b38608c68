"""Metadata 元数据

Version and environment stamp embedded in every report
嵌入每份报告中的版本与环境信息
"""

import platform
import sys

import sympy

# Version - should match pyproject.toml 版本 - 应与 pyproject.toml 匹配
CURRENT_VERSION = "1.0.0"


def run_metadata() -> dict[str, str]:
    """Describe the running toolchain 描述当前运行环境

    Returns:
        Version stamp 版本信息
    """
    return {
        "spectral_cubics": CURRENT_VERSION,
        "sympy": sympy.__version__,
        "python": sys.version.split()[0],
        "platform": platform.system(),
    }
