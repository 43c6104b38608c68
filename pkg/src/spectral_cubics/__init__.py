"""Spectral Cubics

Exact spectral correspondence for real cubic threefolds with a marked line
带标记直线的实三次三维簇的精确谱对应

A marked cubic threefold (X, l) gives a plane quintic S and a conic Θ touching it. This package
computes both exactly, classifies the real topology of S, decides how Θ sits against it and
checks the outcome against the deformation atlas of real cubic threefolds.
标记三次三维簇 (X, l) 给出平面五次曲线 S 与其相切的二次曲线 Θ。本包精确计算二者，分类 S 的实拓扑，
判断 Θ 与 S 的相对位置，并与实三次三维簇的形变图集核对。
"""

from .errors import (
    EXIT_ATLAS,
    EXIT_COMPUTATION,
    EXIT_INPUT,
    EXIT_OK,
    AtlasViolation,
    ComputationFailure,
    InputError,
    SpectralCubicsError,
    StageError,
)
from .models.config import AnalysisSettings
from .models.documents import CubicDocument, CurveDocument, SurfaceDocument
from .pipeline import analyze_document, build_example, section_count, surface_report
from .utils.config import load_settings, save_settings
from .utils.metadata import CURRENT_VERSION

__version__ = CURRENT_VERSION

__all__ = [
    "__version__",
    # Errors
    "EXIT_ATLAS",
    "EXIT_COMPUTATION",
    "EXIT_INPUT",
    "EXIT_OK",
    "AtlasViolation",
    "ComputationFailure",
    "InputError",
    "SpectralCubicsError",
    "StageError",
    # Documents and settings
    "AnalysisSettings",
    "CubicDocument",
    "CurveDocument",
    "SurfaceDocument",
    "load_settings",
    "save_settings",
    # Pipeline
    "analyze_document",
    "build_example",
    "section_count",
    "surface_report",
]
