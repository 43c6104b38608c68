"""Data models package 数据模型包

Export the document, settings and report models
导出文档、设置与报告模型
"""

from .config import AnalysisSettings
from .documents import (
    SURFACE_VARIABLES,
    THREEFOLD_VARIABLES,
    CubicDocument,
    CurveDocument,
    SurfaceDocument,
    parse_rational,
)
from .reports import (
    AnalysisReport,
    AtlasCheckReport,
    AtlasSummary,
    ContactSummary,
    CorpusEntry,
    FactorEntry,
    Gf2SuiteReport,
    LineDiagnostics,
    OvalSummary,
    RegionSummary,
    SectionReport,
    SpectralSummary,
    SurfaceReport,
    TopologySummary,
)

__all__ = [
    # Config
    "AnalysisSettings",
    # Documents
    "SURFACE_VARIABLES",
    "THREEFOLD_VARIABLES",
    "CubicDocument",
    "CurveDocument",
    "SurfaceDocument",
    "parse_rational",
    # Reports
    "AnalysisReport",
    "AtlasCheckReport",
    "AtlasSummary",
    "ContactSummary",
    "CorpusEntry",
    "FactorEntry",
    "Gf2SuiteReport",
    "LineDiagnostics",
    "OvalSummary",
    "RegionSummary",
    "SectionReport",
    "SpectralSummary",
    "SurfaceReport",
    "TopologySummary",
]
