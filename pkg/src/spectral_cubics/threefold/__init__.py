"""Cubic threefolds with a marked line 带标记直线的三次三维簇

Canonical form, spectral pair, line diagnostics and nodal data
标准形、谱对、直线诊断与节点数据
"""

from .spectral import (
    PLANE_VARS,
    THREEFOLD_VARS,
    LineSmoothness,
    LineType,
    ResidualConic,
    MarkedCubic,
    SpectralPair,
    ThetaFiber,
    canonical_frame,
    canonicalize,
    split_entries,
    spectral_pair,
    theta_rank,
    line_smoothness,
    line_type,
    residual_conic_status,
    theta_parametrization_degenerate,
    theta_point,
    from_document,
    to_document,
    plane_line_frame,
    restrict_to_plane_line,
)
from .nodal import (
    LOCAL_VARS,
    NodalData,
    ProjectionReport,
    QuadrocubicSingularities,
    quadrocubic,
    project_quadrocubic,
    segre_map,
    segre_quadrocubic,
    quadrocubic_singular_points,
)

__all__ = [
    # Marked cubics
    "PLANE_VARS",
    "THREEFOLD_VARS",
    "LineSmoothness",
    "LineType",
    "ResidualConic",
    "MarkedCubic",
    "SpectralPair",
    "ThetaFiber",
    "canonical_frame",
    "canonicalize",
    "split_entries",
    "spectral_pair",
    "theta_rank",
    "line_smoothness",
    "line_type",
    "residual_conic_status",
    "theta_parametrization_degenerate",
    "theta_point",
    "from_document",
    "to_document",
    "plane_line_frame",
    "restrict_to_plane_line",
    # Nodes
    "LOCAL_VARS",
    "NodalData",
    "ProjectionReport",
    "QuadrocubicSingularities",
    "quadrocubic",
    "project_quadrocubic",
    "segre_map",
    "segre_quadrocubic",
    "quadrocubic_singular_points",
]
