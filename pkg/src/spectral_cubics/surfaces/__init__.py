"""Lines on real cubic surfaces 实三次曲面上的直线

Spectrum of a marked surface, binary codes, real line censuses, hyperbolic and elliptic lines,
merging under nodal degenerations and the 3+2 bipartition of five points
带标记曲面的谱、二进制码、实直线统计、双曲与椭圆直线、节点退化下的合并以及五点的 3+2 二分
"""

from .marked import (
    BINARY_VARS,
    SURFACE_VARS,
    MarkedSurface,
    Remarking,
    canonicalize_surface,
    remark,
    surface_from_document,
    surface_to_document,
)
from .spectrum import SpectralPoint, SpectralTag, Spectrum, residual_lines, spectrum
from .codes import (
    LineCensus,
    LineCode,
    LineCodes,
    SurfaceLine,
    binary_codes,
    census_from_codes,
    expected_real_lines,
    informative_positions,
    lines_on_surface,
    real_line_census,
)
from .line_type import LineKind, involution_discriminant, line_type
from .merging import MergeCase, MergePattern, complex_merging, real_merging, real_merging_case
from .segre import SegreBipartition, orientation, segre_bipartition

__all__ = [
    # Marked surfaces
    "BINARY_VARS",
    "SURFACE_VARS",
    "MarkedSurface",
    "Remarking",
    "canonicalize_surface",
    "remark",
    "surface_from_document",
    "surface_to_document",
    # Spectrum
    "SpectralPoint",
    "SpectralTag",
    "Spectrum",
    "residual_lines",
    "spectrum",
    # Codes and censuses
    "LineCensus",
    "LineCode",
    "LineCodes",
    "SurfaceLine",
    "binary_codes",
    "census_from_codes",
    "expected_real_lines",
    "informative_positions",
    "lines_on_surface",
    "real_line_census",
    # Line types and merging
    "LineKind",
    "involution_discriminant",
    "line_type",
    "MergeCase",
    "MergePattern",
    "complex_merging",
    "real_merging",
    "real_merging_case",
    # Point configurations
    "SegreBipartition",
    "orientation",
    "segre_bipartition",
]
