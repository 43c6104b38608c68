"""Hyperplane section count 超平面截面计数

The hyperplane H_m through the marked line over a plane line m cuts X in a cubic surface Y_m;
its real lines disjoint from the marked line are counted exactly and compared with the sheet
formula read off S ∩ m.
过标记直线、位于平面直线 m 之上的超平面 H_m 截 X 得三次曲面 Y_m；精确统计其与标记直线不相交的
实直线，并与由 S ∩ m 读出的层数公式比较。
"""

import time
from fractions import Fraction
from typing import Optional, Sequence

from ..algebra import RatPoly
from ..errors import NonGenericLine, SectionSingular, SpectrumDegenerate
from ..models.config import AnalysisSettings
from ..models.reports import SectionReport
from ..surfaces import real_line_census, spectrum
from ..threefold import (
    PLANE_VARS,
    LineSmoothness,
    MarkedCubic,
    line_smoothness,
    restrict_to_plane_line,
    spectral_pair,
)
from ..topology import line_intersection_type, topology
from ..utils.logger import logger
from ..utils.metadata import run_metadata


def plane_line_form(m: Sequence[Fraction]) -> RatPoly:
    """a·x + b·y + c·z as a linear form 线性型"""
    coeffs = [Fraction(c) for c in m]
    if len(coeffs) != 3 or not any(coeffs):
        raise SectionSingular("a plane line needs three coefficients, not all zero")
    terms = {tuple(int(i == j) for j in range(3)): c for i, c in enumerate(coeffs)}
    return RatPoly.from_dict(terms, PLANE_VARS)


def section_count(
    mc: MarkedCubic,
    m: Sequence[Fraction],
    settings: Optional[AnalysisSettings] = None,
    run_id: str = "run_local",
) -> SectionReport:
    """Count the real lines of Y_m and compare with 2^((a+3)/2), or 0 when b > 0
    统计 Y_m 的实直线并与 2^((a+3)/2)（b > 0 时为 0）比较

    Args:
        mc: Marked cubic smooth along the line 沿直线光滑的标记三次型
        m: Coefficients (a, b, c) of the plane line 平面直线系数

    Raises:
        SectionSingular: m is tangent to S or Θ, or passes through S ∩ Θ 截面奇异
        CertificationFailure: the lines of Y_m could not be certified Y_m 的直线未能认证
    """
    settings = settings or AnalysisSettings()
    log = logger.with_run_id(run_id)
    started_at = time.perf_counter()
    form = plane_line_form(m)
    if line_smoothness(mc) is LineSmoothness.SINGULAR:
        raise SectionSingular("X is singular along the marked line")

    pair = spectral_pair(mc)
    topo = topology(pair.quintic, settings=settings, companions=(pair.theta,))
    try:
        prediction = line_intersection_type(pair.quintic, pair.theta, form, topo, None, settings)
    except NonGenericLine as e:
        raise SectionSingular(f"m is not transverse to S and Θ: {e}") from e

    surface = restrict_to_plane_line(mc, m)
    try:
        spectrum(surface)
    except SpectrumDegenerate as e:
        raise SectionSingular(f"section has a degenerate spectrum: {e}") from e
    census = real_line_census(surface)

    predicted = 0 if prediction.no_real_lines else prediction.sheets
    report = SectionReport(
        run_id=run_id,
        plane_line=[str(Fraction(c)) for c in m],
        outside=prediction.a,
        inside=prediction.b,
        predicted=predicted,
        counted=census.count,
        spectrum=census.counts,
        truncated_codes=census.truncated_codes,
        agrees=predicted == census.count,
        metadata=run_metadata(),
    )
    log.info(
        "Section counted",
        {
            "a": prediction.a,
            "b": prediction.b,
            "predicted": predicted,
            "counted": census.count,
            "ms": int((time.perf_counter() - started_at) * 1000),
        },
    )
    return report
