"""Real plane curve topology 实平面曲线拓扑

Singular points, certified sweep topology with class codes, and the quintic/conic mutual
position tests
奇点、带类代码的认证扫描拓扑，以及五次曲线与二次曲线的相互位置检验
"""

from .chart import Chart, chart_candidates
from .singular import LocalType, SingularLocus, SingularPoint, field_gcd, singular_locus
from .sweep import OnCurve, Sweep, SweepComponent
from .curve import (
    FOUR_I,
    FOUR_II,
    NEST,
    QUINTIC_CLASSES,
    ArcPoint,
    CurveTopology,
    Oval,
    class_code,
    four_oval_type,
    topology,
)
from .contact import (
    ContactReport,
    LinePrediction,
    RegionReport,
    TangencyPoint,
    ThetaRealType,
    Verdict,
    conic_point,
    contact_check,
    intersection_multiplicities,
    line_intersection_type,
    region_report,
    skew_test,
    theta_real_type,
)

__all__ = [
    # Charts
    "Chart",
    "chart_candidates",
    # Singular points
    "LocalType",
    "SingularLocus",
    "SingularPoint",
    "field_gcd",
    "singular_locus",
    # Sweep and topology
    "OnCurve",
    "Sweep",
    "SweepComponent",
    "FOUR_I",
    "FOUR_II",
    "NEST",
    "QUINTIC_CLASSES",
    "ArcPoint",
    "CurveTopology",
    "Oval",
    "class_code",
    "four_oval_type",
    "topology",
    # Quintic and conic
    "ContactReport",
    "LinePrediction",
    "RegionReport",
    "TangencyPoint",
    "ThetaRealType",
    "Verdict",
    "conic_point",
    "contact_check",
    "intersection_multiplicities",
    "line_intersection_type",
    "region_report",
    "skew_test",
    "theta_real_type",
]
