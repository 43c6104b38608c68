"""Singular points of plane curves 平面曲线的奇点

Solves f = ∂f/∂X = ∂f/∂Y = 0 in a generic affine chart by resultant elimination, then splits
each irreducible X-factor with a gcd over the residue field Q[X]/φ.
在一般仿射图中用结式消元求解，再对每个不可约因子在剩余域 Q[X]/φ 上求 gcd。
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import sympy
from sympy import Poly, QQ

from ..algebra import RatPoly, RootBox, isolate_real_roots, resultant, sign_at_root
from ..errors import CertificationFailure, DegenerateResultant, NotSquareFree
from ..models.config import AnalysisSettings
from ..utils.logger import logger
from .chart import AFFINE, Chart, chart_candidates

_X, _Y = sympy.symbols("X Y")


class LocalType(str, Enum):
    """Local type of a real singular point 实奇点的局部类型"""

    CROSS_NODE = "cross-node"
    SOLITARY_NODE = "solitary-node"
    CUSP = "cusp"
    OTHER = "other"


@dataclass(frozen=True)
class SingularPoint:
    """One singular point 单个奇点

    Attributes:
        real: Whether the point is real 是否为实点
        local_type: Morse type for real points, None for imaginary ones 实点的局部类型
        x_box: Isolating box of the chart X-coordinate (real points) 图坐标 X 的隔离区间
        approx: Floating chart coordinates for display 显示用的近似坐标
        field_degree: Degree of the X-coordinate over Q X 坐标在 Q 上的次数
    """

    real: bool
    local_type: Optional[LocalType]
    x_box: Optional[RootBox] = None
    approx: Optional[tuple[float, float]] = None
    field_degree: int = 1


@dataclass
class SingularLocus:
    """Result of singular_locus 奇点求解结果"""

    points: list[SingularPoint] = field(default_factory=list)
    chart: Optional[Chart] = None

    @property
    def smooth(self) -> bool:
        return not self.points

    @property
    def real_points(self) -> list[SingularPoint]:
        return [p for p in self.points if p.real]


# ─── arithmetic in K[Y], K = Q[X]/φ ───


def _strip(coeffs: list[Poly]) -> list[Poly]:
    i = 0
    while i < len(coeffs) and coeffs[i].is_zero:
        i += 1
    return coeffs[i:]


def _k_coeffs(p: RatPoly, phi: Poly) -> list[Poly]:
    """Coefficients in Y (leading first), reduced mod φ 关于 Y 的系数（模 φ）"""
    coeffs = Poly(p.as_expr(), _Y).all_coeffs()
    return _strip([Poly(c, _X, domain=QQ).rem(phi) for c in coeffs])


def _k_rem(a: list[Poly], b: list[Poly], phi: Poly) -> list[Poly]:
    a = list(a)
    inv = b[0].invert(phi)
    while a and len(a) >= len(b):
        q = (a[0] * inv).rem(phi)
        for i, bc in enumerate(b):
            a[i] = (a[i] - q * bc).rem(phi)
        a = _strip(a)
    return a


def field_gcd(polys: list[RatPoly], phi: Poly) -> list[Poly]:
    """Monic gcd in (Q[X]/φ)[Y] of bivariate polynomials 剩余域上的首一 gcd

    Args:
        polys: Polynomials over ("X", "Y") 双变量多项式
        phi: Irreducible polynomial in X 不可约多项式

    Returns:
        Coefficients leading first, an empty list for the zero polynomial 系数列表
    """
    current: list[Poly] = []
    for p in polys:
        b = _k_coeffs(p, phi)
        a = current
        while b:
            a, b = b, _k_rem(a, b, phi)
        current = a
    if not current:
        return []
    inv = current[0].invert(phi)
    return [(c * inv).rem(phi) for c in current]


# ─── chart choice ───


def _chart_is_clean(f: RatPoly, chart: Chart) -> bool:
    """No singular point at infinity and the vertical point off the curve
    无穷远处无奇点且竖直方向点不在曲线上
    """
    g = chart.homogeneous(f)
    if g.evaluate((0, 1, 0)) == 0:
        return False
    partials = [p.specialize({"W": 0}, AFFINE) for p in g.gradient()]
    common: Optional[RatPoly] = None
    for p in partials:
        if p.is_zero:
            continue
        common = p if common is None else common.gcd(p)
    return common is not None and common.is_constant()


def _eliminant(affine: RatPoly) -> RatPoly:
    fx, fy = affine.diff("X"), affine.diff("Y")
    pairs = [(affine, fy), (fx, fy), (affine, fx)]
    out: Optional[RatPoly] = None
    for p, q in pairs:
        if p.is_zero or q.is_zero:
            continue
        try:
            r = resultant(p, q, "Y")
        except DegenerateResultant:
            continue
        if r.is_zero:
            continue
        out = r if out is None else out.gcd(r)
    if out is None:
        raise CertificationFailure("no nonzero resultant in the singular-point system")
    return out


def _reduce(p: RatPoly, y0: Poly, phi: Poly) -> Poly:
    """p(X, y0(X)) mod φ 代入 Y = y0(X) 后模 φ"""
    expr = p.as_expr().xreplace({_Y: y0.as_expr()})
    return Poly(sympy.expand(expr), _X, domain=QQ).rem(phi)


def _classify(affine: RatPoly, phi: Poly, box: RootBox, y0: Poly) -> LocalType:
    fxx = _reduce(affine.diff("X").diff("X"), y0, phi)
    fxy = _reduce(affine.diff("X").diff("Y"), y0, phi)
    fyy = _reduce(affine.diff("Y").diff("Y"), y0, phi)
    hessian = (fxx * fyy - fxy * fxy).rem(phi)
    s = sign_at_root(phi, box, hessian)
    if s > 0:
        return LocalType.SOLITARY_NODE
    if s < 0:
        return LocalType.CROSS_NODE
    if any(sign_at_root(phi, box, h) != 0 for h in (fxx, fxy, fyy)):
        return LocalType.CUSP
    return LocalType.OTHER


def _solve(affine: RatPoly) -> Optional[list[SingularPoint]]:
    """Singular points in a chart, None when two share an X-coordinate
    图中的奇点；若两点 X 坐标相同则返回 None
    """
    eliminant = _eliminant(affine)
    if eliminant.is_constant():
        return []
    system = [affine, affine.diff("X"), affine.diff("Y")]
    points: list[SingularPoint] = []
    _, factors = eliminant.factor_list()
    for factor, _ in factors:
        phi = factor.univariate("X")
        if phi.degree() <= 0:
            continue
        g = field_gcd(system, phi)
        degree = len(g) - 1
        if degree <= 0:
            continue
        if degree >= 2:
            return None
        y0 = (-g[1]).rem(phi)
        boxes = isolate_real_roots(phi)
        for box in boxes:
            mid = sympy.Rational(box.midpoint.numerator, box.midpoint.denominator)
            y_approx = float(y0.eval(mid))
            points.append(
                SingularPoint(
                    real=True,
                    local_type=_classify(affine, phi, box, y0),
                    x_box=box,
                    approx=(box.approx(), y_approx),
                    field_degree=phi.degree(),
                )
            )
        for _ in range(phi.degree() - len(boxes)):
            points.append(SingularPoint(real=False, local_type=None, field_degree=phi.degree()))
    return points


def singular_locus(f: RatPoly, settings: Optional[AnalysisSettings] = None) -> SingularLocus:
    """Singular points of a ternary form 三元型的奇点

    Args:
        f: Homogeneous polynomial in three variables 三元齐次多项式
        settings: Chart and shear schedules 图与剪切计划

    Returns:
        SingularLocus, smooth when no point was found 奇点集合

    Raises:
        NotSquareFree: f has a repeated factor 有重复因子
        CertificationFailure: every chart in the schedule was degenerate 所有仿射图均退化
    """
    if not f.is_squarefree():
        raise NotSquareFree("curve has a repeated component", curve=str(f))
    if f.total_degree() <= 1:
        return SingularLocus(chart=Chart())
    for chart in chart_candidates(settings):
        if not _chart_is_clean(f, chart):
            continue
        points = _solve(chart.affine(f))
        if points is None:
            logger.debug("Singular points share a fiber, next shear", chart.describe())
            continue
        logger.debug("Singular locus solved", {**chart.describe(), "points": len(points)})
        return SingularLocus(points=points, chart=chart)
    raise CertificationFailure("no chart separates the singular points")
