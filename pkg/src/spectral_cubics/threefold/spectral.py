"""Spectral pair of a marked cubic threefold 带标记直线三次三维簇的谱对

Canonical form along the marked line, fundamental matrix, spectral quintic and theta-conic,
and the diagnostics that read the line's behaviour off the entry polynomials.
沿标记直线的标准形、基本矩阵、谱五次曲线与 theta 二次曲线，以及由分量多项式读出的直线诊断。
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import TYPE_CHECKING, Optional, Sequence

from ..algebra import (
    RatPoly,
    complete_basis,
    det3,
    gram_matrix,
    nullspace,
    parse_poly,
    pullback,
    rank,
    signature,
    determinant,
)
from ..errors import DegenerateSpan, InputError, LineNotOnCubic
from ..models.documents import THREEFOLD_VARIABLES, CubicDocument
from ..utils.logger import logger

if TYPE_CHECKING:
    from ..surfaces.marked import MarkedSurface

PLANE_VARS = ("x", "y", "z")
THREEFOLD_VARS = tuple(THREEFOLD_VARIABLES)
LINE_VARS = ("u", "v")

Point = Sequence[Fraction]


class LineSmoothness(str, Enum):
    """Behaviour of X along the marked line 沿标记直线的光滑性"""

    SMOOTH = "SmoothAlongLine"
    SINGULAR = "SingularOnLine"


class LineType(str, Enum):
    """Simple or multiple line 单直线或重直线"""

    SIMPLE = "Simple"
    MULTIPLE = "Multiple"


class ResidualConic(str, Enum):
    """Real part of the residual conic in a plane through the line 残余二次曲线的实部"""

    REAL_CIRCLE = "RealCircle"
    EMPTY = "Empty"
    SINGULAR_FIBER = "SingularFiber"


@dataclass(frozen=True)
class MarkedCubic:
    """Cubic threefold u²L11 + 2uvL12 + v²L22 + 2uQ1 + 2vQ2 + C with the line x = y = z = 0
    标记直线为 x = y = z = 0 的三次三维簇

    Attributes:
        L11, L12, L22: Linear forms in (x, y, z) 线性型
        Q1, Q2: Quadratic forms 二次型
        C: Cubic form 三次型
    """

    L11: RatPoly
    L12: RatPoly
    L22: RatPoly
    Q1: RatPoly
    Q2: RatPoly
    C: RatPoly

    def __post_init__(self) -> None:
        for name, degree in (("L11", 1), ("L12", 1), ("L22", 1), ("Q1", 2), ("Q2", 2), ("C", 3)):
            entry: RatPoly = getattr(self, name)
            if entry.variables != PLANE_VARS:
                raise InputError(f"{name} must be a polynomial in x, y, z", entry=name)
            if not entry.is_homogeneous(degree):
                raise InputError(f"{name} must be homogeneous of degree {degree}", entry=name)

    @classmethod
    def from_texts(cls, L11: str, L12: str, L22: str, Q1: str, Q2: str, C: str) -> "MarkedCubic":
        """Build from six polynomial texts in x, y, z 由六个多项式文本构造"""
        return cls(*(parse_poly(t, PLANE_VARS) for t in (L11, L12, L22, Q1, Q2, C)))

    def fundamental_matrix(self) -> list[list[RatPoly]]:
        """Symmetric matrix whose quadratic form in (u, v, 1) is the equation 对称基本矩阵"""
        return [
            [self.L11, self.L12, self.Q1],
            [self.L12, self.L22, self.Q2],
            [self.Q1, self.Q2, self.C],
        ]

    def matrix_at(self, s: Point) -> list[list[Fraction]]:
        """Fundamental matrix evaluated at a point of P² 在 P² 点处求值"""
        return [[entry.evaluate(s) for entry in row] for row in self.fundamental_matrix()]

    def equation(self) -> RatPoly:
        """The cubic form in (x, y, z, u, v) 五元三次型"""
        L11, L12, L22, Q1, Q2, C = (
            e.with_variables(THREEFOLD_VARS)
            for e in (self.L11, self.L12, self.L22, self.Q1, self.Q2, self.C)
        )
        u = RatPoly.var("u", THREEFOLD_VARS)
        v = RatPoly.var("v", THREEFOLD_VARS)
        return u * u * L11 + 2 * u * v * L12 + v * v * L22 + 2 * u * Q1 + 2 * v * Q2 + C


@dataclass(frozen=True)
class SpectralPair:
    """Spectral quintic and theta-conic 谱五次曲线与 theta 二次曲线

    Attributes:
        quintic: det of the fundamental matrix 基本矩阵行列式
        theta: L11·L22 − L12² theta 二次曲线
        quintic_vanishes: quintic ≡ 0 五次式恒零
        theta_vanishes: theta ≡ 0 二次式恒零
    """

    quintic: RatPoly
    theta: RatPoly
    quintic_vanishes: bool
    theta_vanishes: bool


@dataclass(frozen=True)
class ThetaFiber:
    """Binary quadric of the line at a point s of the plane 平面点 s 处直线上的二元二次型

    Attributes:
        quadric: L11(s)u² + 2L12(s)uv + L22(s)v² 二元二次型
        degenerate: s lies on the theta-conic s 在 theta 二次曲线上
        tangency: The double root (u : v) when degenerate and not identically zero 重根
    """

    quadric: RatPoly
    degenerate: bool
    tangency: Optional[tuple[Fraction, Fraction]]


def linear_coefficients(form: RatPoly) -> list[Fraction]:
    """Coefficients of a linear form in x, y, z 线性型系数"""
    return [form.coefficient(m) for m in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]


# ─── canonical form ───


def canonical_frame(line: Sequence[Point]) -> list[list[Fraction]]:
    """Coordinate change sending the line to x = y = z = 0 将直线送到 x = y = z = 0 的坐标变换

    The returned frame T has the two points as its last columns; new coordinates Y map to T·Y.
    返回的标架 T 以两点为最后两列；新坐标 Y 对应旧点 T·Y。

    Raises:
        DegenerateSpan: if the points coincide projectively 两点射影重合
    """
    if len(line) != 2:
        raise DegenerateSpan("a line needs exactly two points")
    points = [[Fraction(c) for c in p] for p in line]
    if rank(points) < 2:
        raise DegenerateSpan("the two points do not span a line", points=points)
    return complete_basis(points)


def canonicalize(cubic: RatPoly, line: Sequence[Point]) -> MarkedCubic:
    """Canonical form of a cubic threefold along a line on it 沿直线的标准形

    Args:
        cubic: Homogeneous cubic in five variables 五元齐次三次型
        line: Two points with rational coordinates 两个有理点

    Returns:
        MarkedCubic in coordinates where the line is x = y = z = 0 标准坐标下的 MarkedCubic

    Raises:
        LineNotOnCubic: the cubic does not vanish on the line 三次型在直线上不为零
        DegenerateSpan: the points coincide projectively 两点重合
    """
    if len(cubic.variables) != 5 or not cubic.is_homogeneous(3) or cubic.is_zero:
        raise InputError("cubic must be a nonzero homogeneous cubic in five variables")
    frame = canonical_frame(line)
    moved = pullback(cubic, frame).rename(THREEFOLD_VARS)
    logger.debug("Canonical frame chosen", {"frame": [[str(c) for c in row] for row in frame]})

    return MarkedCubic(*split_entries(moved, PLANE_VARS))


def split_entries(moved: RatPoly, base: Sequence[str]) -> list[RatPoly]:
    """L11, L12, L22, Q1, Q2, C of a cubic whose marked line spans the last two coordinates
    按最后两个坐标的次数拆分三次型，得到六个分量

    Raises:
        LineNotOnCubic: a monomial of degree 3 in the line coordinates survives 三次型在直线上不为零
    """
    buckets: dict[tuple[int, int], dict[tuple[int, ...], Fraction]] = {}
    for monom, coeff in moved.terms().items():
        key = (monom[-2], monom[-1])
        if sum(key) >= 3:
            raise LineNotOnCubic(
                "the cubic does not vanish identically on the line",
                monomial=monom,
            )
        buckets.setdefault(key, {})[monom[:-2]] = coeff

    def entry(key: tuple[int, int], factor: int) -> RatPoly:
        terms = {m: c / factor for m, c in buckets.get(key, {}).items()}
        return RatPoly.from_dict(terms, base)

    return [
        entry((2, 0), 1),
        entry((1, 1), 2),
        entry((0, 2), 1),
        entry((1, 0), 2),
        entry((0, 1), 2),
        entry((0, 0), 1),
    ]


# ─── spectral pair and diagnostics ───


def spectral_pair(mc: MarkedCubic) -> SpectralPair:
    """Spectral quintic det(M) and theta-conic L11·L22 − L12² 谱五次曲线与 theta 二次曲线"""
    quintic = det3(mc.fundamental_matrix())
    theta = mc.L11 * mc.L22 - mc.L12 * mc.L12
    return SpectralPair(
        quintic=quintic,
        theta=theta,
        quintic_vanishes=quintic.is_zero,
        theta_vanishes=theta.is_zero,
    )


def theta_rank(mc: MarkedCubic) -> int:
    """Rank of the theta-conic's Gram matrix theta 二次曲线的秩"""
    theta = mc.L11 * mc.L22 - mc.L12 * mc.L12
    if theta.is_zero:
        return 0
    return rank(gram_matrix(theta))


def line_smoothness(mc: MarkedCubic) -> LineSmoothness:
    """X is smooth along the line iff theta is neither zero nor a square
    X 沿直线光滑当且仅当 theta 既非零也非平方
    """
    if theta_rank(mc) >= 2:
        return LineSmoothness.SMOOTH
    return LineSmoothness.SINGULAR


def line_type(mc: MarkedCubic) -> LineType:
    """Multiple iff L11, L12, L22 are linearly dependent 重直线当且仅当三个线性型线性相关"""
    rows = [linear_coefficients(e) for e in (mc.L11, mc.L12, mc.L22)]
    return LineType.MULTIPLE if rank(rows) <= 2 else LineType.SIMPLE


def residual_conic_status(mc: MarkedCubic, s: Point) -> ResidualConic:
    """Real residual conic in the plane through the line over s 平面 s 中的残余二次曲线"""
    m = mc.matrix_at(s)
    if determinant(m) == 0:
        return ResidualConic.SINGULAR_FIBER
    p, q = signature(m)
    if p == 0 or q == 0:
        return ResidualConic.EMPTY
    return ResidualConic.REAL_CIRCLE


def theta_parametrization_degenerate(mc: MarkedCubic, s: Point) -> ThetaFiber:
    """Degeneracy test of the line's binary quadric at s 直线二元二次型在 s 处的退化检验

    The quadric L11(s)u² + 2L12(s)uv + L22(s)v² is degenerate exactly when s lies on theta;
    its double root is the point of the line that parametrizes s.
    该二次型退化当且仅当 s 在 theta 上；其重根即参数化 s 的直线上的点。
    """
    a, b, c = (e.evaluate(s) for e in (mc.L11, mc.L12, mc.L22))
    u = RatPoly.var("u", LINE_VARS)
    v = RatPoly.var("v", LINE_VARS)
    quadric = (u * u).scale(a) + (u * v).scale(2 * b) + (v * v).scale(c)
    degenerate = b * b - a * c == 0
    tangency: Optional[tuple[Fraction, Fraction]] = None
    if degenerate and not quadric.is_zero:
        # a·u + b·v = 0 (or b·u + c·v = 0) cuts out the double root 重根
        tangency = (-b, a) if (a, b) != (0, 0) else (-c, b)
    return ThetaFiber(quadric=quadric, degenerate=degenerate, tangency=tangency)


def theta_point(mc: MarkedCubic, p: tuple[Fraction, Fraction]) -> list[Fraction]:
    """Point of theta parametrized by (u : v) on the line (simple lines only)
    由直线上点 (u : v) 参数化的 theta 上的点（仅限单直线）

    Solves L11(s) = v², L12(s) = −uv, L22(s) = u².
    """
    if line_type(mc) is LineType.MULTIPLE:
        raise InputError("theta is parametrized by the line only for a simple line")
    u, v = (Fraction(c) for c in p)
    if u == 0 and v == 0:
        raise DegenerateSpan("(0 : 0) is not a point of the line")
    rows = []
    for form, target in ((mc.L11, v * v), (mc.L12, -u * v), (mc.L22, u * u)):
        rows.append(linear_coefficients(form) + [-target])
    kernel = nullspace(rows)
    vector = kernel[0]
    scale = vector[3]
    return [vector[i] / scale for i in range(3)]


# ─── documents ───


def from_document(doc: CubicDocument) -> MarkedCubic:
    """Parse and canonicalize a cubic document 解析并标准化文档"""
    cubic = parse_poly(doc.cubic, doc.variables).rename(THREEFOLD_VARS)
    return canonicalize(cubic, doc.points())


def to_document(mc: MarkedCubic) -> CubicDocument:
    """Cubic document in canonical coordinates 标准坐标下的文档"""
    return CubicDocument(
        variables=list(THREEFOLD_VARS),
        cubic=str(mc.equation()),
        line=[[0, 0, 0, 1, 0], [0, 0, 0, 0, 1]],
    )


# ─── hyperplane sections through the line ───


def plane_line_frame(m: Sequence[Fraction]) -> list[list[Fraction]]:
    """Two points of P² spanning the line a·x + b·y + c·z = 0 张成平面直线的两点"""
    coeffs = [Fraction(c) for c in m]
    if len(coeffs) != 3 or all(c == 0 for c in coeffs):
        raise InputError("a line of P² needs three coefficients, not all zero")
    basis = nullspace([coeffs])
    return [list(vec) for vec in basis]


def restrict_to_plane_line(mc: MarkedCubic, m: Sequence[Fraction]) -> "MarkedSurface":
    """Cubic surface cut by the hyperplane through the marked line over m
    过标记直线、位于 m 之上的超平面截出的三次曲面

    The section's entries are the restrictions of the six entries to m, written as binary forms
    in (x, y) through the parametrization s·P + t·R of m. Its spectrum is S ∩ m.
    截面的分量是六个分量在 m 上的限制，以 m 的参数化写成 (x, y) 的二元型。其谱为 S ∩ m。
    """
    from ..surfaces.marked import BINARY_VARS, MarkedSurface

    P, R = plane_line_frame(m)
    s = RatPoly.var(BINARY_VARS[0], BINARY_VARS)
    t = RatPoly.var(BINARY_VARS[1], BINARY_VARS)
    images = {name: s.scale(P[i]) + t.scale(R[i]) for i, name in enumerate(PLANE_VARS)}
    restricted = [
        e.substitute(images, BINARY_VARS)
        for e in (mc.L11, mc.L12, mc.L22, mc.Q1, mc.Q2, mc.C)
    ]
    return MarkedSurface(*restricted)
