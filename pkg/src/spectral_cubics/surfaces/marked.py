"""Cubic surfaces with a marked line 带标记直线的三次曲面

A cubic surface containing the line x = y = 0 of P³ is written u²L11 + 2uvL12 + v²L22 +
2uQ1 + 2vQ2 + C with binary forms in (x, y). The plane through the line over (s : t) meets the
surface in the line and a residual conic whose matrix in (u, v, w) is the fundamental matrix at
(s, t); its determinant, a binary quintic, is the spectrum form.
含直线 x = y = 0 的三次曲面写成二元型系数的形式；过该直线的平面 (s : t) 上残余二次曲线的矩阵
即基本矩阵在 (s, t) 处的值，其行列式为谱型（二元五次型）。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

import sympy

from ..algebra import RatPoly, det3, inverse, parse_poly, pullback, quadratic_form, to_sympy
from ..errors import InputError
from ..models.documents import SURFACE_VARIABLES, SurfaceDocument
from ..threefold.spectral import canonical_frame, split_entries
from ..utils.logger import logger

BINARY_VARS = ("x", "y")
SURFACE_VARS = tuple(SURFACE_VARIABLES)
CONIC_VARS = ("u", "v", "w")

Point = Sequence[Fraction]


@dataclass(frozen=True)
class MarkedSurface:
    """Cubic surface u²L11 + 2uvL12 + v²L22 + 2uQ1 + 2vQ2 + C with the line x = y = 0
    标记直线为 x = y = 0 的三次曲面

    Attributes:
        L11, L12, L22: Linear binary forms 一次二元型
        Q1, Q2: Quadratic binary forms 二次二元型
        C: Cubic binary form 三次二元型
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
            if entry.variables != BINARY_VARS:
                raise InputError(f"{name} must be a binary form in x, y", entry=name)
            if not entry.is_homogeneous(degree):
                raise InputError(f"{name} must be homogeneous of degree {degree}", entry=name)

    @classmethod
    def from_texts(cls, L11: str, L12: str, L22: str, Q1: str, Q2: str, C: str) -> "MarkedSurface":
        return cls(*(parse_poly(t, BINARY_VARS) for t in (L11, L12, L22, Q1, Q2, C)))

    def entries(self) -> list[RatPoly]:
        return [self.L11, self.L12, self.L22, self.Q1, self.Q2, self.C]

    def fundamental_matrix(self) -> list[list[RatPoly]]:
        return [
            [self.L11, self.L12, self.Q1],
            [self.L12, self.L22, self.Q2],
            [self.Q1, self.Q2, self.C],
        ]

    def matrix_at(self, s: Point) -> list[list[Fraction]]:
        """Residual conic matrix in the plane (s : t) 平面 (s : t) 上残余二次曲线的矩阵"""
        return [[entry.evaluate(s) for entry in row] for row in self.fundamental_matrix()]

    def residual_conic(self, s: Point) -> RatPoly:
        """Residual conic in the plane (s : t), in coordinates (u, v, w) 残余二次曲线"""
        return quadratic_form(self.matrix_at(s), CONIC_VARS)

    def spectrum_form(self) -> RatPoly:
        """Binary quintic det of the fundamental matrix 谱型"""
        return det3(self.fundamental_matrix())

    def theta(self) -> RatPoly:
        """L11·L22 − L12², the planes where the residual conic is tangent to the line
        残余二次曲线与标记直线相切的平面
        """
        return self.L11 * self.L22 - self.L12 * self.L12

    def equation(self) -> RatPoly:
        """The cubic form in (x, y, u, v) 四元三次型"""
        L11, L12, L22, Q1, Q2, C = (e.with_variables(SURFACE_VARS) for e in self.entries())
        u = RatPoly.var("u", SURFACE_VARS)
        v = RatPoly.var("v", SURFACE_VARS)
        return u * u * L11 + 2 * u * v * L12 + v * v * L22 + 2 * u * Q1 + 2 * v * Q2 + C


def lift(s: Sequence[Any], conic_point: Sequence[Any]) -> list[Any]:
    """Point (u, v, w) of the plane (s : t) as a point (x, y, u, v) of P³
    平面 (s : t) 上的点 (u, v, w) 提升为 P³ 中的点
    """
    u, v, w = conic_point
    return [w * s[0], w * s[1], u, v]


@dataclass(frozen=True)
class Remarking:
    """A surface marked along another of its lines 沿另一条直线重新标记的曲面

    Attributes:
        surface: The surface in the new coordinates 新坐标下的曲面
        frame: Columns are the new coordinate points in the old coordinates, so Y ↦ T·Y
            新坐标点在旧坐标下的列，Y ↦ T·Y
    """

    surface: MarkedSurface
    frame: list[list[Fraction]]

    def to_old(self, point: Sequence[Any]) -> list[Any]:
        frame = [[to_sympy(c) for c in row] for row in self.frame]
        return [sympy.expand(sum(frame[i][j] * point[j] for j in range(4))) for i in range(4)]

    def to_new(self, point: Sequence[Fraction]) -> list[Fraction]:
        inv = inverse(self.frame)
        return [sum(inv[i][j] * Fraction(point[j]) for j in range(4)) for i in range(4)]


def canonicalize_surface(cubic: RatPoly, line: Sequence[Point]) -> Remarking:
    """Canonical form of a cubic surface along a rational line on it 沿有理直线的标准形

    Raises:
        InputError: the cubic is not a nonzero quaternary cubic 输入不是四元三次型
        LineNotOnCubic: the surface does not contain the line 曲面不含该直线
        DegenerateSpan: the points coincide projectively 两点重合
    """
    if len(cubic.variables) != 4 or not cubic.is_homogeneous(3) or cubic.is_zero:
        raise InputError("surface must be a nonzero homogeneous cubic in four variables")
    frame = canonical_frame(line)
    moved = pullback(cubic, frame).rename(SURFACE_VARS)
    logger.debug("Surface frame chosen", {"frame": [[str(c) for c in row] for row in frame]})
    return Remarking(surface=MarkedSurface(*split_entries(moved, BINARY_VARS)), frame=frame)


def remark(ms: MarkedSurface, line: Sequence[Point]) -> Remarking:
    """The same surface marked along another rational line 沿另一条有理直线重新标记"""
    return canonicalize_surface(ms.equation(), line)


def surface_from_document(doc: SurfaceDocument) -> MarkedSurface:
    """Parse and canonicalize a surface document 解析并标准化曲面文档"""
    cubic = parse_poly(doc.surface, doc.variables).rename(SURFACE_VARS)
    return canonicalize_surface(cubic, doc.points()).surface


def surface_to_document(ms: MarkedSurface) -> SurfaceDocument:
    return SurfaceDocument(variables=list(SURFACE_VARS), surface=str(ms.equation()))
