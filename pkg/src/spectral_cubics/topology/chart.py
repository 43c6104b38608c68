"""Affine charts with shear 带剪切的仿射图

A chart sends affine (X, Y) to the projective point M·(X, Y, 1), where the line at infinity is
z + a·x + b·y = 0 and x = X + k·Y shears the vertical direction.
仿射图把 (X, Y) 送到射影点 M·(X, Y, 1)；无穷远直线为 z + a·x + b·y = 0，x = X + k·Y 为剪切。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from ..algebra import RatPoly, pullback
from ..models.config import AnalysisSettings

PLANE = ("x", "y", "z")
HOMOGENEOUS = ("X", "Y", "W")
AFFINE = ("X", "Y")


@dataclass(frozen=True)
class Chart:
    """Affine chart of P² 仿射图

    Attributes:
        a, b: Line at infinity z + a·x + b·y = 0 无穷远直线
        shear: k in x = X + k·Y 剪切参数
    """

    a: int = 0
    b: int = 0
    shear: int = 0

    def matrix(self) -> list[list[Fraction]]:
        """M with (x, y, z) = M·(X, Y, W) 坐标矩阵"""
        a, b, k = Fraction(self.a), Fraction(self.b), Fraction(self.shear)
        return [
            [Fraction(1), k, Fraction(0)],
            [Fraction(0), Fraction(1), Fraction(0)],
            [-a, -a * k - b, Fraction(1)],
        ]

    def lift(self, X: Fraction, Y: Fraction) -> list[Fraction]:
        """Projective point of an affine point 仿射点的射影坐标"""
        m = self.matrix()
        v = (Fraction(X), Fraction(Y), Fraction(1))
        return [sum((m[i][j] * v[j] for j in range(3)), Fraction(0)) for i in range(3)]

    def to_affine(self, p: Sequence[Fraction]) -> Optional[tuple[Fraction, Fraction]]:
        """Affine coordinates of a projective point, None at infinity 射影点的仿射坐标"""
        x, y, z = (Fraction(c) for c in p)
        w = z + self.a * x + self.b * y
        if w == 0:
            return None
        return (x - self.shear * y) / w, y / w

    def homogeneous(self, f: RatPoly) -> RatPoly:
        """f∘M over (X, Y, W) f 在图坐标下的齐次形式"""
        return pullback(f.rename(PLANE), self.matrix()).rename(HOMOGENEOUS)

    def affine(self, f: RatPoly) -> RatPoly:
        """f∘M restricted to W = 1 限制到 W = 1"""
        return self.homogeneous(f).specialize({"W": 1}, AFFINE)

    def at_infinity(self, f: RatPoly) -> RatPoly:
        """Binary form of f on the line at infinity 无穷远直线上的二元型"""
        return self.homogeneous(f).specialize({"W": 0}, AFFINE)

    def describe(self) -> dict[str, int]:
        return {"a": self.a, "b": self.b, "shear": self.shear}


def chart_candidates(settings: Optional[AnalysisSettings] = None) -> Iterator[Chart]:
    """Charts in schedule order: lines at infinity outer, shears inner 按计划顺序的仿射图"""
    settings = settings or AnalysisSettings()
    for a, b in settings.chart_schedule:
        for k in settings.shear_schedule:
            yield Chart(a, b, k)
