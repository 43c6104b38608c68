"""Hyperbolic and elliptic real lines 双曲型与椭圆型实直线

Planes through a real line m cut residual conics meeting m in pairs of points; the pairing is an
involution of m whose fixed points lie over the roots of L12² − L11·L22 in the marking along m.
The line is hyperbolic when the fixed points are real and elliptic when they are imaginary.
过实直线 m 的平面截出的残余二次曲线在 m 上给出对合；其不动点位于沿 m 标记时 L12² − L11·L22 的根上。
不动点为实则为双曲型，为虚则为椭圆型。
"""

from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from ..errors import NonGeneric
from .marked import MarkedSurface, remark

Point = Sequence[Fraction]


class LineKind(str, Enum):
    HYPERBOLIC = "Hyperbolic"
    ELLIPTIC = "Elliptic"


def involution_discriminant(ms: MarkedSurface) -> Fraction:
    """Discriminant of the binary quadric L12² − L11·L22 判别式"""
    delta = -ms.theta()
    a = delta.coefficient((2, 0))
    b = delta.coefficient((1, 1))
    c = delta.coefficient((0, 2))
    return b * b - 4 * a * c


def line_type(ms: MarkedSurface, m: Optional[Sequence[Point]] = None) -> LineKind:
    """Type of a real rational line of the surface, the marked line by default
    曲面上实有理直线的类型（默认为标记直线）

    Raises:
        NonGeneric: the involution has a double fixed point 对合有重不动点
        LineNotOnCubic: m does not lie on the surface m 不在曲面上
    """
    target = ms if m is None else remark(ms, m).surface
    if target.theta().is_zero:
        raise NonGeneric("residual conics are tangent to the line in every plane")
    disc = involution_discriminant(target)
    if disc == 0:
        raise NonGeneric("parabolic line: the involution has a double fixed point")
    return LineKind.HYPERBOLIC if disc > 0 else LineKind.ELLIPTIC
