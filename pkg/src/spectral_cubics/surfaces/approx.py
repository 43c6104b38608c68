"""High-precision line witnesses over irrational planes 无理平面上直线的高精度见证

A tritangent plane over an irrational or imaginary spectral point has residual lines over a field
of degree up to ten, and a line disjoint from the marked line mixes several of them. Such lines are
carried as mpmath numbers at a working precision, seeded by certified rational approximations of
the spectral points (CRootOf.eval_rational). A zero test is a gap test: a value below
10^(-digits/2) of its scale is zero, one above 10^(-digits/4) is not, anything between fails.
无理或虚谱点上的三切平面的残余直线定义在至多十次的域上。此类直线以 mpmath 数在工作精度下表示，
由谱点的认证有理逼近给出初值；判零采用间隙检验：小于尺度的 10^(-digits/2) 为零，大于
10^(-digits/4) 非零，介于其间则认证失败。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Sequence

import mpmath
import sympy
from sympy import CRootOf

from ..algebra import LinePair, RatPoly, to_fraction
from ..errors import CertificationFailure
from .marked import MarkedSurface
from .spectrum import SpectralPoint

DEFAULT_DIGITS = 40

Vector = list[Any]


def to_mp(value: Any) -> Any:
    """An exact number (Fraction, sympy Rational, CRootOf or radical) at the working precision
    精确数在当前工作精度下的 mpmath 值
    """
    if isinstance(value, (int, Fraction)):
        f = Fraction(value)
        return mpmath.mpf(f.numerator) / f.denominator
    value = sympy.sympify(value)
    if isinstance(value, CRootOf):
        value = value.eval_rational(n=mpmath.mp.dps + 5)
    elif not value.is_Rational:
        value = sympy.N(value, mpmath.mp.dps + 5)
    re, im = value.as_real_imag()
    real = _real_mp(re)
    if im == 0:
        return real
    return mpmath.mpc(real, _real_mp(im))


def _real_mp(value: Any) -> Any:
    if value.is_Rational:
        f = to_fraction(value)
        return mpmath.mpf(f.numerator) / f.denominator
    return mpmath.mpf(str(value))


def norm(v: Sequence[Any]) -> Any:
    return max((abs(c) for c in v), default=mpmath.mpf(0))


@dataclass(frozen=True)
class Gap:
    """Zero test at a working precision 工作精度下的判零

    Attributes:
        digits: Working precision in decimal digits 十进制工作精度
    """

    digits: int

    @property
    def zero(self) -> Any:
        return mpmath.mpf(10) ** (-(self.digits // 2))

    @property
    def nonzero(self) -> Any:
        return mpmath.mpf(10) ** (-(self.digits // 4))

    def is_zero(self, value: Any, scale: Any = 1, what: str = "value") -> bool:
        """Gap-certified zero test relative to `scale` 相对 scale 的间隙判零

        Raises:
            CertificationFailure: the value falls inside the gap 数值落在间隙内
        """
        size = abs(value) / max(abs(scale), mpmath.mpf(1))
        if size <= self.zero:
            return True
        if size >= self.nonzero:
            return False
        raise CertificationFailure(
            f"{what} is neither certified zero nor nonzero",
            digits=self.digits,
            size=mpmath.nstr(size, 5),
        )


def plane_point(point: SpectralPoint) -> tuple[Any, Any]:
    """(s, t) of a spectral point at the working precision 谱点的 (s, t)"""
    if point.at_infinity:
        return mpmath.mpf(1), mpmath.mpf(0)
    if point.root is None:
        raise CertificationFailure("spectral point carries no exact root", label=point.label())
    return to_mp(point.root), mpmath.mpf(1)


def evaluate(poly: RatPoly, point: Sequence[Any]) -> Any:
    """Value of a rational polynomial at an mpmath point mpmath 点处的值"""
    total = mpmath.mpf(0)
    for monom, c in poly.terms().items():
        term = to_mp(c)
        for x, e in zip(point, monom):
            if e:
                term *= x**e
        total += term
    return total


def matrix_at(ms: MarkedSurface, plane: Sequence[Any]) -> list[list[Any]]:
    """Residual conic matrix in the plane (s : t) 平面 (s : t) 上残余二次曲线的矩阵"""
    return [[evaluate(entry, plane) for entry in row] for row in ms.fundamental_matrix()]


def cross(u: Sequence[Any], v: Sequence[Any]) -> Vector:
    return [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]


def dot(u: Sequence[Any], v: Sequence[Any]) -> Any:
    return sum((a * b for a, b in zip(u, v)), mpmath.mpf(0))


@dataclass(frozen=True)
class ApproxLinePair:
    """The two residual lines of one plane at a working precision 工作精度下的残余直线对

    Attributes:
        plane: (s, t) of the plane 平面的 (s, t)
        lines: Coefficient vectors in (u, v, w) 系数向量
        points: A point of each line other than the vertex 每条直线上异于顶点的一点
        vertex: Common point of the two lines 两直线的交点
    """

    plane: tuple[Any, Any]
    lines: tuple[Vector, Vector]
    points: tuple[Vector, Vector]
    vertex: Vector


def from_line_pair(pair: LinePair, plane: tuple[Any, Any]) -> ApproxLinePair:
    """An exact pair over Q(√disc) at the working precision 精确直线对的数值形式"""
    return ApproxLinePair(
        plane=plane,
        lines=(
            [to_mp(c) for c in pair.lines[0]],
            [to_mp(c) for c in pair.lines[1]],
        ),
        points=(
            [to_mp(c) for c in pair.points[0]],
            [to_mp(c) for c in pair.points[1]],
        ),
        vertex=[to_mp(c) for c in pair.vertex],
    )


def split(matrix: Sequence[Sequence[Any]], plane: tuple[Any, Any], gap: Gap) -> ApproxLinePair:
    """Split a rank-2 conic matrix into its two lines 将秩 2 二次曲线矩阵分解为两条直线

    The conic is restricted to the coordinate line opposite the largest vertex coordinate; the
    two roots of that binary quadric, joined to the vertex, give the lines.
    限制到与顶点最大坐标相对的坐标直线上，二元二次型的两根与顶点相连即得两条直线。

    Raises:
        CertificationFailure: the rank is not certified to be 2 秩未被认证为 2
    """
    scale = max(norm(row) for row in matrix)
    candidates = [cross(matrix[i], matrix[j]) for i, j in ((0, 1), (0, 2), (1, 2))]
    vertex = max(candidates, key=norm)
    if gap.is_zero(norm(vertex), scale * scale, "residual conic rank"):
        raise CertificationFailure("residual conic is a double line")
    if not gap.is_zero(norm([dot(row, vertex) for row in matrix]), scale * norm(vertex), "det"):
        raise CertificationFailure("residual conic is not degenerate")
    vertex = [c / norm(vertex) for c in vertex]

    pivot = max(range(3), key=lambda i: abs(vertex[i]))
    a, b = [i for i in range(3) if i != pivot]
    q2, q1, q0 = matrix[a][a], 2 * matrix[a][b], matrix[b][b]
    root = mpmath.sqrt(q1 * q1 - 4 * q2 * q0)
    points: list[Vector] = []
    for sign in (1, -1):
        point = [mpmath.mpf(0)] * 3
        if gap.is_zero(max(abs(q2), abs(q0)), scale, "conic coefficient"):
            point[a if sign > 0 else b] = mpmath.mpf(1)
        elif abs(q2) >= abs(q0):
            point[a], point[b] = (-q1 + sign * root) / (2 * q2), mpmath.mpf(1)
        else:
            point[a], point[b] = mpmath.mpf(1), (-q1 + sign * root) / (2 * q0)
        points.append(point)
    return ApproxLinePair(
        plane=plane,
        lines=(cross(vertex, points[0]), cross(vertex, points[1])),
        points=(points[0], points[1]),
        vertex=vertex,
    )


def lift(plane: Sequence[Any], conic_point: Sequence[Any]) -> Vector:
    """Point (u, v, w) of a plane as a point (x, y, u, v) of P³ 平面点提升到 P³"""
    u, v, w = conic_point
    return [w * plane[0], w * plane[1], u, v]


# ─── lines disjoint from the marked line ───


def transversal(pairs: Sequence[ApproxLinePair], bits: Sequence[int]) -> Optional[Vector]:
    """The line u = a·x + b·y, v = c·x + d·y meeting line bits[i] of each of four planes
    与四个平面中各一条残余直线相交的直线 u = a·x + b·y, v = c·x + d·y

    Meeting a residual line is linear in (a, b, c, d): the line crosses the plane (s : t) at
    (u, v, w) = (a·s + b·t, c·s + d·t, 1).
    与残余直线相交是 (a, b, c, d) 的线性条件。

    Returns:
        [a, b, c, d], or None when the four conditions are dependent 条件相关时返回 None
    """
    rows, rhs = [], []
    for pair, bit in zip(pairs, bits):
        alpha, beta, gamma = pair.lines[bit]
        s, t = pair.plane
        rows.append([alpha * s, alpha * t, beta * s, beta * t])
        rhs.append(-gamma)
    try:
        solution = mpmath.lu_solve(mpmath.matrix(rows), mpmath.matrix(rhs))
    except ZeroDivisionError:
        return None
    return [solution[i] for i in range(4)]


def crossing(graph: Sequence[Any], plane: Sequence[Any]) -> Vector:
    """Point (u, v, w) where the line of `graph` crosses a plane 直线与平面的交点"""
    a, b, c, d = graph
    s, t = plane
    return [a * s + b * t, c * s + d * t, mpmath.mpf(1)]


def graph_points(graph: Sequence[Any]) -> tuple[Vector, Vector]:
    """Two points (x, y, u, v) of the line u = a·x + b·y, v = c·x + d·y 直线上的两点"""
    a, b, c, d = graph
    return [mpmath.mpf(1), mpmath.mpf(0), a, c], [mpmath.mpf(0), mpmath.mpf(1), b, d]


def surface_residual(equation: RatPoly, points: Sequence[Sequence[Any]]) -> Any:
    """Largest value of the cubic at four points of a line, relative to the coefficients
    三次型在直线上四点处的最大相对值
    """
    p, q = points
    samples = [p, q, [x + y for x, y in zip(p, q)], [x - 2 * y for x, y in zip(p, q)]]
    size = max(norm(s) for s in samples) ** 3
    height = max(abs(to_mp(c)) for c in equation.terms().values())
    return max(abs(evaluate(equation, s)) for s in samples) / (size * height)


def meets(first: Sequence[Sequence[Any]], second: Sequence[Sequence[Any]], gap: Gap) -> bool:
    """Gap-certified coplanarity of two lines, each given by two points 两直线共面的间隙检验"""
    rows = [list(p) for p in first] + [list(p) for p in second]
    det = mpmath.det(mpmath.matrix(rows))
    scale = 1
    for row in rows:
        scale *= norm(row)
    return gap.is_zero(det / scale, 1, "line incidence")
