"""Degenerate conics and vectors over quadratic fields 退化二次曲线与二次域上的向量

A rank-2 conic is split into its two lines by restricting it to a line that misses the vertex:
the two roots of that binary quadric, joined to the vertex, give the lines over Q(√disc).
秩 2 二次曲线：限制到不过顶点的直线上，其两根与顶点相连即得 Q(√disc) 上的两条直线。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

import sympy

from .linalg import gram_matrix, nullspace, rank
from .poly import RatPoly

Vector = list[Any]


def cross(u: Sequence[Any], v: Sequence[Any]) -> Vector:
    return [
        sympy.expand(u[1] * v[2] - u[2] * v[1]),
        sympy.expand(u[2] * v[0] - u[0] * v[2]),
        sympy.expand(u[0] * v[1] - u[1] * v[0]),
    ]


def is_zero(value: Any) -> bool:
    """Exact zero test for expressions in square roots of rationals 平方根表达式的精确零检验"""
    return sympy.expand(sympy.radsimp(sympy.sympify(value))) == 0


def is_zero_vector(v: Sequence[Any]) -> bool:
    return all(is_zero(c) for c in v)


def to_sympy(c: Fraction) -> sympy.Rational:
    return sympy.Rational(c.numerator, c.denominator)


@dataclass(frozen=True)
class LinePair:
    """The two lines of a rank-2 conic 秩 2 二次曲线的两条直线

    Attributes:
        lines: Coefficient vectors of the two lines 两条直线的系数向量
        points: A point of each line other than the vertex 每条直线上异于顶点的一点
        vertex: Rational vertex of the pair 有理顶点
        disc: Discriminant whose square root defines the lines 定义直线的判别式
    """

    lines: tuple[Vector, Vector]
    points: tuple[Vector, Vector]
    vertex: list[sympy.Rational]
    disc: sympy.Rational

    @property
    def rational(self) -> bool:
        return sympy.sqrt(self.disc).is_Rational

    @property
    def real(self) -> bool:
        return self.disc >= 0

    @property
    def field(self) -> str:
        return "Q" if self.rational else f"Q(sqrt({self.disc}))"


def split_line_pair(conic: RatPoly) -> LinePair:
    """Split a ternary quadric of rank 2 into two lines 将秩 2 三元二次型分解为两条直线

    Raises:
        ValueError: the conic does not have rank 2 秩不为 2
    """
    gram = gram_matrix(conic)
    if rank(gram) != 2:
        raise ValueError("conic does not have rank 2")
    vertex = [to_sympy(c) for c in nullspace(gram)[0]]
    pivot = next(i for i in range(3) if vertex[i] != 0)
    a, b = [i for i in range(3) if i != pivot]
    e_a = [sympy.Integer(int(i == a)) for i in range(3)]
    e_b = [sympy.Integer(int(i == b)) for i in range(3)]

    g = [[to_sympy(c) for c in row] for row in gram]
    q2, q0 = g[a][a], g[b][b]
    q1 = 2 * g[a][b]
    disc = sympy.Rational(q1 * q1 - 4 * q2 * q0)
    root = sympy.sqrt(disc)
    if q2 != 0:
        points = [
            [(-q1 + sign * root) / (2 * q2) * e_a[i] + e_b[i] for i in range(3)]
            for sign in (1, -1)
        ]
    else:
        points = [e_a, [-q0 * e_a[i] + q1 * e_b[i] for i in range(3)]]
    points = [[sympy.expand(c) for c in p] for p in points]
    lines = (cross(vertex, points[0]), cross(vertex, points[1]))
    return LinePair(lines=lines, points=(points[0], points[1]), vertex=vertex, disc=disc)


def evaluate_line(line: Sequence[Any], point: Sequence[Any]) -> Any:
    return sympy.expand(sum(line[i] * point[i] for i in range(len(line))))
