"""Three-plus-two bipartition of five points 五点的 3+2 二分

Five points of an ellipsoid in general position span a triangular bipyramid: three vertices of
valency 4 form the triple and the two apexes of valency 3 form the pair.
椭球面上一般位置的五点张成三角双锥：三个 4 价顶点为三元组，两个 3 价顶点为二元组。
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from ..algebra import determinant
from ..errors import InputError, NotGeneral

Point3 = Sequence[Fraction]


@dataclass(frozen=True)
class SegreBipartition:
    """Triple and pair of point indices 三元组与二元组的点下标

    Attributes:
        triple: Indices of the valency-4 vertices 4 价顶点
        pair: Indices of the valency-3 vertices 3 价顶点
        facets: Hull facets as index triples 凸包的面
    """

    triple: tuple[int, int, int]
    pair: tuple[int, int]
    facets: tuple[tuple[int, int, int], ...]


def orientation(a: Point3, b: Point3, c: Point3, d: Point3) -> int:
    """Sign of det(b − a, c − a, d − a) 定向行列式的符号"""
    rows = [[Fraction(p[k]) - Fraction(a[k]) for k in range(3)] for p in (b, c, d)]
    value = determinant(rows)
    return (value > 0) - (value < 0)


def segre_bipartition(points: Sequence[Point3]) -> SegreBipartition:
    """Valency-4 triple and valency-3 pair of the convex hull of five points
    五点凸包的 4 价三元组与 3 价二元组

    Raises:
        InputError: not five points of R³ 不是 R³ 中的五个点
        NotGeneral: four of the points are coplanar or one lies inside the others' hull
            有四点共面或有一点在其余点的凸包内
    """
    if len(points) != 5 or any(len(p) != 3 for p in points):
        raise InputError("expected five points with three coordinates each")
    pts = [[Fraction(c) for c in p] for p in points]
    for quad in combinations(range(5), 4):
        if orientation(*(pts[i] for i in quad)) == 0:
            raise NotGeneral("four points are coplanar", points=list(quad))

    facets = []
    for tri in combinations(range(5), 3):
        rest = [i for i in range(5) if i not in tri]
        sides = {orientation(*(pts[i] for i in tri), pts[j]) for j in rest}
        if len(sides) == 1:
            facets.append(tri)
    edges = {pair for tri in facets for pair in combinations(tri, 2)}
    valency = [sum(i in e for e in edges) for i in range(5)]
    if sorted(valency) != [3, 3, 4, 4, 4]:
        raise NotGeneral("points are not in convex position", valency=valency)
    triple = tuple(i for i in range(5) if valency[i] == 4)
    pair = tuple(i for i in range(5) if valency[i] == 3)
    return SegreBipartition(triple=triple, pair=pair, facets=tuple(facets))
