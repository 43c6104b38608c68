"""Nodes, quadrocubics and central projection 节点、二次-三次曲线与中心投影

A node s of X gives the local equation v·f2 + f3 = 0; lines of X through s are the points of the
quadrocubic A = {f2 = 0, f3 = 0} in P³.
X 的节点给出局部方程 v·f2 + f3 = 0；过节点的直线对应 P³ 中二次-三次曲线 A 的点。
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from ..algebra import (
    RatPoly,
    complete_basis,
    gram_matrix,
    nullspace,
    parse_poly,
    pullback,
    rank,
    rational_roots,
    real_root_count,
    resultant,
    signature,
)
from ..errors import (
    CertificationFailure,
    InputError,
    LineNotOnCubic,
    NotGeneral,
    NotSingularThere,
    WorseThanQuadratic,
)
from ..utils.logger import logger
from .spectral import SpectralPair, canonicalize, linear_coefficients, spectral_pair

LOCAL_VARS = ("x", "y", "z", "w")
NODE_VARS = ("x", "y", "z", "w", "v")
BIDEGREE_VARS = ("s0", "s1", "t0", "t1")

# Default transversal components of bidegree (2,1) and (1,2); they meet in 5 real points
# 默认的 (2,1) 与 (1,2) 横截分支，交于 5 个实点
DEFAULT_F21 = "s0^2*t1 - s1^2*t0 + s0^2*t0"
DEFAULT_F12 = "s1*t0^2 - s0*t1^2 + s0*t0^2"

_MOEBIUS_SHIFTS = (0, 1, -1, 2, -2, 3, -3, 5)
# B1 · B2 on P¹ × P¹ for bidegrees (2,1) and (1,2)
INTERSECTION_NUMBER = 5


@dataclass(frozen=True)
class NodalData:
    """Local data of X at a node 节点处的局部数据

    Attributes:
        node: The node in the input coordinates 输入坐标中的节点
        f2: Quadratic part in (x, y, z, w) 二次部分
        f3: Cubic part 三次部分
        real_signature: Inertia (p, q) of f2 with p >= q f2 的惯性指数
        frame: Columns sending local coordinates (x, y, z, w, v) to input coordinates 局部标架
        components: Bidegree (2,1) and (1,2) forms when A lies on xy = zw as their union 分支
    """

    node: tuple[Fraction, ...]
    f2: RatPoly
    f3: RatPoly
    real_signature: tuple[int, int]
    frame: list[list[Fraction]] = field(default_factory=list, compare=False)
    components: Optional[tuple[RatPoly, RatPoly]] = None

    def cubic(self) -> RatPoly:
        """v·f2 + f3 in local coordinates (x, y, z, w, v) 局部坐标下的三次型"""
        v = RatPoly.var("v", NODE_VARS)
        return v * self.f2.with_variables(NODE_VARS) + self.f3.with_variables(NODE_VARS)

    def on_quadrocubic(self, point: Sequence[Fraction]) -> bool:
        return self.f2.evaluate(point) == 0 and self.f3.evaluate(point) == 0

    def is_singular_point(self, point: Sequence[Fraction]) -> bool:
        """A point of A where the gradients of f2 and f3 are dependent A 的奇点"""
        if not self.on_quadrocubic(point):
            return False
        g2 = [d.evaluate(point) for d in self.f2.gradient()]
        g3 = [d.evaluate(point) for d in self.f3.gradient()]
        return rank([g2, g3]) < 2


@dataclass(frozen=True)
class ProjectionReport:
    """Spectral pair of a line through a node and its checks 过节点直线的谱对及其检验

    Attributes:
        binodal: The line passes through a second node 直线经过第二个节点
        spectral: Spectral pair in canonical coordinates 谱对
        theta_rank: Rank of theta's Gram matrix theta 的秩
        tangent_trace: L12, the trace of the quadric's tangent plane 切平面迹线
        theta_is_square: theta = −L12² theta 为平方
        quartic: (2Q1Q2 − L12·C) for a binodal line 双节点情形的四次曲线
        quintic_divisible: quintic = L12·quartic 五次式被 L12 整除
        generator_pair: "real", "imaginary" or "double" for the generators through the line
        signature_consistent: generator_pair agrees with the node's signature 与符号差一致
    """

    binodal: bool
    spectral: SpectralPair
    theta_rank: int
    tangent_trace: RatPoly
    theta_is_square: bool
    quartic: Optional[RatPoly]
    quintic_divisible: Optional[bool]
    generator_pair: str
    signature_consistent: bool


@dataclass(frozen=True)
class QuadrocubicSingularities:
    """Singular points of A = B1 ∪ B2 on the split quadric 分裂二次曲面上 A 的奇点

    Attributes:
        count: Number of singular points over C 复奇点个数
        real_count: Number of real singular points 实奇点个数
        eliminant: Univariate resultant whose roots are the s-coordinates 消元多项式
        shift: Moebius shift used for the affine chart 仿射图平移量
        rational_points: Singular points with rational coordinates, in (x, y, z, w) 有理奇点
    """

    count: int
    real_count: int
    eliminant: RatPoly
    shift: int
    rational_points: list[list[Fraction]]


# ─── local equation at a node ───


def _normalized_signature(f2: RatPoly) -> tuple[int, int]:
    p, q = signature(gram_matrix(f2))
    return (p, q) if p >= q else (q, p)


def quadrocubic(cubic: RatPoly, node: Sequence[Fraction]) -> NodalData:
    """Local quadric and cubic of X at a node X 在节点处的局部二次与三次部分

    Args:
        cubic: Homogeneous cubic in five variables 五元齐次三次型
        node: Rational point where the gradient vanishes 梯度为零的有理点

    Raises:
        NotSingularThere: the gradient does not vanish 梯度不为零
        WorseThanQuadratic: the quadratic part vanishes 二次部分为零
    """
    point = [Fraction(c) for c in node]
    if len(cubic.variables) != 5 or len(point) != 5 or all(c == 0 for c in point):
        raise InputError("a node of a cubic threefold is a nonzero point of P^4")
    gradient = [d.evaluate(point) for d in cubic.gradient()]
    if any(gradient):
        raise NotSingularThere("gradient does not vanish at the point", gradient=gradient)

    frame = complete_basis([point])
    moved = pullback(cubic, frame).rename(NODE_VARS)
    parts: dict[int, dict[tuple[int, ...], Fraction]] = {}
    for monom, coeff in moved.terms().items():
        parts.setdefault(monom[4], {})[monom[:4]] = coeff
    if any(k >= 2 for k in parts):
        # Euler's identity forbids this once the gradient vanishes 梯度为零时不可能
        raise NotSingularThere("cubic is not singular at the node")
    f2 = RatPoly.from_dict(parts.get(1, {}), LOCAL_VARS)
    f3 = RatPoly.from_dict(parts.get(0, {}), LOCAL_VARS)
    if f2.is_zero:
        raise WorseThanQuadratic("quadratic part vanishes at the node", node=point)
    sig = _normalized_signature(f2)
    logger.debug("Node localized", {"signature": sig, "f2": str(f2)})
    return NodalData(node=tuple(point), f2=f2, f3=f3, real_signature=sig, frame=frame)


# ─── central projection from a line through the node ───


def _second_node(nd: NodalData, point: list[Fraction]) -> list[Fraction]:
    """Node of v·f2 + f3 over a singular point of A: v solves v∇f2 + ∇f3 = 0"""
    g2 = [d.evaluate(point) for d in nd.f2.gradient()]
    g3 = [d.evaluate(point) for d in nd.f3.gradient()]
    i = next((k for k, c in enumerate(g2) if c != 0), None)
    if i is None:
        raise NotGeneral("local quadric is singular at the point", point=point)
    return point + [-g3[i] / g2[i]]


def _generator_pair(tangent: RatPoly, q2: RatPoly) -> str:
    """Reality of the two points {L12 = 0} ∩ {Q2 = 0} 两个交点的实性"""
    P, R = nullspace([linear_coefficients(tangent)])
    s = RatPoly.var("x", ("x", "y"))
    t = RatPoly.var("y", ("x", "y"))
    images = {name: s.scale(P[i]) + t.scale(R[i]) for i, name in enumerate(("x", "y", "z"))}
    binary = q2.substitute(images, ("x", "y"))
    if binary.is_zero:
        return "double"
    a = binary.coefficient((2, 0))
    b = binary.coefficient((1, 1)) / 2
    c = binary.coefficient((0, 2))
    disc = b * b - a * c
    if disc > 0:
        return "real"
    if disc < 0:
        return "imaginary"
    return "double"


def project_quadrocubic(nd: NodalData, point: Sequence[Fraction]) -> ProjectionReport:
    """Spectral pair of the line joining the node to a point of A 节点与 A 上一点连线的谱对

    When A is singular at the point the line meets a second node and the binodal checks run.
    若 A 在该点奇异，则直线经过第二个节点，执行双节点检验。

    Raises:
        LineNotOnCubic: the point is not on A 点不在 A 上
    """
    local = [Fraction(c) for c in point]
    if len(local) != 4 or all(c == 0 for c in local):
        raise InputError("a point of the local P^3 needs four coordinates, not all zero")
    if not nd.on_quadrocubic(local):
        raise LineNotOnCubic(
            "the line through the node and the point does not lie on the cubic",
            f2=str(nd.f2.evaluate(local)),
            f3=str(nd.f3.evaluate(local)),
        )
    binodal = nd.is_singular_point(local)
    start = _second_node(nd, local) if binodal else local + [Fraction(0)]
    node = [Fraction(0)] * 4 + [Fraction(1)]
    mc = canonicalize(nd.cubic(), [start, node])
    pair = spectral_pair(mc)

    trank = 0 if pair.theta_vanishes else rank(gram_matrix(pair.theta))
    tangent = mc.L12
    is_square = not tangent.is_zero and pair.theta == -(tangent * tangent)

    quartic: Optional[RatPoly] = None
    divisible: Optional[bool] = None
    if binodal:
        quartic = 2 * mc.Q1 * mc.Q2 - mc.L12 * mc.C
        divisible = pair.quintic == tangent * quartic

    generators = _generator_pair(tangent, mc.Q2) if not tangent.is_zero else "double"
    expected = {(3, 1): "imaginary", (2, 2): "real"}.get(nd.real_signature)
    consistent = expected is None or expected == generators
    logger.debug(
        "Projected quadrocubic",
        {"binodal": binodal, "theta_rank": trank, "generators": generators},
    )
    return ProjectionReport(
        binodal=binodal,
        spectral=pair,
        theta_rank=trank,
        tangent_trace=tangent,
        theta_is_square=is_square,
        quartic=quartic,
        quintic_divisible=divisible,
        generator_pair=generators,
        signature_consistent=consistent,
    )


# ─── quadrocubics on the split quadric xy = zw ───


def segre_map(form: RatPoly) -> RatPoly:
    """Push a bidegree (3,3) form to a cubic on xy = zw 将 (3,3) 双次型推到二次曲面上的三次型

    Uses x = s0·t0, y = s1·t1, z = s0·t1, w = s1·t0; the monomial s0^a s1^(3-a) t0^b t1^(3-b)
    goes to x^i z^(a-i) w^(b-i) y^(3-a-b+i) with i = max(0, a+b-3).
    """
    terms: dict[tuple[int, ...], Fraction] = {}
    for (a, a1, b, b1), coeff in form.terms().items():
        if a + a1 != 3 or b + b1 != 3:
            raise InputError("segre_map expects a form of bidegree (3,3)")
        i = max(0, a + b - 3)
        monom = (i, 3 - a - b + i, a - i, b - i)
        terms[monom] = terms.get(monom, Fraction(0)) + coeff
    return RatPoly.from_dict(terms, LOCAL_VARS)


def _segre_pullback(f: RatPoly) -> RatPoly:
    s0, s1, t0, t1 = (RatPoly.var(n, BIDEGREE_VARS) for n in BIDEGREE_VARS)
    images = {"x": s0 * t0, "y": s1 * t1, "z": s0 * t1, "w": s1 * t0}
    return f.substitute(images, BIDEGREE_VARS)


def _bidegree(form: RatPoly) -> Optional[tuple[int, int]]:
    degrees = {(m[0] + m[1], m[2] + m[3]) for m in form.terms()}
    return degrees.pop() if len(degrees) == 1 else None


def _check_component(form: RatPoly, expected: tuple[int, int], label: str) -> None:
    if _bidegree(form) != expected:
        raise NotGeneral(f"{label} must be bihomogeneous of bidegree {expected}")
    _, factors = form.factor_list()
    if len(factors) != 1 or factors[0][1] != 1:
        raise NotGeneral(f"{label} must be irreducible", factors=len(factors))


def segre_quadrocubic(F21: Optional[str] = None, F12: Optional[str] = None) -> NodalData:
    """Quadrocubic B1 ∪ B2 on f2 = xy − zw, the data of a 6-nodal Segre cubic at one node
    二次曲面 xy = zw 上的 B1 ∪ B2，即 6 节点 Segre 三次型在一个节点处的数据

    Args:
        F21: Bidegree (2,1) form in (s0, s1, t0, t1) (2,1) 双次型
        F12: Bidegree (1,2) form (1,2) 双次型
    """
    b1 = parse_poly(F21 or DEFAULT_F21, BIDEGREE_VARS)
    b2 = parse_poly(F12 or DEFAULT_F12, BIDEGREE_VARS)
    _check_component(b1, (2, 1), "F21")
    _check_component(b2, (1, 2), "F12")
    f2 = parse_poly("x*y - z*w", LOCAL_VARS)
    f3 = segre_map(b1 * b2)
    node = (Fraction(0),) * 4 + (Fraction(1),)
    identity = [[Fraction(int(i == j)) for j in range(5)] for i in range(5)]
    return NodalData(
        node=node,
        f2=f2,
        f3=f3,
        real_signature=_normalized_signature(f2),
        frame=identity,
        components=(b1, b2),
    )


def _split_components(nd: NodalData) -> tuple[RatPoly, RatPoly]:
    if nd.components is not None:
        return nd.components
    if nd.f2 != parse_poly("x*y - z*w", LOCAL_VARS):
        raise InputError("singular points are computed on the split quadric xy = zw")
    _, factors = _segre_pullback(nd.f3).factor_list()
    by_degree = {_bidegree(f): f for f, k in factors if k == 1}
    if (2, 1) not in by_degree or (1, 2) not in by_degree or len(factors) != 2:
        raise NotGeneral("quadrocubic does not split into (2,1) and (1,2) components")
    return by_degree[(2, 1)], by_degree[(1, 2)]


def _shift(form: RatPoly, k: int) -> RatPoly:
    s0, s1, t0, t1 = (RatPoly.var(n, BIDEGREE_VARS) for n in BIDEGREE_VARS)
    return form.substitute({"s0": s0 + s1.scale(k), "t0": t0 + t1.scale(k)}, BIDEGREE_VARS)


def _distinct_roots(eliminant: RatPoly) -> int:
    _, factors = eliminant.sqf_list()
    return sum(f.total_degree() for f, _ in factors)


def quadrocubic_singular_points(nd: NodalData) -> QuadrocubicSingularities:
    """Singular points of A = B1 ∪ B2, i.e. the points of B1 ∩ B2 A 的奇点，即 B1 ∩ B2

    Eliminates t from the affine equations in the chart s0 = t0 = 1 after a Moebius shift that
    keeps every intersection point finite, so the eliminant has degree (2,1)·(1,2) = 5. Its
    distinct roots count the points; five of them means five transverse intersections.
    经 Moebius 平移使所有交点有限后，在 s0 = t0 = 1 图中消去 t，消元式次数为 5；其不同根数即交点数。

    Raises:
        NotGeneral: B1 and B2 share a component or meet in fewer than five points
            B1 与 B2 有公共分支或交点少于五个
        CertificationFailure: no shift kept every intersection point finite 无可用平移
    """
    b1, b2 = _split_components(nd)
    shared = True
    tangent: Optional[RatPoly] = None
    for k in _MOEBIUS_SHIFTS:
        c1, c2 = _shift(b1, k), _shift(b2, k)
        affine1 = c1.specialize({"s0": 1, "t0": 1}, ("s1", "t1"))
        affine2 = c2.specialize({"s0": 1, "t0": 1}, ("s1", "t1"))
        eliminant = resultant(affine1, affine2, "t1")
        if eliminant.is_zero:
            continue
        shared = False
        if eliminant.total_degree() != INTERSECTION_NUMBER:
            logger.debug("Moebius shift rejected", {"shift": k, "degree": eliminant.total_degree()})
            continue
        count = _distinct_roots(eliminant)
        if count != INTERSECTION_NUMBER:
            logger.debug("Repeated eliminant root", {"shift": k, "distinct": count})
            tangent = tangent or eliminant
            continue
        points = _rational_points(affine1, eliminant, k)
        return QuadrocubicSingularities(
            count=count,
            real_count=real_root_count(eliminant),
            eliminant=eliminant,
            shift=k,
            rational_points=points,
        )
    if shared:
        raise NotGeneral("B1 and B2 share a component")
    if tangent is not None:
        count = _distinct_roots(tangent)
        raise NotGeneral(
            f"B1 and B2 meet in {count} distinct points, not {INTERSECTION_NUMBER}", count=count
        )
    raise CertificationFailure("no Moebius shift separated the singular points of A")


def _rational_points(affine1: RatPoly, eliminant: RatPoly, k: int) -> list[list[Fraction]]:
    points = []
    for s in rational_roots(eliminant):
        line = affine1.specialize({"s1": s}, ("t1",))
        a = line.coefficient((1,))
        b = line.coefficient((0,))
        # shifted (t0 : t1) is (a : -b); a = 0 is the point t = infinity 平移后的坐标
        u0, u1 = a, -b
        # undo s0 -> s0 + k·s1 and t0 -> t0 + k·t1 撤销平移
        s0, s1 = 1 + k * s, s
        t0, t1 = u0 + k * u1, u1
        points.append([s0 * t0, s1 * t1, s0 * t1, s1 * t0])
    return points
