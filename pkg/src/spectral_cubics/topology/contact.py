"""Mutual position of a quintic and a conic 五次曲线与二次曲线的相互位置

Contact test, tangency location, visibility of ovals, the skew criterion and the intersection
type of a real line.
相切检验、切点定位、卵形线可见性、斜匹配判据以及实直线的交型。
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Optional

import sympy
from sympy import Poly, QQ
from sympy.solvers.diophantine.diophantine import diop_ternary_quadratic

from ..algebra import (
    RatPoly,
    RootBox,
    as_upoly,
    bisect,
    cross,
    gram_matrix,
    is_zero_vector,
    isolate_real_roots,
    nullspace,
    rank,
    resultant,
    sign_at_root,
    signature,
    split_line_pair,
)
from ..errors import (
    CertificationFailure,
    CommonComponent,
    InputError,
    NonGenericLine,
    NotSquareFree,
    ThetaNotReduced,
)
from ..models.config import AnalysisSettings
from ..utils.logger import logger
from .curve import CurveTopology, topology
from .sweep import OnCurve, Sweep

PLANE = ("x", "y", "z")
_S, _T = sympy.symbols("s t")
_X, _Y = sympy.symbols("X Y")


class ThetaRealType(str, Enum):
    """Real locus of the conic 二次曲线的实轨迹"""

    SMOOTH_NONEMPTY = "smooth-nonempty"
    TWO_REAL_LINES = "two-real-lines"
    IMAGINARY_PAIR = "imaginary-pair-of-lines"
    EMPTY = "empty-real-locus"


class Verdict(str, Enum):
    """Spectral matching verdict 谱匹配结论"""

    SKEW = "Skew"
    PERFECT = "Perfect"


@dataclass(frozen=True)
class TangencyPoint:
    """Common point of S and T 公共点

    Attributes:
        real: Whether the point is real 是否为实点
        multiplicity: Local intersection index 局部相交指数
        component: Component of S_R through a real point 实点所在分支
        x_box: Isolating box of the chart X-coordinate 图坐标 X 的隔离区间
        y_approx: Approximate chart Y-coordinate 图坐标 Y 的近似值
        pair: Conjugate-pair tag of an imaginary point 虚点的共轭对编号
    """

    real: bool
    multiplicity: int
    component: Optional[int] = None
    x_box: Optional[RootBox] = None
    y_approx: Optional[float] = None
    pair: Optional[int] = None


@dataclass
class ContactReport:
    """Contact structure of (S, T) 相切结构

    Attributes:
        is_contact: Every local index even 所有局部指数为偶数
        multiplicities: Sorted local intersection indices (sum 10) 排序后的局部相交指数
        tangency_points: Points with their multiplicities 切点
        parity: Component -> number of tangencies counted with halved multiplicity 分支切点计数
        field: Field of the parametrization 参数化所在的域
    """

    is_contact: bool
    multiplicities: list[int]
    tangency_points: list[TangencyPoint] = field(default_factory=list)
    parity: dict[int, int] = field(default_factory=dict)
    field: str = "Q"

    def is_even(self, component: int) -> bool:
        return self.parity.get(component, 0) % 2 == 0


@dataclass
class RegionReport:
    """Position of S_R relative to Θ_R 实轨迹相对于 Θ_R 的位置

    Attributes:
        theta_real_type: Real type of the conic 二次曲线的实类型
        visible: Oval index -> visible 卵形线是否可见
        j_sign: Sign of T on the one-sided component J 上 T 的符号
        theta_inside: Oval whose interior contains Θ_R, if any 包含 Θ_R 的卵形线
        positive_contains_j: The region containing J is the positive one by definition 定义上恒为真
    """

    theta_real_type: ThetaRealType
    visible: dict[int, bool]
    j_sign: int
    theta_inside: Optional[int] = None
    positive_contains_j: bool = True

    @property
    def invisible(self) -> list[int]:
        return sorted(k for k, v in self.visible.items() if not v)


@dataclass(frozen=True)
class LinePrediction:
    """Lines over a real line m 直线 m 上方的实直线预测

    Attributes:
        a: Real points of S ∩ m outside Θ Θ 外的实交点数
        b: Real points of S ∩ m inside Θ Θ 内的实交点数
        no_real_lines: b > 0 无实直线
        sheets: Unramified sheets 非分歧叶数
        folds: Fold count near an oval 卵形线附近的折叠数
    """

    a: int
    b: int
    no_real_lines: bool
    sheets: int
    folds: int


# ─── preconditions ───


def theta_real_type(t: RatPoly) -> ThetaRealType:
    """Real type of a reduced conic from its Gram signature 由 Gram 符号差给出实类型

    Raises:
        ThetaNotReduced: rank below 2 秩小于 2
    """
    g = gram_matrix(t)
    r = rank(g)
    if r < 2:
        raise ThetaNotReduced("conic has rank below 2", rank=r)
    pos, neg = signature(g)
    pos, neg = max(pos, neg), min(pos, neg)
    if r == 3:
        return ThetaRealType.EMPTY if neg == 0 else ThetaRealType.SMOOTH_NONEMPTY
    return ThetaRealType.IMAGINARY_PAIR if neg == 0 else ThetaRealType.TWO_REAL_LINES


def _check_pair(s: RatPoly, t: RatPoly) -> None:
    if not s.is_squarefree():
        raise NotSquareFree("quintic has a repeated component")
    r = rank(gram_matrix(t))
    if r < 2:
        raise ThetaNotReduced("conic has rank below 2", rank=r)
    if not s.gcd(t).is_constant():
        raise CommonComponent("quintic and conic share a component")


# ─── multiplicities by parametrization ───


def _bilinear(g: list[list[Fraction]], p: list[Any], q: list[Any]) -> Any:
    return sum(g[i][j] * p[i] * q[j] for i in range(3) for j in range(3))


def _rational_point(t: RatPoly) -> Optional[list[Fraction]]:
    """Rational point of a nondegenerate conic, None if there is none 有理点"""
    denominators = [c.denominator for c in t.terms().values()]
    scale = sympy.ilcm(*denominators) if denominators else 1
    expr = sympy.expand(t.rename(PLANE).as_expr() * scale)
    try:
        candidate = diop_ternary_quadratic(expr)
    except (ValueError, NotImplementedError, TypeError):
        candidate = (None, None, None)
    if candidate and None not in candidate:
        point = [Fraction(int(c)) for c in candidate]
        if any(point) and t.evaluate(point) == 0:
            return point
    return None


def _orthogonal_basis(g: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[Fraction]]:
    """B-orthogonal basis with diagonal values, or an isotropic vector first
    B 正交基与对角值；若遇迷向向量则将其放在首位并返回空对角
    """
    basis: list[list[Fraction]] = []
    values: list[Fraction] = []
    for i in range(3):
        v = [Fraction(int(i == j)) for j in range(3)]
        for w, d in zip(basis, values):
            coeff = _bilinear(g, v, w) / d
            v = [a - coeff * b for a, b in zip(v, w)]
        value = _bilinear(g, v, v)
        if value == 0:
            return [v], []
        basis.append(v)
        values.append(value)
    return basis, values


def conic_point(t: RatPoly) -> tuple[list[sympy.Expr], Optional[int]]:
    """A point of a nondegenerate conic, over Q or Q(√δ) 非退化二次曲线上的点

    Returns:
        (coordinates, δ) with δ None for a rational point 坐标与 δ
    """
    point = _rational_point(t)
    if point is not None:
        return [sympy.Rational(c.numerator, c.denominator) for c in point], None
    g = gram_matrix(t)
    basis, values = _orthogonal_basis(g)
    if not values:
        return [sympy.Rational(c.numerator, c.denominator) for c in basis[0]], None
    pairs = [(i, j) for i in range(3) for j in range(i + 1, 3)]
    i, j = next(((i, j) for i, j in pairs if values[i] * values[j] < 0), pairs[0])
    delta = -values[i] * values[j]
    root = sympy.sqrt(sympy.Rational(delta.numerator, delta.denominator)) / sympy.Rational(
        values[i].numerator, values[i].denominator
    )
    coords = [root * basis[i][k] + basis[j][k] for k in range(3)]
    coords = [sympy.expand(c) for c in coords]
    squarefree = sympy.sqrt(sympy.Rational(delta.numerator, delta.denominator))
    tag = None if squarefree.is_Rational else int(delta.numerator * delta.denominator)
    logger.debug("Conic point over a quadratic field", {"delta": tag})
    return coords, tag


def _finite_multiplicities(form: sympy.Expr) -> tuple[list[int], int]:
    """Multiplicities of the finite roots of F(s) and its degree 有限根重数与次数"""
    poly = Poly(sympy.expand(form), _S, extension=True)
    if poly.is_zero:
        raise CommonComponent("restriction vanishes identically")
    _, factors = poly.sqf_list()
    out: list[int] = []
    for factor, k in factors:
        out += [k] * factor.degree()
    return out, poly.degree()


def _root_multiplicities(form: sympy.Expr, degree: int) -> list[int]:
    """Root multiplicities of a binary form F(s, 1) of the given degree, roots at infinity
    included 二元型的根重数（含无穷远根）
    """
    out, actual = _finite_multiplicities(form)
    if degree > actual:
        out.append(degree - actual)
    return out


def _substitute(s: RatPoly, point: list[Any]) -> sympy.Expr:
    mapping = {sympy.Symbol(name): point[i] for i, name in enumerate(s.variables)}
    return s.as_expr().xreplace(mapping)


def _sympy_gram(t: RatPoly) -> list[list[sympy.Rational]]:
    return [[sympy.Rational(c.numerator, c.denominator) for c in row] for row in gram_matrix(t)]


def _smooth_conic_multiplicities(s: RatPoly, t: RatPoly) -> tuple[list[int], str]:
    g = _sympy_gram(t)
    p0, delta = conic_point(t)
    k = next(i for i in range(3) if p0[i] != 0)
    e1, e2 = [[int(j == i) for j in range(3)] for i in range(3) if i != k]
    d = [_S * e1[i] + _T * e2[i] for i in range(3)]
    td = _bilinear(g, d, d)
    bd = _bilinear(g, p0, d)
    # second intersection of the line through p0 in direction d 过 p0 沿 d 方向直线的第二交点
    phi = [sympy.expand(td * p0[i] - 2 * bd * d[i]) for i in range(3)]
    form = _substitute(s, phi).xreplace({_T: 1})
    mults = _root_multiplicities(form, 2 * s.total_degree())
    return mults, "Q" if delta is None else f"Q(sqrt({delta}))"


def _line_pair_multiplicities(s: RatPoly, t: RatPoly) -> tuple[list[int], str]:
    pair = split_line_pair(t)
    vertex = pair.vertex
    degree = s.total_degree()
    out: list[int] = []
    at_vertex = 0
    for c in pair.lines:
        q = next(
            p for p in (cross(c, e) for e in ([1, 0, 0], [0, 1, 0], [0, 0, 1]))
            if not is_zero_vector(cross(p, vertex))
        )
        # q + s·vertex: s = ∞ is the vertex s = ∞ 对应顶点
        pencil = [q[i] + _S * vertex[i] for i in range(3)]
        finite, actual = _finite_multiplicities(_substitute(s, pencil))
        out += finite
        at_vertex += degree - actual
    if at_vertex:
        out.append(at_vertex)
    return out, pair.field


def intersection_multiplicities(s: RatPoly, t: RatPoly) -> tuple[list[int], str]:
    """Local intersection indices of S ∩ T from a parametrization of T
    由 T 的参数化得到的局部相交指数
    """
    if rank(gram_matrix(t)) == 3:
        mults, label = _smooth_conic_multiplicities(s, t)
    else:
        mults, label = _line_pair_multiplicities(s, t)
    return sorted(mults), label


# ─── real tangency points ───


def _degree_one_subresultant(s_aff: RatPoly, t_aff: RatPoly) -> tuple[RatPoly, RatPoly]:
    """(c1, c0) with c1(X)·Y + c0(X) the degree-one subresultant in Y 一次子结式"""
    p = Poly(s_aff.as_expr(), _Y, _X, domain=QQ)
    q = Poly(t_aff.as_expr(), _Y, _X, domain=QQ)
    for sub in p.subresultants(q):
        if sub.degree(_Y) == 1:
            expr = sub.as_expr()
            c1 = sympy.expand(expr.coeff(_Y, 1))
            c0 = sympy.expand(expr.coeff(_Y, 0))
            return RatPoly.from_expr(c1, ("X", "Y")), RatPoly.from_expr(c0, ("X", "Y"))
    raise CertificationFailure("defective subresultant sequence")


def _locate_points(
    sweep: Sweep,
    t: RatPoly,
) -> list[TangencyPoint]:
    s_aff = sweep.affine
    t_aff = sweep.chart.affine(t)
    projection = resultant(s_aff, t_aff, "Y")
    c1, c0 = _degree_one_subresultant(s_aff, t_aff)
    points: list[TangencyPoint] = []
    pair = 0
    _, factors = projection.sqf_list()
    for factor, k in factors:
        p = as_upoly(factor, "X")
        if p.degree() <= 0:
            continue
        boxes = isolate_real_roots(p)
        for box in boxes:
            if sign_at_root(p, box, c1) == 0:
                raise CertificationFailure("tangency point not separated by the projection")
            component = sweep.locate(factor, box, -c0, c1)
            mid = {"X": box.midpoint, "Y": 0}
            den = c1.evaluate(mid)
            y_approx = float(-c0.evaluate(mid) / den) if den else None
            points.append(TangencyPoint(True, k, component, box, y_approx))
        for n in range(p.degree() - len(boxes)):
            points.append(TangencyPoint(False, k, pair=pair + n // 2))
        pair += (p.degree() - len(boxes)) // 2
    return points


def contact_check(
    s: RatPoly,
    t: RatPoly,
    topo: Optional[CurveTopology] = None,
    settings: Optional[AnalysisSettings] = None,
) -> ContactReport:
    """Contact test of a quintic and a conic 五次曲线与二次曲线的相切检验

    Args:
        s: Square-free quintic 无平方五次型
        t: Conic of rank at least 2 秩至少为 2 的二次型
        topo: Topology of s, recomputed when its chart is not generic for t S 的拓扑
        settings: Schedules and budgets 计划与预算

    Returns:
        ContactReport 相切报告

    Raises:
        NotSquareFree / ThetaNotReduced / CommonComponent: precondition failures 前置条件失败
    """
    settings = settings or AnalysisSettings()
    _check_pair(s, t)
    mults, label = intersection_multiplicities(s, t)
    is_contact = all(m % 2 == 0 for m in mults)
    report = ContactReport(is_contact=is_contact, multiplicities=mults, field=label)
    if not is_contact:
        logger.debug("Conic is not a contact conic", {"multiplicities": mults})
        return report
    sweep = _sweep_for(s, t, topo, settings)
    points = _locate_points(sweep, t)
    projected = sorted(p.multiplicity for p in points)
    if projected != mults:
        raise CertificationFailure(
            "projection of the intersection is not generic", expected=mults, projected=projected
        )
    report.tangency_points = points
    for comp in sweep.components:
        report.parity[comp.index] = 0
    for p in points:
        if p.real and p.component is not None:
            report.parity[p.component] += p.multiplicity // 2
    logger.debug("Contact certified", {"field": label, "real": sum(1 for p in points if p.real)})
    return report


def _sweep_for(
    s: RatPoly, t: RatPoly, topo: Optional[CurveTopology], settings: AnalysisSettings
) -> Sweep:
    if topo is not None:
        if topo.sweep.admits([t]):
            return topo.sweep
        logger.debug("Topology chart not generic for the conic, rebuilding", topo.chart.describe())
    return topology(s, must_be_smooth=False, settings=settings, companions=[t]).sweep


# ─── regions ───


def _theta_sample(sweep: Sweep, t: RatPoly) -> Optional[tuple[Fraction, RatPoly, RootBox]]:
    """A real point of Θ on a non-critical fiber, away from S 不在 S 上的 Θ 实点"""
    t_aff = sweep.chart.affine(t)
    disc = as_upoly(resultant(t_aff, t_aff.diff("Y"), "Y"), "X") if t_aff.degree("Y") == 2 else None
    candidates = list(sweep.samples)
    if disc is not None and disc.degree() > 0:
        boxes = isolate_real_roots(disc)
        edges = [b.lo for b in boxes] + [b.hi for b in boxes]
        candidates += [
            (edges[i] + edges[j]) / 2 for i in range(len(edges)) for j in range(i + 1, len(edges))
        ]
        candidates += [min(edges) - 1, max(edges) + 1]
    for x in candidates:
        try:
            sweep.slab_of(x)
        except OnCurve:
            continue
        fiber = t_aff.specialize({"X": x}, ("Y",))
        if fiber.is_zero:
            continue
        for box in isolate_real_roots(fiber, "Y"):
            if sign_at_root(fiber, box, sweep.fiber_poly(x)) != 0:
                return x, fiber, box
    return None


def _inside_at_root(sweep: Sweep, oval: int, x: Fraction, poly: RatPoly, box: RootBox) -> bool:
    s_poly, s_boxes, labels = sweep.labelled_fiber(x)
    sample = box
    above = 0
    for s_box, label in zip(s_boxes, labels):
        for _ in range(sweep.budget):
            if s_box.separated_from(sample):
                break
            sample = bisect(poly, sample)
            s_box = bisect(s_poly, s_box)
        if not s_box.separated_from(sample):
            raise CertificationFailure("theta point too close to the quintic")
        if label == oval and s_box.lo > sample.hi:
            above += 1
    return above % 2 == 1


def region_report(
    s: RatPoly,
    t: RatPoly,
    topo: CurveTopology,
    settings: Optional[AnalysisSettings] = None,
) -> RegionReport:
    """Visibility of ovals with respect to Θ_R 卵形线相对于 Θ_R 的可见性"""
    settings = settings or AnalysisSettings()
    kind = theta_real_type(t)
    sweep = _sweep_for(s, t, topo, settings)
    t_aff = sweep.chart.affine(t)
    j = sweep.one_sided
    j_sign = sweep.sign_on_component(j.index, t_aff) if j is not None else 0
    ovals = [c.index for c in sweep.ovals]
    if kind is ThetaRealType.EMPTY:
        return RegionReport(kind, {o: True for o in ovals}, j_sign)
    visible = {}
    for o in ovals:
        sign = sweep.sign_on_component(o, t_aff)
        if sign == 0 or j_sign == 0:
            raise CertificationFailure("conic vanishes on every sample arc", component=o)
        visible[o] = sign == j_sign
    inside = _theta_inside(sweep, t, kind, ovals)
    invisible = [o for o, v in visible.items() if not v]
    logger.debug("Region report", {"theta": kind.value, "invisible": invisible})
    return RegionReport(kind, visible, j_sign, theta_inside=inside)


def _theta_inside(sweep: Sweep, t: RatPoly, kind: ThetaRealType, ovals: list[int]) -> Optional[int]:
    if kind is ThetaRealType.TWO_REAL_LINES or not ovals:
        return None
    if kind is ThetaRealType.IMAGINARY_PAIR:
        vertex = nullspace(gram_matrix(t))[0]
        affine = sweep.chart.to_affine(vertex)
        if affine is None:
            return None
        for o in ovals:
            try:
                if sweep.inside(o, affine[0], affine[1]):
                    return o
            except OnCurve:
                return None
        return None
    sample = _theta_sample(sweep, t)
    if sample is None:
        raise CertificationFailure("no real point of the conic found off the quintic")
    x, poly, box = sample
    inside = [o for o in ovals if _inside_at_root(sweep, o, x, poly, box)]
    return inside[-1] if inside else None


def skew_test(
    s: RatPoly,
    t: RatPoly,
    topo: CurveTopology,
    contact: Optional[ContactReport] = None,
    region: Optional[RegionReport] = None,
    settings: Optional[AnalysisSettings] = None,
) -> Verdict:
    """Skew iff every oval has even contact, is visible, and no oval contains Θ_R
    所有卵形线偶相切、可见且不包含 Θ_R 时为斜匹配

    Raises:
        InputError: T is not a contact conic of S T 不是 S 的相切二次曲线
    """
    contact = contact or contact_check(s, t, topo, settings)
    if not contact.is_contact:
        raise InputError("conic is not a contact conic of the quintic")
    region = region or region_report(s, t, topo, settings)
    sweep = _sweep_for(s, t, topo, settings or AnalysisSettings())
    ovals = [c.index for c in sweep.ovals]
    even = all(contact.is_even(o) for o in ovals)
    visible = all(region.visible.get(o, True) for o in ovals)
    verdict = Verdict.SKEW if even and visible and region.theta_inside is None else Verdict.PERFECT
    logger.debug("Skew test", {"even": even, "visible": visible, "verdict": verdict.value})
    return verdict


# ─── lines ───


def _line_points(m: RatPoly) -> list[list[Fraction]]:
    coeffs = [m.coefficient(tuple(int(i == j) for j in range(3))) for i in range(3)]
    if m.total_degree() != 1 or not any(coeffs):
        raise NonGenericLine("m must be a linear form")
    return nullspace([coeffs])


def _restrict(f: RatPoly, points: list[list[Fraction]]) -> RatPoly:
    images = {
        name: RatPoly.from_dict({(1, 0): points[0][i], (0, 1): points[1][i]}, ("s", "t"))
        for i, name in enumerate(f.variables)
    }
    return f.substitute(images, ("s", "t"))


def line_intersection_type(
    s: RatPoly,
    t: RatPoly,
    m: RatPoly,
    topo: CurveTopology,
    oval: Optional[int] = None,
    settings: Optional[AnalysisSettings] = None,
) -> LinePrediction:
    """Count real points of S ∩ m outside (a) and inside (b) Θ and predict the real lines
    统计 m 与 S 在 Θ 外 (a)、内 (b) 的实交点并预测实直线数

    Args:
        m: Linear form of a real line 实直线的线性型
        oval: An oval the line passes near; invisible ovals carry folds only 附近的卵形线

    Raises:
        NonGenericLine: m tangent to S or T, or through S ∩ T 直线不一般
    """
    settings = settings or AnalysisSettings()
    points = _line_points(m)
    s_m = _restrict(s, points)
    t_m = _restrict(t, points)
    if s_m.is_zero or t_m.is_zero:
        raise NonGenericLine("line is a component of S or T")
    if not s_m.is_squarefree() or not t_m.is_squarefree():
        raise NonGenericLine("line is tangent to S or T")
    if not s_m.gcd(t_m).is_constant():
        raise NonGenericLine("line passes through S ∩ T")
    sweep = _sweep_for(s, t, topo, settings)
    j = sweep.one_sided
    j_sign = sweep.sign_on_component(j.index, sweep.chart.affine(t)) if j is not None else 1
    s_line = s_m.specialize({"t": 1}, ("s",))
    t_line = t_m.specialize({"t": 1}, ("s",))
    signs = [sign_at_root(s_line, box, t_line) for box in isolate_real_roots(s_line, "s")]
    if s_line.total_degree() < s_m.total_degree():
        # the point (1 : 0) is a root 点 (1:0) 为根
        signs.append(_sign(t.evaluate(points[0])))
    a = sum(1 for v in signs if v == j_sign)
    b = len(signs) - a
    if b > 0:
        return LinePrediction(a, b, True, 0, 0)
    sheets = 2 ** ((a + 3) // 2)
    folds = 2 ** ((a + 1) // 2)
    if oval is not None:
        region = region_report(s, t, topo, settings)
        if not region.visible.get(oval, True):
            sheets = 0
    return LinePrediction(a, b, False, sheets, folds)


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)
