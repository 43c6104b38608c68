"""Topology and class codes of real plane curves 实平面曲线的拓扑与类代码"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from ..algebra import RatPoly, RootBox, as_upoly, count_roots, inverse, isolate_real_roots, refine
from ..errors import CertificationFailure, ConvexityUndecided, SingularInput
from ..models.config import AnalysisSettings
from ..utils.logger import logger
from .chart import Chart
from .singular import singular_locus
from .sweep import OnCurve, Sweep

# Quintic class codes 五次曲线类代码
J = "J"
NEST = "J⊔1⟨1⟩"
FOUR_I = "J⊔4_I"
FOUR_II = "J⊔4_II"
QUINTIC_CLASSES = ["J", "J⊔1", "J⊔2", "J⊔3", FOUR_I, FOUR_II, "J⊔5", "J⊔6", NEST]

MAX_QUINTIC_OVALS = 6

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Oval:
    """Two-sided component 双侧分支

    Attributes:
        index: Component index in the sweep 扫描中的分支编号
        witness: Interior point in chart coordinates 图坐标中的内点
        parent: Index of the enclosing oval, if any 外围卵形线编号
    """

    index: int
    witness: Point
    parent: Optional[int] = None


@dataclass(frozen=True)
class ArcPoint:
    """A real point of the curve: rational x and an isolating Y-interval 曲线上的实点"""

    x: Fraction
    y_lo: Fraction
    y_hi: Fraction


@dataclass
class CurveTopology:
    """Certified topology of a real plane curve 实平面曲线的认证拓扑

    Attributes:
        degree: Curve degree 次数
        class_code: Class code such as "J⊔4_II" 类代码
        ovals: Ovals with witnesses and nesting 卵形线
        j_witness: Point on the one-sided component (odd degree) 单侧分支上的点
        chart: Chart used by the sweep 所用仿射图
        critical_count: Number of real critical values 实临界值个数
        slab_count: Number of slabs 条带数
    """

    degree: int
    class_code: str
    ovals: list[Oval]
    j_witness: Optional[ArcPoint]
    chart: Chart
    critical_count: int
    slab_count: int
    sweep: Sweep = field(repr=False, compare=False)

    @property
    def oval_count(self) -> int:
        return len(self.ovals)

    @property
    def j_index(self) -> Optional[int]:
        comp = self.sweep.one_sided
        return comp.index if comp is not None else None

    def oval(self, index: int) -> Oval:
        return next(o for o in self.ovals if o.index == index)


# ─── class codes ───


def class_code(degree: int, oval_count: int, nested: int, four_type: Optional[str] = None) -> str:
    """Code of a curve from its oval data 由卵形线数据给出类代码

    Args:
        degree: Curve degree 次数
        oval_count: Number of ovals 卵形线数
        nested: Number of ovals with a parent 有外围卵形线的个数
        four_type: "I" or "II" for four ovals of a quintic 五次曲线四卵形线的类型
    """
    head = "J" if degree % 2 else ""
    if nested:
        outer = oval_count - nested
        body = f"{outer}⟨{nested}⟩" if outer == 1 else f"{oval_count}({nested} nested)"
    elif oval_count == 4 and four_type:
        body = f"4_{four_type}"
    else:
        body = str(oval_count) if oval_count or not head else ""
    if not head:
        return body
    return head + (f"⊔{body}" if body else "")


def _check_quintic(ovals: list[Oval]) -> None:
    nested = [o for o in ovals if o.parent is not None]
    if len(ovals) > MAX_QUINTIC_OVALS:
        raise CertificationFailure("a smooth quintic has at most six ovals", ovals=len(ovals))
    if nested and (len(ovals) != 2 or len(nested) != 1):
        raise CertificationFailure(
            "nesting only occurs for a single pair of ovals", ovals=len(ovals)
        )


# ─── convexity of four ovals ───


class _Ambiguous(Exception):
    """Witness choice does not certify the convexity test 内点选择无法认证"""


def _edge_crossings(
    sweep: Sweep,
    a: Sequence[Fraction],
    b: Sequence[Fraction],
    oval_ids: list[int],
) -> list[Optional[int]]:
    """Curve crossings of the segment a→b in R³ (lifted), as oval index or None for J
    线段与曲线的交点：卵形线编号，或 None 表示 J
    """
    f = sweep.curve
    names = f.variables
    images = {
        name: RatPoly.from_dict({(0,): a[i], (1,): b[i] - a[i]}, ("t",))
        for i, name in enumerate(names)
    }
    h = f.substitute(images, ("t",))
    if h.is_zero:
        raise _Ambiguous("edge lies on the curve")
    w_start = a[2] + sweep.chart.a * a[0] + sweep.chart.b * a[1]
    w_slope = (b[2] - a[2]) + sweep.chart.a * (b[0] - a[0]) + sweep.chart.b * (b[1] - a[1])
    w_root = -w_start / w_slope if w_slope else None
    crossings: list[Optional[int]] = []
    for box in isolate_real_roots(h, "t"):
        if box.multiplicity > 1:
            raise _Ambiguous("edge tangent to the curve")
        box = _inside_unit(h, box, sweep.budget)
        if box is None:
            continue
        lo, hi = _open_box(h, box, w_root, sweep.budget)
        before = _inside_vector(sweep, _lerp(a, b, lo), oval_ids)
        after = _inside_vector(sweep, _lerp(a, b, hi), oval_ids)
        toggled = [oid for oid, s, e in zip(oval_ids, before, after) if s != e]
        if len(toggled) > 1:
            raise _Ambiguous("crossing toggles several ovals")
        crossings.append(toggled[0] if toggled else None)
    return crossings


def _inside_unit(h: RatPoly, box: RootBox, budget: int) -> Optional[RootBox]:
    """The box if its root lies in (0, 1), None otherwise 根在 (0,1) 内时返回区间"""
    for _ in range(budget):
        if box.exact is not None:
            return box if 0 < box.exact < 1 else None
        if box.hi <= 0 or box.lo >= 1:
            return None
        if 0 < box.lo and box.hi < 1:
            return box
        box = refine(h, box, box.width / 2)
    raise _Ambiguous("edge root near an endpoint")


def _open_box(
    h: RatPoly, box: RootBox, avoid: Optional[Fraction], budget: int
) -> tuple[Fraction, Fraction]:
    """Open rational bracket of the root that excludes `avoid` 排除给定值的开区间"""
    if box.exact is not None:
        delta = Fraction(1, 2 ** 8)
        root = box.exact
        for _ in range(budget):
            lo, hi = root - delta, root + delta
            clean = avoid is None or not lo <= avoid <= hi
            isolated = count_roots(as_upoly(h, "t"), lo, hi) == 1
            if clean and isolated and h.evaluate({"t": lo}) != 0 and h.evaluate({"t": hi}) != 0:
                return lo, hi
            delta /= 2
        raise _Ambiguous("could not bracket a rational edge root")
    for _ in range(budget):
        if avoid is None or not box.lo <= avoid <= box.hi:
            return box.lo, box.hi
        box = refine(h, box, box.width / 2)
        if box.exact is not None:
            return _open_box(h, box, avoid, budget)
    raise _Ambiguous("edge root too close to the line at infinity")


def _lerp(a: Sequence[Fraction], b: Sequence[Fraction], t: Fraction) -> list[Fraction]:
    return [(1 - t) * a[i] + t * b[i] for i in range(3)]


def _inside_vector(sweep: Sweep, p: Sequence[Fraction], oval_ids: list[int]) -> list[bool]:
    affine = sweep.chart.to_affine(p)
    if affine is None:
        raise _Ambiguous("test point at infinity")
    try:
        return [sweep.inside(oid, affine[0], affine[1]) for oid in oval_ids]
    except OnCurve as exc:
        raise _Ambiguous(str(exc)) from exc


def _triangle_verdicts(
    sweep: Sweep,
    lifts: list[list[Fraction]],
    excluded: int,
    oval_ids: list[int],
) -> list[bool]:
    """Containment verdicts over the J-free triangles spanned by the other three witnesses
    其余三个内点张成的不交 J 三角形对被排除卵形线的包含判定
    """
    others = [i for i in range(4) if i != excluded]
    base = lifts[others[0]]
    verdicts = []
    for signs in itertools.product((1, -1), repeat=2):
        vertices = [base] + [[s * c for c in lifts[others[k + 1]]] for k, s in enumerate(signs)]
        crossed: list[Optional[int]] = []
        for u, v in ((0, 1), (1, 2), (2, 0)):
            crossed += _edge_crossings(sweep, vertices[u], vertices[v], oval_ids)
        if None in crossed:
            continue
        if oval_ids[excluded] in crossed:
            raise _Ambiguous("hull edge crosses the tested oval")
        columns = [[vertices[k][i] for k in range(3)] for i in range(3)]
        try:
            inv = inverse(columns)
        except ZeroDivisionError as exc:
            raise _Ambiguous("collinear witnesses") from exc
        alpha = [sum(row[j] * lifts[excluded][j] for j in range(3)) for row in inv]
        if any(c == 0 for c in alpha):
            raise _Ambiguous("witness on a hull edge")
        verdicts.append(all(c > 0 for c in alpha) or all(c < 0 for c in alpha))
    if not verdicts:
        raise _Ambiguous("no J-free triangle")
    if len(set(verdicts)) > 1:
        raise _Ambiguous("J-free triangles disagree")
    return verdicts


def four_oval_type(sweep: Sweep, oval_ids: list[int], budget: int) -> str:
    """"I" when some oval lies in the triangle of the other three, "II" for convex position
    某个卵形线位于其余三者的三角形内为 "I"，凸位置为 "II"

    Raises:
        ConvexityUndecided: no witness choice certified the test 内点选择均无法认证
    """
    candidates = [sweep.witness_candidates(oid) for oid in oval_ids]
    attempts = 0
    for combo in itertools.product(*candidates):
        if attempts >= budget:
            break
        attempts += 1
        lifts = [sweep.chart.lift(x, y) for x, y in combo]
        try:
            contained = any(all(_triangle_verdicts(sweep, lifts, d, oval_ids)) for d in range(4))
        except _Ambiguous as exc:
            logger.debug("Convexity witnesses ambiguous", {"attempt": attempts, "reason": str(exc)})
            continue
        return "I" if contained else "II"
    raise ConvexityUndecided("four-oval convexity not certified", attempts=attempts)


# ─── topology ───


def _ovals(sweep: Sweep) -> list[Oval]:
    ids = [c.index for c in sweep.ovals]
    witnesses = {oid: sweep.witness(oid) for oid in ids}
    enclosing: dict[int, list[int]] = {oid: [] for oid in ids}
    for a in ids:
        x, y = witnesses[a]
        for b in ids:
            if a != b and sweep.inside(b, x, y):
                enclosing[a].append(b)
    ovals = []
    for oid in ids:
        parents = enclosing[oid]
        parent = max(parents, key=lambda p: len(enclosing[p])) if parents else None
        ovals.append(Oval(index=oid, witness=witnesses[oid], parent=parent))
    return ovals


def topology(
    f: RatPoly,
    must_be_smooth: bool = True,
    settings: Optional[AnalysisSettings] = None,
    companions: Sequence[RatPoly] = (),
    chart: Optional[Chart] = None,
) -> CurveTopology:
    """Certified topology of a real plane curve of degree at most 5
    次数不超过 5 的实平面曲线的认证拓扑

    Args:
        f: Ternary form 三元型
        must_be_smooth: Reject singular curves up front 预先拒绝奇异曲线
        settings: Schedules and budgets 计划与预算
        companions: Curves the chart must also be generic for 仿射图需同时满足的伴随曲线
        chart: Force one chart 指定仿射图

    Returns:
        CurveTopology with class code, ovals and J witness 拓扑结果

    Raises:
        SingularInput: singular curve with must_be_smooth 奇异曲线
        ChartFailure: no generic chart 无一般仿射图
        ConvexityUndecided: four-oval type not certified 四卵形线类型未认证
    """
    settings = settings or AnalysisSettings()
    degree = f.total_degree()
    if degree > 5:
        raise SingularInput("topology is limited to degree at most 5", degree=degree)
    if must_be_smooth and not singular_locus(f, settings).smooth:
        raise SingularInput("smooth curve required")
    sweep = Sweep.build(f, settings, companions=companions, chart=chart)
    ovals = _ovals(sweep)
    nested = sum(1 for o in ovals if o.parent is not None)
    four_type = None
    if degree == 5:
        _check_quintic(ovals)
        if len(ovals) == 4:
            four_type = four_oval_type(sweep, [o.index for o in ovals], settings.refine_budget)
    j_witness = None
    if sweep.one_sided is not None:
        x, box = sweep.arc_point(sweep.one_sided.index)
        j_witness = ArcPoint(x, box.lo, box.hi)
    code = class_code(degree, len(ovals), nested, four_type)
    logger.debug("Topology certified", {"class": code, **sweep.describe()})
    return CurveTopology(
        degree=degree,
        class_code=code,
        ovals=ovals,
        j_witness=j_witness,
        chart=sweep.chart,
        critical_count=len(sweep.criticals),
        slab_count=len(sweep.samples),
        sweep=sweep,
    )
