"""Exact vertical sweep of a real plane curve 实平面曲线的精确竖直扫描

Between consecutive real critical values of the projection (X, Y) ↦ X the real fiber has a
constant number of roots. Arcs of adjacent slabs are glued across each simple fold, and the two
outer slabs are glued through the line at infinity; the resulting circles are the components
of the real locus.
相邻临界值之间实纤维的根数不变；跨过每个简单折叠把相邻条带的弧粘合，两端条带经无穷远直线粘合，
得到的圆即实轨迹的连通分支。
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from sympy import Poly

from ..algebra import (
    RatPoly,
    RootBox,
    as_upoly,
    bisect,
    count_roots,
    isolate_real_roots,
    resultant,
    sign_at_root,
    to_fraction,
    to_rational,
)
from ..errors import ChartFailure, CertificationFailure
from ..models.config import AnalysisSettings
from ..utils.logger import logger
from .chart import Chart, chart_candidates

Arc = tuple[int, int]


class RejectChart(Exception):
    """The current chart is not generic for the sweep 当前仿射图不满足一般性"""


class OnCurve(Exception):
    """A query point could not be separated from the curve 查询点无法与曲线分离"""


@dataclass
class _Critical:
    """Open isolating interval of a critical value 临界值的开隔离区间"""

    lo: Fraction
    hi: Fraction
    exact: Optional[Fraction] = None

    def straddles(self, x: Fraction) -> bool:
        return self.lo < x < self.hi


@dataclass
class SweepComponent:
    """Connected component assembled from arcs 由弧拼成的连通分支

    Attributes:
        index: Position in sweep order 扫描顺序中的编号
        arcs: (slab, arc) pairs 条带与弧编号
        infinity_gluings: Crossings of the line at infinity 穿过无穷远直线的次数
    """

    index: int
    arcs: list[Arc] = field(default_factory=list)
    infinity_gluings: int = 0

    @property
    def one_sided(self) -> bool:
        return self.infinity_gluings % 2 == 1


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def separate_boxes(poly: RatPoly, boxes: list[RootBox]) -> list[RootBox]:
    """Bisect neighbours until consecutive boxes have a strict gap 使相邻隔离区间严格分开"""
    out = list(boxes)
    i = 0
    while i + 1 < len(out):
        if out[i].hi < out[i + 1].lo:
            i += 1
            continue
        out[i] = bisect(poly, out[i])
        out[i + 1] = bisect(poly, out[i + 1])
    return out


def gap_levels(boxes: list[RootBox]) -> list[Fraction]:
    """Rational levels strictly between consecutive roots 相邻根之间的有理水平"""
    return [(boxes[i].hi + boxes[i + 1].lo) / 2 for i in range(len(boxes) - 1)]


def clear_of(poly: RatPoly, box: RootBox, y: Fraction, budget: int) -> RootBox:
    """Shrink `box` until it excludes y 缩小区间直到不含 y

    Raises:
        OnCurve: y is the root itself y 恰为该根
    """
    current = box
    for _ in range(budget):
        if current.exact is not None:
            if current.exact == y:
                raise OnCurve(str(y))
            return current
        if not current.lo <= y <= current.hi:
            return current
        current = bisect(poly, current)
    raise OnCurve(str(y))


class Sweep:
    """Cylindrical decomposition of one curve in one chart 一条曲线在一个仿射图中的柱形分解

    Attributes:
        curve: Ternary form 三元型
        chart: Affine chart in use 所用仿射图
        affine: Curve in chart coordinates (X, Y) 图坐标下的曲线
        samples: Rational sample abscissa per slab 每个条带的有理采样横坐标
        fibers: Root boxes of the sample fibers 采样纤维的根区间
        folds: Fold index of each critical value 每个临界值的折叠位置
        labels: Component index per arc per slab 每条弧所属分支
        components: Components in sweep order 按扫描顺序的分支
    """

    def __init__(self, curve: RatPoly, chart: Chart, settings: AnalysisSettings):
        self.curve = curve
        self.chart = chart
        self.budget = settings.refine_budget
        self.affine = chart.affine(curve)
        self.degree = curve.total_degree()
        self.criticals: list[_Critical] = []
        self.samples: list[Fraction] = []
        self.fibers: list[list[RootBox]] = []
        self.folds: list[int] = []
        self.labels: list[list[int]] = []
        self.components: list[SweepComponent] = []
        self._discriminant: Optional[Poly] = None

    # ─── construction ───

    @classmethod
    def build(
        cls,
        curve: RatPoly,
        settings: Optional[AnalysisSettings] = None,
        companions: Iterable[RatPoly] = (),
        chart: Optional[Chart] = None,
    ) -> "Sweep":
        """Sweep in the first generic chart of the schedule 在计划中第一个一般仿射图中扫描

        Args:
            curve: Square-free smooth ternary form 无平方光滑三元型
            settings: Schedules and refinement budget 计划与细化预算
            companions: Curves that must also avoid the vertical point and meet the curve
                away from the line at infinity 需同时满足一般性的伴随曲线
            chart: Force a single chart instead of the schedule 指定单个仿射图

        Raises:
            ChartFailure: no chart was generic 没有一般的仿射图
        """
        settings = settings or AnalysisSettings()
        extra = list(companions)
        charts = [chart] if chart is not None else list(chart_candidates(settings))
        for candidate in charts:
            sweep = cls(curve, candidate, settings)
            try:
                sweep._check_companions(extra)
                sweep._run()
            except RejectChart as exc:
                logger.debug("Chart rejected", {**candidate.describe(), "reason": str(exc)})
                continue
            logger.debug(
                "Sweep built",
                {**candidate.describe(), "criticals": len(sweep.criticals),
                 "components": len(sweep.components)},
            )
            return sweep
        raise ChartFailure("no chart in the schedule gives a generic sweep", tried=len(charts))

    def admits(self, companions: Iterable[RatPoly]) -> bool:
        """Whether the chart is also generic for the companions 仿射图对伴随曲线是否一般"""
        try:
            self._check_companions(list(companions))
        except RejectChart:
            return False
        return True

    def _check_companions(self, companions: list[RatPoly]) -> None:
        ours = self.chart.at_infinity(self.curve)
        for other in companions:
            if self.chart.homogeneous(other).evaluate((0, 1, 0)) == 0:
                raise RejectChart("companion passes through the vertical point")
            if not ours.gcd(self.chart.at_infinity(other)).is_constant():
                raise RejectChart("companion meets the curve at infinity")

    def _run(self) -> None:
        at_infinity = self.chart.at_infinity(self.curve)
        if at_infinity.is_zero or not at_infinity.is_squarefree():
            raise RejectChart("line at infinity is not transverse")
        if self.chart.homogeneous(self.curve).evaluate((0, 1, 0)) == 0:
            raise RejectChart("vertical asymptote")
        self._find_criticals()
        self._sample_slabs()
        self._localize_folds()
        self._glue()

    def _find_criticals(self) -> None:
        disc = resultant(self.affine, self.affine.diff("Y"), "Y")
        if disc.is_zero:
            raise RejectChart("vanishing discriminant")
        dp = as_upoly(disc, "X")
        if dp.degree() > 0 and dp.gcd(dp.diff()).degree() > 0:
            raise RejectChart("critical values are not simple")
        self._discriminant = dp
        criticals: list[_Critical] = []
        for box in isolate_real_roots(dp):
            if box.exact is None:
                criticals.append(_Critical(box.lo, box.hi))
                continue
            delta = Fraction(1)
            while count_roots(dp, box.exact - delta, box.exact + delta) != 1:
                delta /= 2
            criticals.append(_Critical(box.exact - delta, box.exact + delta, box.exact))
        i = 0
        while i + 1 < len(criticals):
            if criticals[i].hi < criticals[i + 1].lo:
                i += 1
                continue
            self._shrink(criticals[i])
            self._shrink(criticals[i + 1])
        self.criticals = criticals

    def _shrink(self, c: _Critical) -> None:
        """Halve a critical interval 二分临界区间"""
        assert self._discriminant is not None
        if c.exact is not None:
            c.lo, c.hi = (c.lo + c.exact) / 2, (c.hi + c.exact) / 2
            return
        mid = (c.lo + c.hi) / 2
        v = _eval(self._discriminant, mid)
        if v == 0:
            quarter = (c.hi - c.lo) / 4
            c.lo, c.hi, c.exact = mid - quarter, mid + quarter, mid
        elif _sign(_eval(self._discriminant, c.lo)) * _sign(v) < 0:
            c.hi = mid
        else:
            c.lo = mid

    def _sample_slabs(self) -> None:
        crit = self.criticals
        if not crit:
            samples = [Fraction(0)]
        else:
            samples = [crit[0].lo - 1]
            samples += [(crit[i].hi + crit[i + 1].lo) / 2 for i in range(len(crit) - 1)]
            samples.append(crit[-1].hi + 1)
        self.samples = samples
        self.fibers = [self.fiber(x) for x in samples]

    def _localize_folds(self) -> None:
        folds = []
        for i, c in enumerate(self.criticals):
            n_left, n_right = len(self.fibers[i]), len(self.fibers[i + 1])
            if abs(n_left - n_right) != 2:
                raise RejectChart(f"critical value {i} is not a simple fold")
            folds.append(self._fold_index(c, closing=n_left > n_right))
        self.folds = folds

    def _fold_index(self, c: _Critical, closing: bool) -> int:
        """Position of the arc pair meeting at a fold 折叠处汇合的弧对位置"""
        for _ in range(self.budget):
            near, far = (c.lo, c.hi) if closing else (c.hi, c.lo)
            levels = gap_levels(self.fiber(near))
            crossed = [
                count_roots(as_upoly(self.affine.specialize({"Y": h}, ("X",)), "X"), c.lo, c.hi) > 0
                for h in levels
            ]
            if crossed.count(True) == 1:
                j = crossed.index(True)
                if self._fold_consistent(far, levels, j):
                    return j
            self._shrink(c)
        raise RejectChart("fold could not be localized within budget")

    def _fold_consistent(self, far: Fraction, levels: list[Fraction], j: int) -> bool:
        far_poly = self.fiber_poly(far)
        boxes = self.fiber(far)
        for i, h in enumerate(levels):
            if i == j:
                continue
            try:
                cleared = [clear_of(far_poly, b, h, self.budget) for b in boxes]
            except OnCurve:
                return False
            below = sum(1 for b in cleared if b.hi < h)
            if below != (i + 1 if i < j else i - 1):
                return False
        return True

    def _glue(self) -> None:
        sizes = [len(f) for f in self.fibers]
        offsets = [sum(sizes[:s]) for s in range(len(sizes))]
        uf = _UnionFind(sum(sizes))

        def node(slab: int, r: int) -> int:
            return offsets[slab] + r

        for i, j in enumerate(self.folds):
            closing = sizes[i] > sizes[i + 1]
            big, small = (i, i + 1) if closing else (i + 1, i)
            uf.union(node(big, j), node(big, j + 1))
            for r in range(sizes[big]):
                if r < j:
                    uf.union(node(big, r), node(small, r))
                elif r > j + 1:
                    uf.union(node(big, r), node(small, r - 2))

        last = len(sizes) - 1
        if sizes[0] != sizes[last]:
            raise RejectChart("outer fibers differ")
        n = sizes[0]
        for k in range(n):
            uf.union(node(last, k), node(0, n - 1 - k))

        roots: dict[int, list[Arc]] = {}
        for s, size in enumerate(sizes):
            for r in range(size):
                roots.setdefault(uf.find(node(s, r)), []).append((s, r))
        ordered = sorted(roots.items(), key=lambda item: min(item[1]))
        index_of = {root: idx for idx, (root, _) in enumerate(ordered)}
        components = [
            SweepComponent(index=idx, arcs=sorted(arcs)) for idx, (_, arcs) in enumerate(ordered)
        ]
        for k in range(n):
            components[index_of[uf.find(node(last, k))]].infinity_gluings += 1
        for comp in components:
            if comp.infinity_gluings and not comp.one_sided:
                raise RejectChart("an oval meets the line at infinity")
        self.labels = [
            [index_of[uf.find(node(s, r))] for r in range(size)] for s, size in enumerate(sizes)
        ]
        self.components = components
        odd = sum(1 for comp in components if comp.one_sided)
        if odd != self.degree % 2:
            raise RejectChart("one-sided component count disagrees with degree parity")

    # ─── fibers ───

    def fiber_poly(self, x: Fraction) -> RatPoly:
        """Vertical fiber polynomial in Y 竖直纤维多项式"""
        return self.affine.specialize({"X": x}, ("Y",))

    def fiber(self, x: Fraction) -> list[RootBox]:
        """Separated root boxes of the fiber at a non-critical x 非临界 x 处的纤维根区间"""
        poly = self.fiber_poly(x)
        return separate_boxes(poly, isolate_real_roots(poly, "Y"))

    def slab_of(self, x: Fraction) -> int:
        """Slab containing a rational abscissa 有理横坐标所在条带

        Raises:
            OnCurve: x is a critical value x 为临界值
        """
        x = Fraction(x)
        for c in self.criticals:
            rounds = 0
            while c.straddles(x):
                if c.exact == x or rounds >= self.budget:
                    raise OnCurve(f"x = {x} is critical")
                self._shrink(c)
                rounds += 1
        return sum(1 for c in self.criticals if c.hi <= x)

    def labelled_fiber(self, x: Fraction) -> tuple[RatPoly, list[RootBox], list[int]]:
        """Fiber at x with the component of every root 带分支标签的纤维"""
        slab = self.slab_of(x)
        poly = self.fiber_poly(x)
        boxes = self.fibers[slab] if x == self.samples[slab] else self.fiber(x)
        return poly, boxes, self.labels[slab]

    # ─── queries ───

    @property
    def ovals(self) -> list[SweepComponent]:
        return [c for c in self.components if not c.one_sided]

    @property
    def one_sided(self) -> Optional[SweepComponent]:
        return next((c for c in self.components if c.one_sided), None)

    def inside(self, oval: int, x: Fraction, y: Fraction) -> bool:
        """Whether (x, y) lies in the disk bounded by an oval 点是否在卵形线围成的圆盘内

        Counts the oval's roots above y on the vertical through x.
        计算过 x 的竖直线上 y 以上该卵形线的根数。

        Raises:
            OnCurve: the point could not be separated from the curve 无法与曲线分离
        """
        poly, boxes, labels = self.labelled_fiber(x)
        above = 0
        for box, label in zip(boxes, labels):
            box = clear_of(poly, box, Fraction(y), self.budget)
            if label == oval and box.lo > y:
                above += 1
        return above % 2 == 1

    def witness_candidates(self, oval: int) -> list[tuple[Fraction, Fraction]]:
        """Interior points just above the oval's lowest arc, central slabs first
        卵形线最低弧上方的内点，中间条带优先
        """
        slabs = sorted({s for s, _ in self.components[oval].arcs})
        middle = slabs[len(slabs) // 2]
        out = []
        for s in sorted(slabs, key=lambda v: (abs(v - middle), v)):
            r = min(r for r, label in enumerate(self.labels[s]) if label == oval)
            boxes = self.fibers[s]
            out.append((self.samples[s], (boxes[r].hi + boxes[r + 1].lo) / 2))
        return out

    def witness(self, oval: int) -> tuple[Fraction, Fraction]:
        return self.witness_candidates(oval)[0]

    def arc_point(self, component: int) -> tuple[Fraction, RootBox]:
        """A sample fiber root on the component 分支上的一个采样根"""
        for s, r in self.components[component].arcs:
            return self.samples[s], self.fibers[s][r]
        raise CertificationFailure("component without arcs")

    def sign_on_component(self, component: int, h: RatPoly) -> int:
        """Sign of an affine polynomial at a point of the component 多项式在分支上一点处的符号

        Tries the sample arcs in order and returns the first nonzero sign (0 if h vanishes
        on every sample arc).
        依次尝试采样弧，返回第一个非零符号。
        """
        for s, r in self.components[component].arcs:
            x = self.samples[s]
            value = sign_at_root(
                self.fiber_poly(x), self.fibers[s][r], h.specialize({"X": x}, ("Y",))
            )
            if value:
                return value
        return 0

    def locate(
        self,
        x_poly: RatPoly,
        x_box: RootBox,
        y_num: RatPoly,
        y_den: RatPoly,
    ) -> int:
        """Component through the point (ξ, y_num(ξ)/y_den(ξ)), ξ the root of x_poly in x_box
        定位代数点所在的分支

        Raises:
            CertificationFailure: the point could not be placed within budget 无法定位
        """
        box = x_box
        den_sign = sign_at_root(x_poly, box, y_den)
        if den_sign == 0:
            raise CertificationFailure("vanishing denominator at the located point")
        for _ in range(self.budget):
            if box.exact is not None:
                return self._locate_exact(box.exact, y_num, y_den)
            try:
                self.slab_of(box.lo)
                self.slab_of(box.hi)
            except OnCurve:
                box = bisect(x_poly, box)
                continue
            if self.slab_of(box.lo) != self.slab_of(box.hi):
                box = bisect(x_poly, box)
                continue
            slab = self.slab_of(box.lo)
            levels = gap_levels(self.fiber(box.lo))
            crossed = any(
                count_roots(
                    as_upoly(self.affine.specialize({"Y": h}, ("X",)), "X"), box.lo, box.hi
                )
                > 0
                for h in levels
            )
            if crossed:
                box = bisect(x_poly, box)
                continue
            band = 0
            for h in levels:
                diff = y_num - y_den.scale(h)
                s = sign_at_root(x_poly, box, diff) * den_sign
                if s == 0:
                    raise CertificationFailure("located point lies on a gap level")
                if s > 0:
                    band += 1
            return self.labels[slab][band]
        raise CertificationFailure(
            "point location exceeded the refinement budget", budget=self.budget
        )

    def _locate_exact(self, x: Fraction, y_num: RatPoly, y_den: RatPoly) -> int:
        y = y_num.evaluate({"X": x, "Y": 0}) / y_den.evaluate({"X": x, "Y": 0})
        _, boxes, labels = self.labelled_fiber(x)
        for box, label in zip(boxes, labels):
            if box.exact == y:
                return label
        raise CertificationFailure("rational point is not on the curve")

    def describe(self) -> dict[str, object]:
        return {
            **self.chart.describe(),
            "criticals": len(self.criticals),
            "slabs": len(self.samples),
        }


def _eval(p: Poly, x: Fraction) -> Fraction:
    return to_fraction(p.eval(to_rational(x)))
