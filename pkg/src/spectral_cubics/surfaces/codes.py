"""Binary codes of the lines disjoint from the marked line 与标记直线不相交的直线的二进制码

A line m disjoint from the marked line l meets exactly one of the two residual lines l_i^0, l_i^1 in
each tritangent plane through l; the upper index is the i-th bit of its code.

Over a rational spectrum the residual lines are split exactly over Q(√δ), and the sixteen lines
are found exactly by marking the surface along a rational residual line L of a pivot plane: the
four other tritangent planes through L each hold two lines disjoint from l, and so does the same
construction for the other residual line of the pivot plane. Otherwise each line is the one
transversal other than l of four residual lines l_1^b1 … l_4^b4, found at two working precisions
(see approx.py); the fifth bit is then read off the fifth plane.
与 l 不相交的直线 m 在每个过 l 的三切平面中恰与一条残余直线相交，其上标即码的第 i 位。
谱有理时残余直线在 Q(√δ) 上精确分解，十六条直线由沿枢轴平面中的有理残余直线重新标记而精确求得；
否则每条直线是四条残余直线除 l 外唯一的公共横截线，在两个工作精度下求得。
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Any, Optional, Sequence

import mpmath
import sympy

from ..algebra import LinePair, RatPoly, is_zero, split_line_pair, to_fraction, to_sympy
from ..errors import CertificationFailure, InputError
from ..utils.logger import logger
from . import approx
from .approx import DEFAULT_DIGITS, ApproxLinePair, Gap
from .marked import BINARY_VARS, SURFACE_VARS, MarkedSurface, lift, remark
from .spectrum import SpectralPoint, SpectralTag, Spectrum, spectrum

CODE_LENGTH = 5
DISJOINT_LINES = 16

Vector = list[Any]


@dataclass(frozen=True)
class SurfaceLine:
    """A line of P³ through two points 过两点的直线

    Exact lines carry sympy coordinates over Q or a real quadratic field; a line over a larger
    field carries mpmath coordinates and the working precision they were certified at.
    精确直线的坐标在 Q 或实二次域上；更大域上的直线以 mpmath 坐标及其认证精度表示。

    Attributes:
        points: Two distinct points (x, y, u, v) 两个不同的点
        field: Field of definition, "approx" for an mpmath witness 定义域
        real: Whether the line is real 是否为实直线
        digits: Working precision of an mpmath witness, None for an exact line 工作精度
    """

    points: tuple[Vector, Vector]
    field: str = "Q"
    real: bool = True
    digits: Optional[int] = None

    @property
    def exact(self) -> bool:
        return self.digits is None

    @property
    def rational(self) -> bool:
        return self.exact and all(sympy.sympify(c).is_Rational for p in self.points for c in p)

    def rational_points(self) -> list[list[Fraction]]:
        """The two points with Fraction coordinates 以 Fraction 表示的两点

        Raises:
            InputError: the line is not defined over Q 直线不是有理直线
        """
        if not self.rational:
            raise InputError("line is not defined over Q", field=self.field)
        return [[to_fraction(c) for c in p] for p in self.points]

    def meets(self, other: "SurfaceLine") -> bool:
        """Coplanarity test of two lines, exact unless either is a witness 两直线的共面检验"""
        if self.exact and other.exact:
            matrix = sympy.Matrix([list(p) for p in self.points + other.points])
            return is_zero(matrix.det(method="berkowitz"))
        digits = max(d for d in (self.digits, other.digits) if d is not None)
        with mpmath.workdps(digits):
            return approx.meets(_mp_points(self), _mp_points(other), Gap(digits))

    def lies_on(self, ms: MarkedSurface) -> bool:
        """The surface vanishes at four points of the line 曲面在直线上四点处为零"""
        if not self.exact:
            with mpmath.workdps(self.digits):
                residual = approx.surface_residual(ms.equation(), _mp_points(self))
                return bool(Gap(self.digits).is_zero(residual, 1, "surface equation"))
        p, q = self.points
        expr = ms.equation().as_expr()
        names = [sympy.Symbol(v) for v in SURFACE_VARS]
        samples = [p, q, [a + b for a, b in zip(p, q)], [a - 2 * b for a, b in zip(p, q)]]
        return all(
            is_zero(expr.xreplace(dict(zip(names, map(sympy.sympify, point))))) for point in samples
        )

    def describe(self) -> list[list[str]]:
        if self.exact:
            return [[str(c) for c in p] for p in self.points]
        return [[mpmath.nstr(c, 15) for c in p] for p in self.points]


def _mp_points(line: SurfaceLine) -> list[Vector]:
    return [[approx.to_mp(c) if line.exact else c for c in p] for p in line.points]


@dataclass(frozen=True)
class LineCode:
    """Binary code b1…b5 of a line disjoint from the marked line 二进制码

    Attributes:
        bits: The five bits 五个比特
        line: The coded line 被编码的直线
    """

    bits: tuple[int, ...]
    line: SurfaceLine

    @property
    def parity(self) -> int:
        return sum(self.bits) % 2

    @property
    def word(self) -> str:
        return "".join(str(b) for b in self.bits)


@dataclass
class LineCodes:
    """The sixteen codes of one l-transversal marking 一个横截标记下的十六个码

    Attributes:
        spectrum: Spectrum of the marked surface 谱
        residual: Residual line pairs (l_i^0, l_i^1) in marking order 按标记顺序的残余直线对
        codes: The sixteen codes 十六个码
        pivot: Spectral point whose residual lines carried the exact construction 枢轴谱点
        order: Spectral point index of each bit 每一位对应的谱点
        digits: Working precision of the witnesses, None when every line is exact 工作精度
    """

    spectrum: Spectrum
    residual: list[tuple[SurfaceLine, SurfaceLine]]
    codes: list[LineCode] = field(default_factory=list)
    pivot: Optional[int] = 0
    order: tuple[int, ...] = tuple(range(CODE_LENGTH))
    digits: Optional[int] = None

    @property
    def exact(self) -> bool:
        return self.digits is None

    @property
    def parity(self) -> int:
        return self.codes[0].parity

    def words(self) -> list[str]:
        return sorted(code.word for code in self.codes)

    def table(self) -> list[dict]:
        return [
            {
                "code": c.word,
                "field": c.line.field,
                "real": c.line.real,
                "points": c.line.describe(),
            }
            for c in sorted(self.codes, key=lambda c: c.word)
        ]


Residual = tuple[SurfaceLine, SurfaceLine]


def _plane_line(plane: Sequence[Fraction], pair: LinePair, k: int) -> SurfaceLine:
    s = [to_sympy(Fraction(c)) for c in plane]
    return SurfaceLine(
        points=(lift(s, pair.vertex), lift(s, pair.points[k])),
        field=pair.field,
        real=pair.real,
    )


def _exact_pair(ms: MarkedSurface, point: SpectralPoint) -> Optional[LinePair]:
    """Residual lines over Q(√δ) of a rational plane, None for an irrational one
    有理平面在 Q(√δ) 上的残余直线，无理平面返回 None
    """
    plane = point.plane()
    if plane is None:
        return None
    try:
        return split_line_pair(ms.residual_conic(plane))
    except ValueError as exc:
        raise CertificationFailure(str(exc), plane=point.label()) from exc


def _linear_planes(form: RatPoly) -> list[tuple[Fraction, Fraction]]:
    """Planes (s : t) of the simple linear factors of a binary form 一次因子对应的平面"""
    _, factors = form.factor_list()
    planes = []
    for factor, k in factors:
        if factor.total_degree() == 1 and k == 1:
            a = factor.coefficient((1, 0))
            b = factor.coefficient((0, 1))
            planes.append((-b, a))
    return planes


def _lines_meeting(ms: MarkedSurface, line: SurfaceLine) -> Optional[list[SurfaceLine]]:
    """The eight lines that meet `line` but not the marked line, None unless the tritangent planes
    through `line` are rational
    与 line 相交而与标记直线不相交的八条直线；过 line 的三切平面非有理时返回 None
    """
    remarking = remark(ms, line.rational_points())
    other = remarking.surface
    marked_points = [[Fraction(int(i == k)) for i in range(4)] for k in (2, 3)]
    through_l = next(
        (p[0], p[1]) for p in (remarking.to_new(q) for q in marked_points) if p[0] != 0 or p[1] != 0
    )
    divisor = RatPoly.linear_form([through_l[1], -through_l[0]], BINARY_VARS)
    form = other.spectrum_form()
    if not divisor.divides(form):
        raise CertificationFailure("plane through both lines is not tritangent")
    planes = _linear_planes(form.exquo(divisor))
    if len(planes) != 4:
        logger.debug("Pivot planes not rational", {"rational": len(planes)})
        return None
    found: list[SurfaceLine] = []
    for plane in planes:
        pair = split_line_pair(other.residual_conic(plane))
        for k in (0, 1):
            local = _plane_line(plane, pair, k)
            found.append(
                SurfaceLine(
                    points=(remarking.to_old(local.points[0]), remarking.to_old(local.points[1])),
                    field=local.field,
                    real=local.real,
                )
            )
    return found


def _code(line: SurfaceLine, residual: Sequence[Residual]) -> tuple[int, ...]:
    bits = []
    for i, (first, second) in enumerate(residual):
        meets = (line.meets(first), line.meets(second))
        if meets[0] == meets[1]:
            raise CertificationFailure(
                "line must meet exactly one residual line of each tritangent plane",
                plane=i + 1,
                meets=list(meets),
            )
        bits.append(0 if meets[0] else 1)
    return tuple(bits)


def _exact_codes(
    ms: MarkedSurface,
    pairs: Sequence[LinePair],
    residual: Sequence[Residual],
    exact_residual: Sequence[Residual],
) -> Optional[tuple[int, list[LineCode]]]:
    """Codes by marking along a rational residual line, None when no pivot plane qualifies
    沿有理残余直线重新标记求码；没有合适的枢轴平面时返回 None
    """
    for pivot, pair in enumerate(pairs):
        if not pair.rational:
            continue
        candidates: list[SurfaceLine] = []
        for line in exact_residual[pivot]:
            meeting = _lines_meeting(ms, line)
            if meeting is None:
                break
            candidates += meeting
        else:
            return pivot, [LineCode(bits=_code(m, residual), line=m) for m in candidates]
    return None


def _swapped(pair: ApproxLinePair) -> ApproxLinePair:
    return ApproxLinePair(
        plane=pair.plane,
        lines=(pair.lines[1], pair.lines[0]),
        points=(pair.points[1], pair.points[0]),
        vertex=pair.vertex,
    )


@dataclass
class _Witness:
    """Lines of one approximate run 一次近似计算的结果"""

    digits: int
    residual: list[Residual]
    graphs: dict[tuple[int, ...], Vector]
    real: dict[tuple[int, ...], bool]


def _witness_run(
    ms: MarkedSurface,
    sp: Spectrum,
    exact: Sequence[Optional[LinePair]],
    order: Sequence[int],
    swap: Sequence[int],
    digits: int,
) -> _Witness:
    """All sixteen transversals at one working precision 一个工作精度下的全部十六条横截线"""
    gap = Gap(digits)
    with mpmath.workdps(digits):
        pairs: list[ApproxLinePair] = []
        for point, pair in zip(sp.points, exact):
            plane = approx.plane_point(point)
            if pair is not None:
                pairs.append(approx.from_line_pair(pair, plane))
            else:
                pairs.append(approx.split(approx.matrix_at(ms, plane), plane, gap))
        ordered = [
            _swapped(pairs[i]) if position in swap else pairs[i] for position, i in enumerate(order)
        ]
        residual: list[Residual] = []
        for position, i in enumerate(order):
            point, pair = sp.points[i], ordered[position]
            lines = tuple(
                SurfaceLine(
                    points=(
                        approx.lift(pair.plane, pair.vertex),
                        approx.lift(pair.plane, pair.points[k]),
                    ),
                    field="approx",
                    real=point.tag is SpectralTag.REAL_CROSSING,
                    digits=digits,
                )
                for k in (0, 1)
            )
            residual.append((lines[0], lines[1]))

        equation = ms.equation()
        graphs: dict[tuple[int, ...], Vector] = {}
        real: dict[tuple[int, ...], bool] = {}
        for head in product((0, 1), repeat=CODE_LENGTH - 1):
            graph = approx.transversal(ordered[:-1], head)
            if graph is None:
                raise CertificationFailure(
                    "four residual lines have no unique second transversal", bits=list(head)
                )
            last = approx.crossing(graph, ordered[-1].plane)
            hits = [
                gap.is_zero(approx.dot(line, last), approx.norm(line) * approx.norm(last), "bit")
                for line in ordered[-1].lines
            ]
            if hits[0] == hits[1]:
                raise CertificationFailure(
                    "line must meet exactly one residual line of each tritangent plane",
                    plane=CODE_LENGTH,
                    meets=hits,
                )
            residue = approx.surface_residual(equation, approx.graph_points(graph))
            if not gap.is_zero(residue, 1, "surface equation"):
                raise CertificationFailure("transversal does not lie on the surface")
            bits = head + (0 if hits[0] else 1,)
            graphs[bits] = graph
            imaginary = approx.norm([mpmath.im(c) for c in graph])
            real[bits] = gap.is_zero(imaginary, 1 + approx.norm(graph), "imaginary part")

        scale = 1 + max(approx.norm(g) for g in graphs.values())
        for first, second in combinations(graphs.values(), 2):
            if gap.is_zero(approx.norm([a - b for a, b in zip(first, second)]), scale, "gap"):
                raise CertificationFailure("two codes give the same line")
        for graph in graphs.values():
            conjugate = [mpmath.conj(c) for c in graph]
            if not any(
                gap.is_zero(approx.norm([a - b for a, b in zip(conjugate, g)]), scale, "conj")
                for g in graphs.values()
            ):
                raise CertificationFailure("lines are not closed under conjugation")
    return _Witness(digits=digits, residual=residual, graphs=graphs, real=real)


def _witness_codes(
    ms: MarkedSurface,
    sp: Spectrum,
    exact: Sequence[Optional[LinePair]],
    order: Sequence[int],
    swap: Sequence[int],
    digits: int,
) -> _Witness:
    """Witnesses at two working precisions that must tell the same story 两个精度下一致的见证"""
    coarse = _witness_run(ms, sp, exact, order, swap, digits)
    fine = _witness_run(ms, sp, exact, order, swap, 2 * digits)
    if coarse.graphs.keys() != fine.graphs.keys() or coarse.real != fine.real:
        raise CertificationFailure("codes change with the working precision", digits=digits)
    with mpmath.workdps(2 * digits):
        drift = max(
            approx.norm([a - b for a, b in zip(coarse.graphs[k], fine.graphs[k])])
            / (1 + approx.norm(fine.graphs[k]))
            for k in fine.graphs
        )
        if drift > Gap(digits).zero:
            raise CertificationFailure(
                "lines move with the working precision", drift=mpmath.nstr(drift, 5)
            )
    return fine


def binary_codes(
    ms: MarkedSurface,
    order: Optional[Sequence[int]] = None,
    swap: Sequence[int] = (),
    digits: int = DEFAULT_DIGITS,
) -> LineCodes:
    """The sixteen lines disjoint from the marked line with their binary codes
    与标记直线不相交的十六条直线及其二进制码

    Args:
        ms: Marked surface with a nondegenerate spectrum 谱非退化的标记曲面
        order: Spectral point of each bit, the spectrum order by default 每一位对应的谱点
        swap: Bit positions whose residual lines are exchanged 交换残余直线的位
        digits: Working precision of the witnesses when exact lines are out of reach 工作精度

    Raises:
        SpectrumDegenerate: the spectrum is degenerate 谱退化
        CertificationFailure: the incidences are inconsistent or a zero test is not certified
            关联不一致或判零未被认证
    """
    sp = spectrum(ms)
    order = tuple(order) if order is not None else tuple(range(CODE_LENGTH))
    if sorted(order) != list(range(CODE_LENGTH)):
        raise InputError(
            "order must be a permutation of the five spectral points", order=list(order)
        )
    if any(b not in range(CODE_LENGTH) for b in swap):
        raise InputError("swap positions must lie in 0..4", swap=list(swap))
    if digits < 16:
        raise InputError("working precision must be at least 16 digits", digits=digits)

    exact = [_exact_pair(ms, p) for p in sp.points]
    found = None
    residual: list[Residual] = []
    if all(pair is not None for pair in exact):
        pairs = [pair for pair in exact if pair is not None]
        exact_residual: list[Residual] = []
        for p, pair in zip(sp.points, pairs):
            plane = p.plane() or (Fraction(1), Fraction(0))
            exact_residual.append((_plane_line(plane, pair, 0), _plane_line(plane, pair, 1)))
        for position, i in enumerate(order):
            first, second = exact_residual[i]
            residual.append((second, first) if position in swap else (first, second))
        found = _exact_codes(ms, pairs, residual, exact_residual)

    if found is not None:
        pivot, codes = found
        result = LineCodes(spectrum=sp, residual=residual, codes=codes, pivot=pivot, order=order)
    else:
        witness = _witness_codes(ms, sp, exact, order, swap, digits)
        codes = [
            LineCode(
                bits=bits,
                line=SurfaceLine(
                    points=approx.graph_points(graph),
                    field="approx",
                    real=witness.real[bits],
                    digits=witness.digits,
                ),
            )
            for bits, graph in witness.graphs.items()
        ]
        result = LineCodes(
            spectrum=sp,
            residual=witness.residual,
            codes=codes,
            pivot=None,
            order=order,
            digits=witness.digits,
        )

    words = {c.word for c in result.codes}
    parities = {c.parity for c in result.codes}
    if len(words) != DISJOINT_LINES or len(parities) != 1:
        raise CertificationFailure(
            "codes are not sixteen distinct words of one parity",
            distinct=len(words),
            parities=sorted(parities),
        )
    logger.debug(
        "Binary codes computed",
        {"parity": parities.pop(), "pivot": result.pivot, "digits": result.digits},
    )
    return result


def lines_on_surface(ms: MarkedSurface, codes: Optional[LineCodes] = None) -> list[SurfaceLine]:
    """All 27 lines: the marked line, the ten residual lines and the sixteen coded lines
    全部 27 条直线
    """
    codes = codes or binary_codes(ms)
    marked = SurfaceLine(points=([0, 0, 1, 0], [0, 0, 0, 1]))
    residual = [line for pair in codes.residual for line in pair]
    return [marked] + residual + [c.line for c in codes.codes]


# ─── real lines ───


@dataclass
class LineCensus:
    """Real lines disjoint from the marked line 与标记直线不相交的实直线

    Attributes:
        count: Number of real lines among the sixteen 十六条中的实直线数
        informative_bits: Bits kept in a truncated code 截断码的位数
        truncated_codes: Truncated codes of the real lines 实直线的截断码
        counts: r_re, r_im and c of the spectrum 谱的计数
        expected: 2^(4−c), or 0 when r_im > 0 由谱计数给出的预期值
    """

    count: int
    informative_bits: int
    truncated_codes: list[str] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)
    expected: int = 0

    @property
    def agrees(self) -> bool:
        return self.count == self.expected


def expected_real_lines(sp: Spectrum) -> int:
    """2^(4−c) real lines disjoint from the marked line, none when r_im > 0
    由谱计数给出的实直线数
    """
    return 0 if sp.r_im > 0 else 2 ** (CODE_LENGTH - 1 - sp.c)


def informative_positions(
    sp: Spectrum,
    order: Sequence[int] = tuple(range(CODE_LENGTH)),
) -> list[int]:
    """Bit positions kept in a truncated real code 截断实码保留的位

    One bit of each conjugate pair is dropped, then the last real bit, which parity recovers.
    每对共轭点去掉一位，再去掉由奇偶性确定的最后一个实位。
    """
    kept: list[int] = []
    seen_pairs: set[int] = set()
    for position, i in enumerate(order):
        point = sp.points[i]
        if point.pair is None:
            kept.append(position)
        elif point.pair not in seen_pairs:
            seen_pairs.add(point.pair)
            kept.append(position)
    last_real = max(p for p in kept if sp.points[order[p]].pair is None)
    kept.remove(last_real)
    return kept


def census_from_codes(codes: LineCodes) -> LineCensus:
    """Real lines counted among the sixteen coded lines 在十六条编码直线中统计实直线"""
    sp = codes.spectrum
    positions = informative_positions(sp, codes.order)
    real = [c for c in codes.codes if c.line.real]
    truncated = sorted("".join(str(c.bits[p]) for p in positions) for c in real)
    return LineCensus(
        count=len(real),
        informative_bits=len(positions),
        truncated_codes=truncated,
        counts=sp.counts(),
        expected=expected_real_lines(sp),
    )


def real_line_census(ms: MarkedSurface, codes: Optional[LineCodes] = None) -> LineCensus:
    """Count and truncated codes of the real lines disjoint from the marked line
    与标记直线不相交的实直线的计数与截断码

    Raises:
        SpectrumDegenerate: the spectrum is degenerate 谱退化
        CertificationFailure: the coded lines could not be certified 编码直线未能认证
    """
    return census_from_codes(codes or binary_codes(ms))
