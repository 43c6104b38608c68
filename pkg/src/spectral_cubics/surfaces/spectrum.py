"""Spectrum of a marked cubic surface 带标记三次曲面的谱

The five tritangent planes through the marked line, each tagged by the real type of its
residual line pair.
过标记直线的五个三切平面，并按残余直线对的实类型标记。
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Optional

import sympy
from sympy import Poly

from ..algebra import (
    LinePair,
    RatPoly,
    RootBox,
    as_upoly,
    isolate_real_roots,
    rank,
    sign_at_root,
    signature,
    split_line_pair,
    to_fraction,
    to_rational,
)
from ..errors import CertificationFailure, SpectrumDegenerate
from ..utils.logger import logger
from .marked import BINARY_VARS, MarkedSurface

DEGREE = 5


class SpectralTag(str, Enum):
    """Type of a spectral point 谱点类型"""

    REAL_CROSSING = "real-crossing"
    IMAGINARY_CROSSING = "imaginary-crossing"
    IMAGINARY_PAIR = "imaginary-pair"


@dataclass(frozen=True)
class SpectralPoint:
    """A tritangent plane through the marked line 过标记直线的三切平面

    Attributes:
        tag: Real type 实类型
        box: Isolating box of s/t for a finite real point 有限实点 s/t 的隔离区间
        at_infinity: The plane (1 : 0) 平面 (1 : 0)
        approx: Approximate value of s/t for display (complex for an imaginary point) 显示用近似值
        pair: Index of the conjugate pair of an imaginary point 共轭对编号
        root: Exact s/t, a sympy Rational or CRootOf of an irreducible factor 精确的 s/t
    """

    tag: SpectralTag
    box: Optional[RootBox] = None
    at_infinity: bool = False
    approx: complex = 0j
    pair: Optional[int] = None
    root: Any = None

    @property
    def real(self) -> bool:
        return self.tag is not SpectralTag.IMAGINARY_PAIR

    @property
    def rational(self) -> bool:
        return self.at_infinity or (self.box is not None and self.box.exact is not None)

    def plane(self) -> Optional[tuple[Fraction, Fraction]]:
        """(s, t) of a rational point 有理点的 (s, t)"""
        if self.at_infinity:
            return Fraction(1), Fraction(0)
        if self.box is not None and self.box.exact is not None:
            return self.box.exact, Fraction(1)
        return None

    def label(self) -> str:
        if self.at_infinity:
            return "(1:0)"
        if self.rational:
            return f"({self.box.exact}:1)"
        if self.real:
            return f"~({self.approx.real:.6g}:1)"
        return f"~({self.approx.real:.6g}{self.approx.imag:+.6g}i:1)"


@dataclass
class Spectrum:
    """The five spectral points and their counts 五个谱点及计数

    Attributes:
        form: Binary quintic spectrum form 谱型
        points: Real points by increasing s/t, then (1 : 0), then conjugate pairs 谱点
    """

    form: RatPoly
    points: list[SpectralPoint] = field(default_factory=list)

    @property
    def r_re(self) -> int:
        return sum(p.tag is SpectralTag.REAL_CROSSING for p in self.points)

    @property
    def r_im(self) -> int:
        return sum(p.tag is SpectralTag.IMAGINARY_CROSSING for p in self.points)

    @property
    def c(self) -> int:
        return sum(p.tag is SpectralTag.IMAGINARY_PAIR for p in self.points) // 2

    @property
    def rational(self) -> bool:
        return all(p.rational for p in self.points)

    def counts(self) -> dict[str, int]:
        return {"r_re": self.r_re, "r_im": self.r_im, "c": self.c}

    def table(self) -> list[dict]:
        rows = []
        for i, p in enumerate(self.points):
            row: dict = {"index": i + 1, "tag": p.tag.value, "point": p.label()}
            if p.box is not None:
                row["box"] = [str(p.box.lo), str(p.box.hi)]
            if p.pair is not None:
                row["pair"] = p.pair
            rows.append(row)
        return rows


def _crossing(matrix: list[list[Fraction]]) -> SpectralTag:
    if rank(matrix) != 2:
        raise SpectrumDegenerate("residual conic is not a pair of distinct lines")
    pos, neg = signature(matrix)
    return SpectralTag.REAL_CROSSING if pos == neg == 1 else SpectralTag.IMAGINARY_CROSSING


def _principal_minor_sum(ms: MarkedSurface) -> RatPoly:
    """Sum of the principal 2×2 minors of the fundamental matrix 主 2×2 子式之和"""
    m = ms.fundamental_matrix()
    return sum(
        (m[i][i] * m[j][j] - m[i][j] * m[i][j] for i, j in ((0, 1), (0, 2), (1, 2))),
        RatPoly.constant(0, BINARY_VARS),
    )


def _affine(form: RatPoly) -> Poly:
    """form(s, 1) as a polynomial in s s 的单变量多项式"""
    return as_upoly(form.specialize({BINARY_VARS[1]: 1}, (BINARY_VARS[0],)))


def _irreducible(f: Poly) -> list[Poly]:
    """Irreducible factors over Q in a fixed order 按固定顺序排列的不可约因子"""
    _, factors = f.factor_list()
    return sorted(
        (g.monic() for g, _ in factors),
        key=lambda g: (g.degree(), [to_fraction(c) for c in g.all_coeffs()]),
    )


def _real_root(factors: list[Poly], box: RootBox) -> Any:
    """The exact root isolated by `box` 区间所隔离根的精确值"""
    if box.exact is not None:
        return to_rational(box.exact)
    lo, hi = to_rational(box.lo), to_rational(box.hi)
    for g in factors:
        if g.count_roots(lo, hi) == 1:
            return sympy.CRootOf(g, int(g.count_roots(None, lo)))
    raise CertificationFailure("isolated root belongs to no factor", lo=str(box.lo))


def _conjugate_pairs(factors: list[Poly]) -> list[tuple[Any, Any]]:
    """(upper, lower) roots of each conjugate pair, by factor then root index
    按因子与根序号排列的共轭对（上半平面根，下半平面根）

    Non-real CRootOf indices of a real factor come in adjacent pairs, the lower root first.
    实系数因子的非实根序号相邻成对，下半平面的根在前。
    """
    pairs = []
    for g in factors:
        reals = int(g.count_roots())
        for k in range(reals, g.degree(), 2):
            lower = sympy.CRootOf(g, k)
            upper = sympy.CRootOf(g, k + 1)
            if sympy.conjugate(lower) != upper:
                raise CertificationFailure("non-real roots are not paired by index", index=k)
            pairs.append((upper, lower))
    return pairs


def spectrum(ms: MarkedSurface) -> Spectrum:
    """Spectral points of (Y, l) with their tags 谱点及其类型

    Raises:
        SpectrumDegenerate: the spectrum form vanishes or has a multiple root 谱型为零或有重根
    """
    form = ms.spectrum_form()
    if form.is_zero:
        raise SpectrumDegenerate("spectrum form vanishes identically")
    f = _affine(form)
    at_infinity = DEGREE - f.degree()
    if at_infinity > 1:
        raise SpectrumDegenerate("multiple spectral point at (1:0)", multiplicity=at_infinity)
    _, factors = f.sqf_list()
    if any(k > 1 for _, k in factors):
        raise SpectrumDegenerate("spectrum form has a multiple root")

    minors = _affine(_principal_minor_sum(ms))
    factors = _irreducible(f) if f.degree() > 0 else []
    points: list[SpectralPoint] = []
    for box in isolate_real_roots(f):
        root = _real_root(factors, box)
        if box.exact is None and root.is_Rational:
            exact = to_fraction(root)
            box = RootBox(exact, exact, box.multiplicity, exact=exact)
        if box.exact is not None:
            tag = _crossing(ms.matrix_at((box.exact, Fraction(1))))
        else:
            sign = sign_at_root(f, box, minors)
            if sign == 0:
                raise SpectrumDegenerate(
                    "residual conic is a double line", near=float(box.midpoint)
                )
            tag = SpectralTag.REAL_CROSSING if sign < 0 else SpectralTag.IMAGINARY_CROSSING
        points.append(SpectralPoint(tag=tag, box=box, approx=complex(box.approx()), root=root))
    if at_infinity:
        tag = _crossing(ms.matrix_at((Fraction(1), Fraction(0))))
        points.append(SpectralPoint(tag=tag, at_infinity=True, approx=complex("inf")))

    for k, roots in enumerate(_conjugate_pairs(factors)):
        for root in roots:
            points.append(
                SpectralPoint(
                    tag=SpectralTag.IMAGINARY_PAIR,
                    approx=complex(root.evalf(15)),
                    pair=k,
                    root=root,
                )
            )

    result = Spectrum(form=form, points=points)
    if len(points) != DEGREE:
        raise SpectrumDegenerate("spectrum does not consist of five points", found=len(points))
    logger.debug("Spectrum computed", result.counts())
    return result


def residual_lines(ms: MarkedSurface, point: SpectralPoint) -> LinePair:
    """The two residual lines in a rational tritangent plane, in plane coordinates (u, v, w)
    有理三切平面中的两条残余直线（平面坐标 (u, v, w)）

    Raises:
        SpectrumDegenerate: the point is not rational or the conic is not a line pair 非有理点或非直线对
    """
    plane = point.plane()
    if plane is None:
        raise SpectrumDegenerate("residual lines are split exactly only over rational planes")
    try:
        return split_line_pair(ms.residual_conic(plane))
    except ValueError as exc:
        raise SpectrumDegenerate(str(exc), plane=[str(c) for c in plane]) from exc
