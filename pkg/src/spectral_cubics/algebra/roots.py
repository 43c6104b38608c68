"""Univariate real-root toolkit 单变量实根工具

Square-free decomposition, certified isolation boxes and sign evaluation at isolated roots,
on top of sympy's real root isolation.
基于 sympy 实根隔离的无平方分解、认证隔离区间与孤立根处的符号判定。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from sympy import Poly, QQ

from ..errors import CertificationFailure, ZeroPolynomial
from .poly import RatPoly, to_fraction, to_rational

UPoly = Union[RatPoly, Poly]


@dataclass(frozen=True)
class RootBox:
    """Isolating interval of one real root 单个实根的隔离区间

    For an irrational root the open interval (lo, hi) contains exactly this root and its endpoints
    are not roots. A rational root is stored exactly with lo = hi = exact.
    无理根：开区间 (lo, hi) 恰含此根且端点非根。有理根：lo = hi = exact。

    Attributes:
        lo: Left endpoint 左端点
        hi: Right endpoint 右端点
        multiplicity: Root multiplicity 根重数
        exact: The root when rational 有理根的精确值
    """

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1
    exact: Optional[Fraction] = None

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: Fraction) -> bool:
        if self.exact is not None:
            return x == self.exact
        return self.lo < x < self.hi

    def approx(self) -> float:
        return float(self.midpoint)

    def separated_from(self, other: "RootBox") -> bool:
        return self.hi < other.lo or other.hi < self.lo


def as_upoly(f: UPoly, var: Optional[str] = None) -> Poly:
    """Coerce to a univariate sympy Poly over QQ 转为 QQ 上单变量 Poly"""
    if isinstance(f, RatPoly):
        used = [v for v in f.variables if f.degree(v) > 0]
        if len(used) > 1:
            raise ValueError(f"polynomial is not univariate: uses {used}")
        name = var or (used[0] if used else f.variables[0])
        return f.univariate(name)
    if len(f.gens) != 1:
        raise ValueError("polynomial is not univariate")
    return f.set_domain(QQ)


def squarefree_part(f: Poly) -> Poly:
    if f.is_zero:
        raise ZeroPolynomial("square-free part of the zero polynomial")
    if f.degree() <= 0:
        return f
    return f.sqf_part()


def squarefree(f: RatPoly, var: str) -> tuple[RatPoly, list[tuple[RatPoly, int]]]:
    """Square-free part with respect to `var` and the full decomposition
    关于 var 的无平方部分与完整分解

    Args:
        f: Nonzero polynomial 非零多项式
        var: Variable 变量

    Returns:
        (f / gcd(f, df/dvar), [(factor, multiplicity), ...]) 无平方部分与因子列表
    """
    if f.is_zero:
        raise ZeroPolynomial("squarefree of the zero polynomial")
    g = f.gcd(f.diff(var))
    part = f.exquo(g)
    _, factors = f.sqf_list()
    return part, factors


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _eval(f: Poly, x: Fraction) -> Fraction:
    return to_fraction(f.eval(to_rational(x)))


def count_roots(f: Poly, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots in the closed interval [lo, hi] 闭区间内不同实根个数"""
    g = squarefree_part(f)
    if g.degree() <= 0:
        return 0
    return int(g.count_roots(to_rational(lo), to_rational(hi)))


def isolate_real_roots(f: UPoly, var: Optional[str] = None) -> list[RootBox]:
    """Isolate every real root 隔离全部实根

    Args:
        f: Nonzero univariate polynomial 非零单变量多项式

    Returns:
        Disjoint boxes in increasing order 递增排列的不相交区间

    Raises:
        ZeroPolynomial: for f = 0 零多项式
    """
    p = as_upoly(f, var)
    if p.is_zero:
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    if p.degree() <= 0:
        return []
    sqf = squarefree_part(p)
    boxes: list[RootBox] = []
    for (a, b), mult in p.intervals():
        lo, hi = to_fraction(a), to_fraction(b)
        if lo == hi:
            boxes.append(RootBox(lo, hi, int(mult), exact=lo))
            continue
        # Endpoint guard: shrink until neither endpoint is a root 端点保护
        while _eval(sqf, lo) == 0 or _eval(sqf, hi) == 0:
            a2, b2 = sqf.refine_root(to_rational(lo), to_rational(hi), steps=1)
            lo, hi = to_fraction(a2), to_fraction(b2)
        boxes.append(RootBox(lo, hi, int(mult)))
    boxes.sort(key=lambda bx: bx.lo)
    return boxes


def refine(f: UPoly, box: RootBox, width: Fraction) -> RootBox:
    """Shrink a box below `width` 将区间缩小到宽度以下"""
    if box.exact is not None or box.width < width:
        return box
    sqf = squarefree_part(as_upoly(f))
    lo, hi = box.lo, box.hi
    while hi - lo >= width:
        mid = (lo + hi) / 2
        v = _eval(sqf, mid)
        if v == 0:
            return RootBox(mid, mid, box.multiplicity, exact=mid)
        if _sign(_eval(sqf, lo)) * _sign(v) < 0:
            hi = mid
        else:
            lo = mid
    return RootBox(lo, hi, box.multiplicity)


def bisect(f: UPoly, box: RootBox) -> RootBox:
    """Halve a box once 二分一次"""
    if box.exact is not None:
        return box
    sqf = squarefree_part(as_upoly(f))
    mid = box.midpoint
    v = _eval(sqf, mid)
    if v == 0:
        return RootBox(mid, mid, box.multiplicity, exact=mid)
    if _sign(_eval(sqf, box.lo)) * _sign(v) < 0:
        return RootBox(box.lo, mid, box.multiplicity)
    return RootBox(mid, box.hi, box.multiplicity)


def sign_at_root(
    f: UPoly,
    box: RootBox,
    g: UPoly,
    budget: int = 200,
) -> int:
    """Certified sign of g at the root of f isolated by `box`
    g 在 f 的孤立根处的认证符号

    Returns 0 exactly when the root is also a root of g.
    仅当该根也是 g 的根时返回 0。
    """
    fp = as_upoly(f)
    gp = as_upoly(g)
    if fp.gens != gp.gens:
        gp = Poly(gp.as_expr().xreplace({gp.gens[0]: fp.gens[0]}), fp.gens[0], domain=QQ)
    if box.exact is not None:
        return _sign(_eval(gp, box.exact))
    if gp.is_zero:
        return 0
    if gp.degree() <= 0:
        return _sign(to_fraction(gp.LC()))
    common = fp.gcd(gp)
    if common.degree() > 0 and count_roots(common, box.lo, box.hi) > 0:
        return 0
    current = box
    for _ in range(budget):
        if count_roots(gp, current.lo, current.hi) == 0:
            return _sign(_eval(gp, current.midpoint))
        current = bisect(fp, current)
        if current.exact is not None:
            return _sign(_eval(gp, current.exact))
    raise CertificationFailure("sign at root not certified within budget", budget=budget)


def rational_roots(f: UPoly) -> list[Fraction]:
    """Rational roots from the linear factors over Q 有理根"""
    p = as_upoly(f)
    if p.is_zero or p.degree() <= 0:
        return []
    _, factors = p.factor_list()
    out = []
    for fac, _ in factors:
        if fac.degree() == 1:
            a, b = fac.all_coeffs()
            out.append(-to_fraction(b) / to_fraction(a))
    return sorted(out)


def real_root_count(f: UPoly) -> int:
    """Number of distinct real roots 不同实根个数"""
    p = as_upoly(f)
    if p.is_zero:
        raise ZeroPolynomial("zero polynomial")
    if p.degree() <= 0:
        return 0
    return int(squarefree_part(p).count_roots())
