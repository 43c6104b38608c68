"""Exact rational polynomials 精确有理多项式

RatPoly: an immutable multivariate polynomial over Q backed by sympy.Poly
RatPoly：基于 sympy.Poly 的不可变有理系数多元多项式
"""

from fractions import Fraction
from typing import Mapping, Sequence, Union

import sympy
from sympy import Poly, QQ, Rational

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]


def to_fraction(value: object) -> Fraction:
    """Convert an exact sympy/python rational to Fraction 转换为 Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if hasattr(value, "p") and hasattr(value, "q"):
        return Fraction(int(value.p), int(value.q))  # type: ignore[attr-defined]
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Fraction(int(value.numerator), int(value.denominator))  # type: ignore[attr-defined]
    raise TypeError(f"not an exact rational: {value!r}")


def to_rational(value: Scalar) -> Rational:
    """Convert int/Fraction to sympy Rational 转换为 sympy Rational"""
    f = Fraction(value)
    return Rational(f.numerator, f.denominator)


class RatPoly:
    """Multivariate polynomial with exact rational coefficients
    精确有理系数的多元多项式

    Terms are exponent tuples over an ordered variable set; zero coefficients are never stored.
    项以有序变量集上的指数元组为键；不存储零系数。
    """

    __slots__ = ("_poly", "_variables")

    def __init__(self, poly: Poly, variables: Sequence[str]):
        self._variables = tuple(variables)
        self._poly = poly

    # ─── constructors ───

    @staticmethod
    def symbols(variables: Sequence[str]) -> tuple[sympy.Symbol, ...]:
        return tuple(sympy.Symbol(v) for v in variables)

    @classmethod
    def from_dict(cls, terms: Mapping[Monomial, Scalar], variables: Sequence[str]) -> "RatPoly":
        """Build from {exponents: coefficient} 由指数-系数映射构造"""
        gens = cls.symbols(variables)
        data = {tuple(m): to_rational(c) for m, c in terms.items() if c != 0}
        for monom in data:
            if len(monom) != len(gens):
                raise ValueError(f"exponent tuple {monom} does not match {len(gens)} variables")
        if not data:
            return cls(Poly(0, *gens, domain=QQ), variables)
        return cls(Poly.from_dict(data, *gens, domain=QQ), variables)

    @classmethod
    def from_expr(cls, expr: object, variables: Sequence[str]) -> "RatPoly":
        """Build from a sympy expression 由 sympy 表达式构造"""
        gens = cls.symbols(variables)
        return cls(Poly(expr, *gens, domain=QQ), variables)

    @classmethod
    def constant(cls, value: Scalar, variables: Sequence[str]) -> "RatPoly":
        return cls.from_dict({(0,) * len(variables): value} if value else {}, variables)

    @classmethod
    def var(cls, name: str, variables: Sequence[str]) -> "RatPoly":
        """The coordinate polynomial `name` 坐标多项式"""
        idx = list(variables).index(name)
        exps = tuple(1 if i == idx else 0 for i in range(len(variables)))
        return cls.from_dict({exps: 1}, variables)

    @classmethod
    def linear_form(cls, coeffs: Sequence[Scalar], variables: Sequence[str]) -> "RatPoly":
        """Σ coeffs[i]·variables[i] 线性型"""
        n = len(variables)
        terms = {tuple(1 if j == i else 0 for j in range(n)): c for i, c in enumerate(coeffs)}
        return cls.from_dict(terms, variables)

    # ─── accessors ───

    @property
    def variables(self) -> tuple[str, ...]:
        return self._variables

    @property
    def poly(self) -> Poly:
        """Underlying sympy Poly 底层 sympy Poly"""
        return self._poly

    @property
    def gens(self) -> tuple[sympy.Symbol, ...]:
        return tuple(self._poly.gens)

    def terms(self) -> dict[Monomial, Fraction]:
        if self.is_zero:
            return {}
        return {m: to_fraction(c) for m, c in self._poly.as_dict().items()}

    def coefficient(self, monom: Monomial) -> Fraction:
        return self.terms().get(tuple(monom), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return bool(self._poly.is_zero)

    def is_constant(self) -> bool:
        return self.total_degree() <= 0

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial 总次数，零多项式为 -1"""
        if self.is_zero:
            return -1
        return int(self._poly.total_degree())

    def degree(self, var: str) -> int:
        """Degree in one variable 单变量次数"""
        if self.is_zero:
            return -1
        return int(self._poly.degree(sympy.Symbol(var)))

    def is_homogeneous(self, degree: int | None = None) -> bool:
        if self.is_zero:
            return True
        degrees = {sum(m) for m in self._poly.monoms()}
        if len(degrees) != 1:
            return False
        return degree is None or degrees == {degree}

    def as_expr(self) -> sympy.Expr:
        return self._poly.as_expr()

    # ─── arithmetic ───

    def _coerce(self, other: object) -> "RatPoly":
        if isinstance(other, RatPoly):
            if other.variables != self.variables:
                raise ValueError(f"variable sets differ: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly.constant(other, self.variables)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "RatPoly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatPoly(self._poly + o._poly, self._variables)

    __radd__ = __add__

    def __sub__(self, other: object) -> "RatPoly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatPoly(self._poly - o._poly, self._variables)

    def __rsub__(self, other: object) -> "RatPoly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatPoly(o._poly - self._poly, self._variables)

    def __mul__(self, other: object) -> "RatPoly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatPoly(self._poly * o._poly, self._variables)

    __rmul__ = __mul__

    def __neg__(self) -> "RatPoly":
        return RatPoly(-self._poly, self._variables)

    def __pow__(self, n: int) -> "RatPoly":
        return RatPoly(self._poly**n, self._variables)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatPoly.constant(other, self.variables)
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms() == other.terms()

    def __hash__(self) -> int:
        return hash((self._variables, tuple(sorted(self.terms().items()))))

    def __repr__(self) -> str:
        from .parse import format_poly

        return f"RatPoly({format_poly(self)!r}, {list(self._variables)})"

    def __str__(self) -> str:
        from .parse import format_poly

        return format_poly(self)

    def exquo(self, other: "RatPoly") -> "RatPoly":
        """Exact division; raises if not divisible 精确除法"""
        q, r = self._poly.div(other._poly)
        if not r.is_zero:
            raise ArithmeticError("polynomial division is not exact")
        return RatPoly(q, self._variables)

    def divides(self, other: "RatPoly") -> bool:
        """True if self divides other 判断整除"""
        _, r = other._poly.div(self._poly)
        return bool(r.is_zero)

    def scale(self, c: Scalar) -> "RatPoly":
        return RatPoly(self._poly * to_rational(c), self._variables)

    def monic(self) -> "RatPoly":
        """Normalize the leading coefficient to 1 首项系数归一"""
        if self.is_zero:
            return self
        return RatPoly(self._poly.monic(), self._variables)

    # ─── calculus and substitution ───

    def diff(self, var: str) -> "RatPoly":
        return RatPoly(self._poly.diff(sympy.Symbol(var)), self._variables)

    def gradient(self) -> list["RatPoly"]:
        return [self.diff(v) for v in self._variables]

    def evaluate(self, point: Mapping[str, Scalar] | Sequence[Scalar]) -> Fraction:
        """Evaluate at a rational point 在有理点求值"""
        if not isinstance(point, Mapping):
            point = dict(zip(self._variables, point))
        total = Fraction(0)
        for monom, coeff in self.terms().items():
            term = coeff
            for name, e in zip(self._variables, monom):
                if e:
                    term *= Fraction(point[name]) ** e
            total += term
        return total

    def specialize(self, values: Mapping[str, Scalar], variables: Sequence[str]) -> "RatPoly":
        """Fix some variables, keep the rest in `variables` 固定部分变量"""
        expr = self.as_expr().xreplace(
            {sympy.Symbol(k): to_rational(v) for k, v in values.items()}
        )
        return RatPoly.from_expr(sympy.expand(expr), variables)

    def substitute(self, images: Mapping[str, "RatPoly"], variables: Sequence[str]) -> "RatPoly":
        """Simultaneous substitution of polynomials for variables 同时代入多项式

        Args:
            images: Variable -> polynomial in `variables` 变量到新多项式的映射
            variables: Variable set of the result 结果的变量集
        """
        mapping = {sympy.Symbol(k): v.as_expr() for k, v in images.items()}
        expr = self.as_expr().xreplace(mapping)
        return RatPoly.from_expr(sympy.expand(expr), variables)

    def rename(self, variables: Sequence[str]) -> "RatPoly":
        """Same exponents over a new variable set of equal arity 同元数重命名变量"""
        if len(variables) != len(self._variables):
            raise ValueError("arity mismatch")
        return RatPoly.from_dict(self.terms(), variables)

    def with_variables(self, variables: Sequence[str]) -> "RatPoly":
        """Re-express over a superset/reordering of variables 换到新的变量集"""
        return RatPoly.from_expr(self.as_expr(), variables)

    # ─── gcd and factor structure ───

    def gcd(self, other: "RatPoly") -> "RatPoly":
        return RatPoly(self._poly.gcd(other._poly), self._variables)

    def sqf_list(self) -> tuple[Fraction, list[tuple["RatPoly", int]]]:
        coeff, factors = self._poly.sqf_list()
        return to_fraction(coeff), [(RatPoly(f, self._variables), k) for f, k in factors]

    def factor_list(self) -> tuple[Fraction, list[tuple["RatPoly", int]]]:
        coeff, factors = self._poly.factor_list()
        return to_fraction(coeff), [(RatPoly(f, self._variables), k) for f, k in factors]

    def is_squarefree(self) -> bool:
        _, factors = self.sqf_list()
        return all(k == 1 for _, k in factors)

    def univariate(self, var: str | None = None) -> Poly:
        """As a univariate sympy Poly (the polynomial must involve at most `var`)
        转为单变量 sympy Poly
        """
        name = var or self._variables[0]
        return Poly(self.as_expr(), sympy.Symbol(name), domain=QQ)


def polys_in(variables: Sequence[str], *exprs: str) -> list[RatPoly]:
    """Parse several polynomial texts over the same variables 解析多个多项式文本"""
    from .parse import parse_poly

    return [parse_poly(e, variables) for e in exprs]


