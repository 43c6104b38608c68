"""Resultants 结式

Sign convention: the Sylvester matrix has the rows of f first, so
res(f, g) = lc(f)^deg(g) · Π g(α) over the roots α of f. For example res(y² − x, y; y) = −x.
符号约定：Sylvester 矩阵中 f 的行在前。
"""

import sympy

from ..errors import DegenerateResultant, ZeroPolynomial
from .poly import RatPoly


def resultant(f: RatPoly, g: RatPoly, var: str) -> RatPoly:
    """Resultant eliminating `var` 消去 var 的结式

    The result keeps the variable set of the inputs (it no longer involves `var`).
    结果保留输入的变量集（不再含 var）。
    """
    if f.is_zero or g.is_zero:
        raise ZeroPolynomial("resultant with the zero polynomial")
    if f.degree(var) <= 0 and g.degree(var) <= 0:
        raise DegenerateResultant(f"both polynomials are constant in {var}")
    if f.degree(var) <= 0:
        return f ** g.degree(var)
    if g.degree(var) <= 0:
        return g ** f.degree(var)
    expr = sympy.resultant(f.as_expr(), g.as_expr(), sympy.Symbol(var))
    return RatPoly.from_expr(sympy.expand(expr), f.variables)


def discriminant(f: RatPoly, var: str) -> RatPoly:
    """res(f, ∂f/∂var; var), without normalization 未归一化的判别式"""
    return resultant(f, f.diff(var), var)
