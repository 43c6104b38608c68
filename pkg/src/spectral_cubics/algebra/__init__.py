"""Exact polynomial core 精确多项式核心

Rational polynomials, resultants, square-free structure, real root isolation and signatures
有理多项式、结式、无平方结构、实根隔离与符号差
"""

from .poly import RatPoly, to_fraction, to_rational, polys_in
from .parse import parse_poly, format_poly
from .roots import (
    RootBox,
    isolate_real_roots,
    squarefree,
    squarefree_part,
    count_roots,
    refine,
    bisect,
    sign_at_root,
    rational_roots,
    real_root_count,
    as_upoly,
)
from .linalg import (
    det3,
    gram_matrix,
    quadratic_form,
    signature,
    rank,
    determinant,
    inverse,
    mat_mul,
    transpose,
    nullspace,
    complete_basis,
    pullback,
)
from .resultant import resultant, discriminant
from .conics import (
    LinePair,
    cross,
    evaluate_line,
    is_zero,
    is_zero_vector,
    split_line_pair,
    to_sympy,
)

__all__ = [
    # Polynomials
    "RatPoly",
    "to_fraction",
    "to_rational",
    "polys_in",
    "parse_poly",
    "format_poly",
    # Roots
    "RootBox",
    "isolate_real_roots",
    "squarefree",
    "squarefree_part",
    "count_roots",
    "refine",
    "bisect",
    "sign_at_root",
    "rational_roots",
    "real_root_count",
    "as_upoly",
    # Linear algebra
    "det3",
    "gram_matrix",
    "quadratic_form",
    "signature",
    "rank",
    "determinant",
    "inverse",
    "mat_mul",
    "transpose",
    "nullspace",
    "complete_basis",
    "pullback",
    # Elimination
    "resultant",
    "discriminant",
    # Conics and quadratic fields
    "LinePair",
    "cross",
    "evaluate_line",
    "is_zero",
    "is_zero_vector",
    "split_line_pair",
    "to_sympy",
]
