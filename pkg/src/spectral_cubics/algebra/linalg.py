"""Exact linear algebra 精确线性代数

Polynomial 3x3 determinants, Gram matrices of quadratic forms, signatures by symmetric
reduction, and Gaussian elimination over Q or a sympy algebraic field.
"""

from fractions import Fraction
from typing import Any, Sequence

from .poly import RatPoly

Matrix = list[list[Fraction]]


def det3(m: Sequence[Sequence[RatPoly]]) -> RatPoly:
    """Determinant of a 3x3 polynomial matrix by the cofactor formula
    3x3 多项式矩阵行列式（余子式公式）
    """
    if len(m) != 3 or any(len(row) != 3 for row in m):
        raise ValueError("det3 expects a 3x3 matrix")
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def gram_matrix(q: RatPoly) -> Matrix:
    """Symmetric matrix G with q(x) = x^T G x for a quadratic form
    二次型的对称 Gram 矩阵
    """
    n = len(q.variables)
    g = [[Fraction(0)] * n for _ in range(n)]
    for monom, coeff in q.terms().items():
        if sum(monom) != 2:
            raise ValueError("gram_matrix expects a homogeneous quadratic form")
        idx = [i for i, e in enumerate(monom) for _ in range(e)]
        i, j = idx
        if i == j:
            g[i][i] += coeff
        else:
            g[i][j] += coeff / 2
            g[j][i] += coeff / 2
    return g


def quadratic_form(g: Sequence[Sequence[Fraction]], variables: Sequence[str]) -> RatPoly:
    """Inverse of gram_matrix Gram 矩阵还原为二次型"""
    n = len(variables)
    terms: dict[tuple[int, ...], Fraction] = {}
    for i in range(n):
        for j in range(i, n):
            c = Fraction(g[i][j]) * (1 if i == j else 2)
            if c:
                e = [0] * n
                e[i] += 1
                e[j] += 1
                terms[tuple(e)] = terms.get(tuple(e), Fraction(0)) + c
    return RatPoly.from_dict(terms, variables)


def signature(q: Sequence[Sequence[Fraction]]) -> tuple[int, int]:
    """Inertia (p, q) of a rational symmetric matrix by exact congruence reduction
    通过精确合同约化计算有理对称矩阵的惯性指数

    Returns:
        (positive count, negative count) 正、负特征值个数
    """
    a = [[Fraction(x) for x in row] for row in q]
    n = len(a)
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i]:
                raise ValueError("signature expects a symmetric matrix")
    pos = neg = 0
    active = list(range(n))
    while active:
        pivot = next((i for i in active if a[i][i] != 0), None)
        if pivot is None:
            pair = next(
                ((i, j) for i in active for j in active if i != j and a[i][j] != 0), None
            )
            if pair is None:
                break
            i, j = pair
            # Congruence row_i += row_j, col_i += col_j makes a_ii = 2 a_ij 合同变换
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            pivot = i
        d = a[pivot][pivot]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(pivot)
        for r in active:
            factor = a[r][pivot] / d
            if factor:
                for k in range(n):
                    a[r][k] -= factor * a[pivot][k]
        for r in active:
            a[pivot][r] = a[r][pivot] = Fraction(0)
        for r in active:
            for k in active:
                a[k][r] = a[r][k]
    return pos, neg


def rank(m: Sequence[Sequence[Fraction]]) -> int:
    """Rank over Q 有理秩"""
    rows = [[Fraction(x) for x in row] for row in m]
    return len(_row_echelon(rows, _QQ_OPS)[1])


def determinant(m: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant over Q by elimination 有理行列式"""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det


def inverse(m: Sequence[Sequence[Fraction]]) -> Matrix:
    """Inverse over Q 有理逆矩阵"""
    n = len(m)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(m)
    ]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("matrix is singular")
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def mat_mul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    return [
        [sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def transpose(a: Sequence[Sequence[Any]]) -> list[list[Any]]:
    return [list(col) for col in zip(*a)]


# ─── elimination over an arbitrary exact field ───


class _FieldOps:
    """Field operations over a sympy domain or Fraction 域运算"""

    def __init__(self, domain: Any = None):
        self.domain = domain

    def zero(self) -> Any:
        return Fraction(0) if self.domain is None else self.domain.zero

    def one(self) -> Any:
        return Fraction(1) if self.domain is None else self.domain.one

    def is_zero(self, a: Any) -> bool:
        return a == 0 if self.domain is None else bool(self.domain.is_zero(a))

    def div(self, a: Any, b: Any) -> Any:
        return a / b if self.domain is None else self.domain.quo(a, b)


_QQ_OPS = _FieldOps()


def _row_echelon(rows: list[list[Any]], ops: _FieldOps) -> tuple[list[list[Any]], list[int]]:
    """Reduced row echelon form and pivot columns 行最简形与主元列"""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if not ops.is_zero(rows[i][c])), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [ops.div(x, piv) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not ops.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def nullspace(rows: Sequence[Sequence[Any]], domain: Any = None) -> list[list[Any]]:
    """Basis of {x : rows · x = 0} over Q (domain None) or a sympy field domain
    零空间基（Q 或 sympy 域）

    Args:
        rows: Coefficient rows 系数行
        domain: sympy field domain such as QQ.algebraic_field(sqrt(2)); None means Fraction
    """
    ops = _FieldOps(domain)
    work = [list(r) for r in rows]
    if not work:
        raise ValueError("nullspace needs at least one row")
    ncols = len(work[0])
    echelon, pivots = _row_echelon(work, ops)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [ops.zero() for _ in range(ncols)]
        vec[f] = ops.one()
        for i, pc in enumerate(pivots):
            vec[pc] = -echelon[i][f]
        basis.append(vec)
    return basis


# ─── projective frames ───


def complete_basis(points: Sequence[Sequence[Fraction]]) -> Matrix:
    """Frame whose last columns are `points`, completed by standard basis vectors
    以给定点为最后几列、用标准基补全的标架

    Raises:
        ValueError: if the points are linearly dependent 点线性相关
    """
    pts = [[Fraction(c) for c in p] for p in points]
    n = len(pts[0])
    if rank(pts) < len(pts):
        raise ValueError("points are linearly dependent")
    chosen: list[list[Fraction]] = []
    for i in range(n):
        if len(chosen) + len(pts) == n:
            break
        e = [Fraction(int(i == j)) for j in range(n)]
        if rank(chosen + [e] + pts) == len(chosen) + 1 + len(pts):
            chosen.append(e)
    return transpose(chosen + pts)


def pullback(f: RatPoly, frame: Sequence[Sequence[Fraction]]) -> RatPoly:
    """f(T·Y) over the same variable names 线性换元 f(T·Y)"""
    names = f.variables
    images = {
        old: RatPoly.linear_form([frame[i][j] for j in range(len(names))], names)
        for i, old in enumerate(names)
    }
    return f.substitute(images, names)
