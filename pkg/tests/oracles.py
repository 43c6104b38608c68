"""Brute-force constructions shared by the tests 测试共用的暴力构造"""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Optional, Sequence

import numpy as np
import sympy
from sympy import I

from spectral_cubics.algebra import RatPoly, nullspace, to_fraction
from spectral_cubics.models.config import AnalysisSettings
from spectral_cubics.surfaces import SURFACE_VARS

PLANE = ("a", "b", "c")

# six rational points of P² with no three collinear and not on a conic
SIX_POINTS = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3), (2, -1, 5)]

# four rational points and one conjugate pair: fifteen real lines
FOUR_AND_PAIR = ([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)], [(1, 2 + I, 3 - 2 * I)])
# two rational points and two conjugate pairs: seven real lines
TWO_AND_TWO_PAIRS = ([(1, 0, 0), (0, 1, 0)], [(1, 1, 2 + I), (1, 2 + I, 3 - 2 * I)])


def _monomials(n: int, degree: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(n), degree):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def _value(monom: Sequence[int], point: Sequence[int]) -> Fraction:
    out = Fraction(1)
    for e, x in zip(monom, point):
        out *= Fraction(x) ** e
    return out


def _complex_value(monom: Sequence[int], point: Sequence) -> sympy.Expr:
    return sympy.expand(sympy.Mul(*[sympy.sympify(c) ** e for e, c in zip(monom, point)]))


def _rows(degree: int, points: Sequence, pairs: Sequence) -> list[list[Fraction]]:
    """Vanishing conditions at rational points and at conjugate pairs, one row each for the real
    and imaginary part of a pair
    """
    monoms = _monomials(3, degree)
    rows = [[_value(m, p) for m in monoms] for p in points]
    for z in pairs:
        parts = [_complex_value(m, z).as_real_imag() for m in monoms]
        rows.append([to_fraction(re) for re, _ in parts])
        rows.append([to_fraction(im) for _, im in parts])
    return rows


def cubics_through(points: Sequence[Sequence[int]], pairs: Sequence = ()) -> list[RatPoly]:
    """Basis of the real plane cubics through the points and the conjugate pairs
    过给定点与共轭点对的实平面三次曲线基
    """
    monoms = _monomials(3, 3)
    rows = _rows(3, points, pairs)
    return [RatPoly.from_dict(dict(zip(monoms, vec)), PLANE) for vec in nullspace(rows)]


def blowup_map(points: Sequence[Sequence[int]] = SIX_POINTS, pairs: Sequence = ()):
    """The map P² → P³ given by the cubics through six points 由过六点的三次曲线给出的映射"""
    cubics = cubics_through(points, pairs)
    assert len(cubics) == 4

    def phi(p: Sequence[int]) -> list[Fraction]:
        return [f.evaluate([Fraction(c) for c in p]) for f in cubics]

    return cubics, phi


def blowup_surface(points: Sequence[Sequence[int]] = SIX_POINTS, pairs: Sequence = ()) -> RatPoly:
    """Cubic surface of P² blown up at six points, all 27 lines rational when no pair is given
    六点爆破得到的三次曲面，无共轭点对时 27 条直线皆有理
    """
    cubics, _ = blowup_map(points, pairs)
    monoms = _monomials(4, 3)
    images = []
    for m in monoms:
        image = RatPoly.constant(1, PLANE)
        for f, e in zip(cubics, m):
            for _ in range(e):
                image = image * f
        images.append(image.terms())
    targets = sorted({t for image in images for t in image})
    rows = [[image.get(t, Fraction(0)) for image in images] for t in targets]
    kernel = nullspace(rows)
    assert len(kernel) == 1
    return RatPoly.from_dict(dict(zip(monoms, kernel[0])), SURFACE_VARS)


def blowup_line(points: Sequence[Sequence[int]] = SIX_POINTS) -> list[list[Fraction]]:
    """Two points of the image of the line through the first two blown-up points
    过前两个爆破点的直线之像上的两点
    """
    _, phi = blowup_map(points)
    p, q = points[0], points[1]
    return [phi([a + b for a, b in zip(p, q)]), phi([a + 2 * b for a, b in zip(p, q)])]


def _independent(p: Sequence[Fraction], q: Sequence[Fraction]) -> bool:
    return any(p[i] * q[j] != p[j] * q[i] for i in range(len(p)) for j in range(i + 1, len(p)))


def _parts(z: Sequence) -> tuple[list[Fraction], list[Fraction]]:
    parts = [sympy.sympify(c).as_real_imag() for c in z]
    return [to_fraction(re) for re, _ in parts], [to_fraction(im) for _, im in parts]


def point_line(phi, p: Sequence[int], q: Sequence[int]) -> list[list[Fraction]]:
    """Image of the line through two rational base points 过两个有理爆破点的直线之像"""
    return [phi([a + b for a, b in zip(p, q)]), phi([a + 2 * b for a, b in zip(p, q)])]


def pair_line(phi, z: Sequence) -> list[list[Fraction]]:
    """Image of the real line through a conjugate pair 过共轭点对的实直线之像"""
    return [phi(part) for part in _parts(z)]


def exceptional_line(cubics: Sequence[RatPoly], p: Sequence[int]) -> list[list[Fraction]]:
    """Image of the exceptional curve over a rational base point 有理爆破点上例外曲线之像"""
    point = [Fraction(c) for c in p]
    columns = [[g.evaluate(point) for g in f.gradient()] for f in cubics]
    images = [[col[j] for col in columns] for j in range(3)]
    return next([u, v] for u, v in combinations(images, 2) if _independent(u, v))


def conic_line(
    phi, points: Sequence[Sequence[int]], pairs: Sequence, skip: int
) -> list[list[Fraction]]:
    """Image of the conic through every base point except the rational point `skip`
    过除第 skip 个有理点外全部爆破点的二次曲线之像

    Points of the conic are second intersections with rational lines through a base point.
    """
    others = [p for k, p in enumerate(points) if k != skip]
    monoms = _monomials(3, 2)
    kernel = nullspace(_rows(2, others, pairs))
    assert len(kernel) == 1
    conic = RatPoly.from_dict(dict(zip(monoms, kernel[0])), PLANE)
    base = [Fraction(c) for c in others[0]]
    images: list[list[Fraction]] = []
    for d in [(1, 2, 5), (2, -3, 1), (3, 1, -4), (1, -1, 2), (5, 3, 7), (-2, 7, 3)]:
        q_d = conic.evaluate(list(d))
        q_pd = conic.evaluate([a + b for a, b in zip(base, d)])
        point = [q_d * a - (q_pd - q_d) * b for a, b in zip(base, d)]
        image = phi(point)
        if any(image) and all(_independent(image, other) for other in images):
            images.append(image)
        if len(images) == 2:
            return images
    raise AssertionError("conic has no two usable rational points")


def real_lines_four_and_pair() -> list[list[list[Fraction]]]:
    """The fifteen real lines of the blow-up at four rational points and a conjugate pair:
    four exceptional curves, six lines through two rational points, the line through the pair
    and four conics
    四个有理点与一对共轭点爆破后的十五条实直线
    """
    points, pairs = FOUR_AND_PAIR
    cubics, phi = blowup_map(points, pairs)
    lines = [exceptional_line(cubics, p) for p in points]
    lines += [point_line(phi, p, q) for p, q in combinations(points, 2)]
    lines.append(pair_line(phi, pairs[0]))
    lines += [conic_line(phi, points, pairs, k) for k in range(len(points))]
    return lines


# ─── numerical lines ───

# a binary cubic vanishing at four distinct points of P¹ is zero
_SAMPLES = [(1.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, -1.0)]


def _restricted(terms, graphs):
    """The cubic on u = a·x + b·y, v = c·x + d·y at the samples, with its Jacobian"""
    a, b, c, d = graphs.T
    values = np.zeros((len(graphs), 4), dtype=complex)
    jacobian = np.zeros((len(graphs), 4, 4), dtype=complex)
    for k, (x, y) in enumerate(_SAMPLES):
        u = a * x + b * y
        v = c * x + d * y
        f = np.zeros(len(graphs), dtype=complex)
        fu = np.zeros_like(f)
        fv = np.zeros_like(f)
        for (ex, ey, eu, ev), coeff in terms:
            base = coeff * x**ex * y**ey
            if base == 0:
                continue
            f += base * u**eu * v**ev
            if eu:
                fu += base * eu * u ** (eu - 1) * v**ev
            if ev:
                fv += base * ev * u**eu * v ** (ev - 1)
        values[:, k] = f
        jacobian[:, k] = np.stack([fu * x, fu * y, fv * x, fv * y], axis=1)
    return values, jacobian


def newton_lines(
    equation: RatPoly, seed: int = 0, starts: int = 4000, iterations: int = 100
) -> list[np.ndarray]:
    """Lines u = a·x + b·y, v = c·x + d·y of a surface by Newton's method from random starts
    由随机初值的牛顿迭代求曲面上形如 u = a·x + b·y, v = c·x + d·y 的直线

    Returns the distinct graphs (a, b, c, d) found; a smooth surface marked along x = y = 0 has
    sixteen.
    """
    terms = [(monom, float(c)) for monom, c in equation.terms().items()]
    height = max(abs(c) for _, c in terms)
    rng = np.random.default_rng(seed)

    def fresh(n: int) -> np.ndarray:
        scale = 10 ** rng.uniform(-1, 3, size=(n, 1))
        return scale * (rng.standard_normal((n, 4)) + 1j * rng.standard_normal((n, 4)))

    graphs = fresh(starts)
    with np.errstate(all="ignore"):
        for _ in range(iterations):
            lost = ~np.isfinite(graphs).all(axis=1) | (np.abs(graphs).max(axis=1) > 1e8)
            if lost.any():
                graphs[lost] = fresh(int(lost.sum()))
            values, jacobian = _restricted(terms, graphs)
            graphs = graphs - (np.linalg.pinv(jacobian) @ values[..., None])[..., 0]
        finite = np.isfinite(graphs).all(axis=1) & (np.abs(graphs).max(axis=1) <= 1e8)
        graphs = graphs[finite]
        values, _ = _restricted(terms, graphs)
    size = (1 + np.abs(graphs).max(axis=1)) ** 3
    graphs = graphs[np.abs(values).max(axis=1) <= 1e-9 * height * size]

    found: list[np.ndarray] = []
    for g in graphs:
        if not any(np.abs(g - f).max() <= 1e-6 * (1 + np.abs(f).max()) for f in found):
            found.append(g)
    return found


def is_real_graph(graph: np.ndarray) -> bool:
    return bool(np.abs(graph.imag).max() <= 1e-7 * (1 + np.abs(graph).max()))


def line_graph(points: Sequence[Sequence]) -> np.ndarray:
    """(a, b, c, d) of the line through two points (x, y, u, v) 过两点直线的 (a, b, c, d)"""
    p = np.array([[complex(c) for c in point] for point in points])
    ab = np.linalg.solve(p[:, :2], p[:, 2])
    cd = np.linalg.solve(p[:, :2], p[:, 3])
    return np.array([ab[0], ab[1], cd[0], cd[1]])


def same_graph(first: np.ndarray, second: np.ndarray) -> bool:
    return bool(np.abs(first - second).max() <= 1e-6 * (1 + np.abs(second).max()))


# ─── determinants ───


def cofactor_det(m: Sequence[Sequence]):
    """Determinant by expansion along the first row, entries from any ring
    沿首行展开的行列式，元素可取自任意环
    """
    rows = [list(r) for r in m]
    if len(rows) == 1:
        return rows[0][0]
    total = None
    for j in range(len(rows)):
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = rows[0][j] * cofactor_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def sylvester_resultant(f: RatPoly, g: RatPoly, var: str) -> RatPoly:
    """res(f, g; var) as the determinant of the Sylvester matrix, rows of f first
    Sylvester 矩阵行列式给出的结式，f 的行在前
    """
    idx = f.variables.index(var)

    def coefficients(p: RatPoly) -> list[RatPoly]:
        by_power: dict[int, dict] = {}
        for monom, c in p.terms().items():
            by_power.setdefault(monom[idx], {})[monom[:idx] + (0,) + monom[idx + 1 :]] = c
        return [
            RatPoly.from_dict(by_power.get(k, {}), f.variables)
            for k in range(p.degree(var), -1, -1)
        ]

    a, b = coefficients(f), coefficients(g)
    m, n = len(a) - 1, len(b) - 1
    zero = RatPoly.constant(0, f.variables)
    rows = [[zero] * i + a + [zero] * (n - 1 - i) for i in range(n)]
    rows += [[zero] * i + b + [zero] * (m - 1 - i) for i in range(m)]
    return cofactor_det(rows)


# ─── curves ───


def sign_grid_components(f: RatPoly, radius: float = 4.0, size: Optional[int] = None) -> int:
    """Connected bands of sign changes of f(x, y, 1) on a square grid
    方形网格上 f(x, y, 1) 变号带的连通分支数

    Counts the affine pieces of the real curve inside [-radius, radius]²; an oval well inside
    the square is one band.
    """
    size = size or AnalysisSettings().grid_size
    coords = np.linspace(-radius, radius, size + 1)
    xs, ys = np.meshgrid(coords, coords, indexing="ij")
    values = np.zeros_like(xs)
    for (ex, ey, ez), c in f.terms().items():
        values += float(c) * xs**ex * ys**ey
    signs = np.sign(values)
    corners = np.stack([signs[:-1, :-1], signs[1:, :-1], signs[:-1, 1:], signs[1:, 1:]])
    band = (corners.max(axis=0) > 0) & (corners.min(axis=0) < 0)

    seen = np.zeros_like(band)
    components = 0
    for start in zip(*np.nonzero(band)):
        if seen[start]:
            continue
        components += 1
        stack = [start]
        seen[start] = True
        while stack:
            i, j = stack.pop()
            for di in (-1, 0, 1):
                for dj in (-1, 0, 1):
                    a, b = i + di, j + dj
                    if 0 <= a < size and 0 <= b < size and band[a, b] and not seen[a, b]:
                        seen[a, b] = True
                        stack.append((a, b))
    return components


# ─── convex hulls ───


def _volume(u, v, w, x) -> float:
    return float(np.linalg.det(np.array([v - u, w - u, x - u])))


def _pierces(p, q, tri) -> bool:
    a, b, c = tri
    if _volume(a, b, c, p) * _volume(a, b, c, q) >= 0:
        return False
    sides = [_volume(p, q, a, b), _volume(p, q, b, c), _volume(p, q, c, a)]
    return all(s > 0 for s in sides) or all(s < 0 for s in sides)


def bipyramid_apexes(points: Sequence[Sequence]) -> tuple[int, int]:
    """The pair of five points whose segment pierces the triangle of the other three
    线段穿过其余三点三角形的那一对点
    """
    pts = [np.array([float(c) for c in p]) for p in points]
    hits = []
    for i, j in combinations(range(5), 2):
        tri = [pts[k] for k in range(5) if k not in (i, j)]
        if _pierces(pts[i], pts[j], tri):
            hits.append((i, j))
    assert len(hits) == 1, hits
    return hits[0]
