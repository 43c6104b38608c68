"""Exact polynomial core tests 精确多项式核心测试"""

import random
from fractions import Fraction

import pytest

from spectral_cubics.algebra import (
    RatPoly,
    det3,
    determinant,
    discriminant,
    evaluate_line,
    format_poly,
    gram_matrix,
    isolate_real_roots,
    mat_mul,
    nullspace,
    parse_poly,
    quadratic_form,
    rank,
    rational_roots,
    real_root_count,
    refine,
    resultant,
    sign_at_root,
    signature,
    split_line_pair,
    transpose,
)
from spectral_cubics.algebra.poly import polys_in
from spectral_cubics.errors import PolySyntaxError, ZeroPolynomial

from .oracles import cofactor_det, sylvester_resultant

XY = ("x", "y")
XYZ = ("x", "y", "z")
X = ("x",)


def _random_matrix(rng: random.Random, n: int) -> list[list[Fraction]]:
    return [[Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)]


# ─── parsing ───


def test_parse_and_format_round_trip():
    p = parse_poly("y^2 + x^2", XY)
    assert format_poly(p) == "x^2 + y^2"
    q = parse_poly("-1/2*x*y + 3", XY)
    assert q.coefficient((1, 1)) == Fraction(-1, 2)
    assert format_poly(q) == "-1/2*x*y + 3"
    assert format_poly(RatPoly.constant(0, XY)) == "0"


def test_parse_collects_like_terms():
    p = parse_poly("x*y + y*x - 2*x*y", XY)
    assert p.is_zero


def test_unknown_variable_names_line_and_column():
    with pytest.raises(PolySyntaxError) as err:
        parse_poly("x^2 +\n  y*q", XY)
    assert (err.value.line, err.value.column) == (2, 5)
    assert "unknown variable 'q'" in str(err.value)


def test_missing_exponent_points_at_end():
    with pytest.raises(PolySyntaxError) as err:
        parse_poly("x^", XY)
    assert err.value.column == 3
    assert "end of input" in str(err.value)


@pytest.mark.parametrize(
    "text, fragment",
    [("", "empty polynomial"), ("3/0*x", "zero denominator"), ("x + ", "expected a term")],
)
def test_malformed_polynomials(text, fragment):
    with pytest.raises(PolySyntaxError, match=fragment):
        parse_poly(text, XY)


def test_exact_division():
    f = parse_poly("x^2 - y^2", XY)
    assert f.exquo(parse_poly("x - y", XY)) == parse_poly("x + y", XY)
    with pytest.raises(ArithmeticError):
        f.exquo(parse_poly("x + 2*y", XY))


# ─── resultants ───


def test_resultant_sign_convention():
    assert resultant(parse_poly("y^2 - x", XY), parse_poly("y", XY), "y") == parse_poly("-x", XY)


def test_discriminant_of_cusp_matches_sylvester():
    f = parse_poly("y^2 - x^3", XY)
    res = discriminant(f, "y")
    assert res == sylvester_resultant(f, f.diff("y"), "y")
    assert len(res.terms()) == 1


def test_resultant_matches_sylvester_on_random_pairs():
    rng = random.Random(7)
    for _ in range(10):
        f = RatPoly.from_dict(
            {(i, j): rng.randint(-3, 3) for i in range(3) for j in range(3)}, XY
        ) + parse_poly("y^3", XY)
        g = RatPoly.from_dict({(i, j): rng.randint(-3, 3) for i in range(2) for j in range(3)}, XY)
        if g.degree("y") <= 0:
            continue
        assert resultant(f, g, "y") == sylvester_resultant(f, g, "y")


def test_resultant_rejects_zero():
    with pytest.raises(ZeroPolynomial):
        resultant(RatPoly.constant(0, XY), parse_poly("y", XY), "y")


# ─── roots ───


def test_isolation_of_three_roots():
    f = parse_poly("x^3 - 2*x", X)
    boxes = isolate_real_roots(f)
    assert len(boxes) == 3
    assert boxes[1].contains(Fraction(0))
    assert boxes[0].separated_from(boxes[2])
    assert boxes[0].hi < 0 < boxes[2].lo


def test_refine_brackets_sqrt_two():
    f = parse_poly("x^2 - 2", X)
    box = refine(f, isolate_real_roots(f)[1], Fraction(1, 1000))
    assert box.width < Fraction(1, 1000)
    assert box.lo * box.lo < 2 < box.hi * box.hi


def test_sign_at_irrational_root():
    f = parse_poly("x^2 - 2", X)
    box = isolate_real_roots(f)[1]
    assert sign_at_root(f, box, parse_poly("x - 1", X)) == 1
    assert sign_at_root(f, box, parse_poly("2*x - 3", X)) == -1
    assert sign_at_root(f, box, parse_poly("x^3 - 2*x", X)) == 0


def test_rational_roots_and_counts():
    assert rational_roots(parse_poly("2*x^2 - x - 1", X)) == [Fraction(-1, 2), Fraction(1)]
    assert real_root_count(parse_poly("x^2 + 1", X)) == 0
    with pytest.raises(ZeroPolynomial):
        isolate_real_roots(RatPoly.constant(0, X))


def test_double_root_multiplicity():
    boxes = isolate_real_roots(parse_poly("x^3 - x^2", X))
    assert [b.multiplicity for b in boxes] == [2, 1]
    assert len(boxes) == 2


# ─── linear algebra ───


def test_signature_of_hyperbolic_plane():
    assert signature([[0, 1], [1, 0]]) == (1, 1)


def test_signature_is_congruence_invariant():
    rng = random.Random(3)
    diag = [[1, 0, 0], [0, -1, 0], [0, 0, -1]]
    for _ in range(10):
        p = _random_matrix(rng, 3)
        if determinant(p) == 0:
            continue
        assert signature(mat_mul(mat_mul(transpose(p), diag), p)) == (1, 2)


def test_determinant_matches_cofactor_expansion():
    rng = random.Random(11)
    for n in (2, 3, 4):
        m = _random_matrix(rng, n)
        assert determinant(m) == cofactor_det(m)


def test_det3_matches_cofactor_expansion():
    rng = random.Random(5)
    for _ in range(20):
        m = [
            [RatPoly.linear_form([rng.randint(-4, 4) for _ in XYZ], XYZ) for _ in range(3)]
            for _ in range(3)
        ]
        assert det3(m) == cofactor_det(m)


def test_gram_round_trip_and_rank():
    q = parse_poly("x^2 + 4*x*y - z^2", XYZ)
    g = gram_matrix(q)
    assert g[0][1] == 2
    assert quadratic_form(g, XYZ) == q
    assert rank(g) == 3
    assert len(nullspace([[Fraction(1), Fraction(1), Fraction(0)]])) == 2


# ─── conics ───


def test_rational_line_pair():
    pair = split_line_pair(parse_poly("x^2 - y^2", XYZ))
    assert pair.rational and pair.real
    assert pair.field == "Q"
    for line, point in zip(pair.lines, pair.points):
        assert evaluate_line(line, pair.vertex) == 0
        assert evaluate_line(line, point) == 0


def test_irrational_line_pair():
    pair = split_line_pair(parse_poly("x^2 - 2*y^2", XYZ))
    assert pair.disc == 8
    assert pair.field == "Q(sqrt(8))"
    assert pair.real and not pair.rational


def test_line_pair_needs_rank_two():
    with pytest.raises(ValueError):
        split_line_pair(parse_poly("x^2 + y^2 - z^2", XYZ))


def test_polys_in_share_variables():
    f, g = polys_in(("x", "y"), "x + y", "x - y")
    assert f.variables == g.variables == ("x", "y")
    assert f * g == parse_poly("x^2 - y^2", ("x", "y"))
