"""Cubic surface line tests 三次曲面直线测试"""

from fractions import Fraction

import mpmath
import pytest
import sympy

from spectral_cubics.algebra import inverse, mat_mul
from spectral_cubics.errors import (
    CertificationFailure,
    InputError,
    NonGeneric,
    NotGeneral,
    SpectrumDegenerate,
)
from spectral_cubics.models.documents import SurfaceDocument
from spectral_cubics.surfaces import (
    LineKind,
    MarkedSurface,
    MergeCase,
    SpectralTag,
    SurfaceLine,
    binary_codes,
    canonicalize_surface,
    census_from_codes,
    complex_merging,
    expected_real_lines,
    line_type,
    lines_on_surface,
    real_line_census,
    real_merging,
    real_merging_case,
    residual_lines,
    segre_bipartition,
    spectrum,
    surface_from_document,
    surface_to_document,
)
from spectral_cubics.surfaces.approx import DEFAULT_DIGITS, Gap

from .oracles import (
    FOUR_AND_PAIR,
    TWO_AND_TWO_PAIRS,
    bipyramid_apexes,
    blowup_line,
    blowup_map,
    blowup_surface,
    is_real_graph,
    line_graph,
    newton_lines,
    pair_line,
    point_line,
    real_lines_four_and_pair,
    same_graph,
)


def _diagonal(cubic: str) -> MarkedSurface:
    """u²x + v²y + C(x, y), whose spectrum form is x·y·C 谱型为 x·y·C 的对角曲面"""
    return MarkedSurface.from_texts("x", "0", "y", "0", "0", cubic)


# -(x + y)(x + 2y)(2x + y): every spectral point of real crossing type
ALL_REAL = "-2*x^3 - 7*x^2*y - 7*x*y^2 - 2*y^3"
# -(x + y)(x² + y²): one conjugate pair, no imaginary crossing
ONE_PAIR = "-x^3 - x^2*y - x*y^2 - y^3"
# (x − y)(x − 2y)(x + y)
MOSTLY_IMAGINARY = "x^3 - 2*x^2*y - x*y^2 + 2*y^3"
# -(x² − 2y²)(x + y): irrational spectral points
IRRATIONAL = "-x^3 - x^2*y + 2*x*y^2 + 2*y^3"


@pytest.fixture(scope="module")
def m_surface():
    return canonicalize_surface(blowup_surface(), blowup_line()).surface


@pytest.fixture(scope="module")
def m_codes(m_surface):
    return binary_codes(m_surface)


def test_all_real_crossing_spectrum():
    sp = spectrum(_diagonal(ALL_REAL))
    assert sp.counts() == {"r_re": 5, "r_im": 0, "c": 0}
    assert sp.rational
    assert [p.plane() for p in sp.points[:4]] == [
        (Fraction(-2), Fraction(1)),
        (Fraction(-1), Fraction(1)),
        (Fraction(-1, 2), Fraction(1)),
        (Fraction(0), Fraction(1)),
    ]
    assert sp.points[4].at_infinity


def test_conjugate_pair_spectrum():
    sp = spectrum(_diagonal(ONE_PAIR))
    assert sp.counts() == {"r_re": 3, "r_im": 0, "c": 1}
    pair = [p for p in sp.points if p.tag is SpectralTag.IMAGINARY_PAIR]
    assert len(pair) == 2
    assert pair[0].approx == pytest.approx(pair[1].approx.conjugate())
    assert all(isinstance(p.root, sympy.CRootOf) for p in pair)
    assert sympy.conjugate(pair[0].root) == pair[1].root
    assert pair[0].approx == pytest.approx(1j)
    assert all(p.root.is_Rational for p in sp.points if p.real and not p.at_infinity)


def test_imaginary_crossing_spectrum():
    sp = spectrum(_diagonal(MOSTLY_IMAGINARY))
    assert sp.counts() == {"r_re": 1, "r_im": 4, "c": 0}


def test_irrational_points_are_tagged_by_sign():
    sp = spectrum(_diagonal(IRRATIONAL))
    assert not sp.rational
    assert [p.tag for p in sp.points] == [
        SpectralTag.REAL_CROSSING,
        SpectralTag.REAL_CROSSING,
        SpectralTag.IMAGINARY_CROSSING,
        SpectralTag.IMAGINARY_CROSSING,
        SpectralTag.REAL_CROSSING,
    ]
    irrational = [p for p in sp.points if not p.rational]
    assert len(irrational) == 2
    for p in irrational:
        assert isinstance(p.root, sympy.CRootOf)
        assert float(p.root.evalf(30)) ** 2 == pytest.approx(2)
        assert float(p.box.lo) < float(p.root.evalf(30)) < float(p.box.hi)


def test_degenerate_spectrum_is_rejected():
    with pytest.raises(SpectrumDegenerate):
        spectrum(_diagonal("y^3"))
    with pytest.raises(SpectrumDegenerate):
        spectrum(_diagonal("0"))


def test_irrational_spectrum_has_sixteen_codes():
    ms = _diagonal(IRRATIONAL)
    codes = binary_codes(ms)
    assert not codes.exact
    assert codes.digits == 2 * DEFAULT_DIGITS
    assert len(set(codes.words())) == 16
    assert len({c.parity for c in codes.codes}) == 1
    marked = SurfaceLine(points=([0, 0, 1, 0], [0, 0, 0, 1]))
    for code in codes.codes:
        assert code.line.lies_on(ms)
        assert not code.line.meets(marked)
        assert code.line.field == "approx"
    assert all(line.lies_on(ms) for pair in codes.residual for line in pair)


def test_witness_precision_is_bounded():
    with pytest.raises(InputError):
        binary_codes(_diagonal(IRRATIONAL), digits=8)


def test_gap_rejects_values_between_the_thresholds():
    gap = Gap(40)
    assert gap.is_zero(mpmath.mpf("1e-30"))
    assert not gap.is_zero(mpmath.mpf("1e-5"))
    with pytest.raises(CertificationFailure):
        gap.is_zero(mpmath.mpf("1e-15"))


def test_document_with_default_line_is_already_canonical():
    doc = SurfaceDocument(surface=f"x*u^2 + y*v^2 {ALL_REAL[0]} {ALL_REAL[1:]}")
    assert surface_from_document(doc) == _diagonal(ALL_REAL)


@pytest.mark.parametrize(
    "cubic, expected",
    [(ALL_REAL, 16), (ONE_PAIR, 8), (MOSTLY_IMAGINARY, 0), (IRRATIONAL, 0)],
)
def test_census_counts_the_lines_found_by_newton(cubic, expected):
    ms = _diagonal(cubic)
    graphs = newton_lines(ms.equation())
    assert len(graphs) == 16
    census = real_line_census(ms)
    assert census.count == sum(is_real_graph(g) for g in graphs) == expected
    assert census.expected == expected_real_lines(spectrum(ms))
    assert census.agrees
    assert len(set(census.truncated_codes)) == census.count


def test_truncated_codes_drop_pair_and_parity_bits():
    census = real_line_census(_diagonal(ONE_PAIR))
    assert census.informative_bits == 3
    assert len(set(census.truncated_codes)) == 8


def test_blown_up_surface_has_real_rational_spectrum(m_surface):
    sp = spectrum(m_surface)
    assert sp.r_re == 5
    assert sp.rational


def test_sixteen_codes_of_one_parity(m_codes, m_surface):
    assert len(set(m_codes.words())) == 16
    assert len({c.parity for c in m_codes.codes}) == 1
    marked = SurfaceLine(points=([0, 0, 1, 0], [0, 0, 0, 1]))
    for code in m_codes.codes:
        assert code.line.lies_on(m_surface)
        assert not code.line.meets(marked)


def test_swapping_a_pair_complements_one_bit(m_surface, m_codes):
    swapped = binary_codes(m_surface, swap=[2])
    for before, after in zip(m_codes.codes, swapped.codes):
        assert after.bits[2] == 1 - before.bits[2]
        assert after.bits[:2] + after.bits[3:] == before.bits[:2] + before.bits[3:]


def test_reordering_permutes_bits(m_surface, m_codes):
    order = (4, 3, 2, 1, 0)
    reordered = binary_codes(m_surface, order=order)
    for before, after in zip(m_codes.codes, reordered.codes):
        assert after.bits == tuple(before.bits[i] for i in order)


def test_exact_census_counts_real_coded_lines(m_surface, m_codes):
    census = census_from_codes(m_codes)
    assert m_codes.exact
    assert census.count == sum(c.line.real for c in m_codes.codes) == 16
    assert census.expected == 16
    assert real_line_census(m_surface, m_codes).truncated_codes == census.truncated_codes


def test_m_surface_has_fifteen_hyperbolic_lines(m_surface, m_codes):
    lines = lines_on_surface(m_surface, m_codes)
    assert len(lines) == 27
    assert all(line.lies_on(m_surface) for line in lines)
    kinds = [line_type(m_surface, line.rational_points()) for line in lines]
    assert kinds.count(LineKind.HYPERBOLIC) == 15
    assert kinds.count(LineKind.ELLIPTIC) == 12


@pytest.fixture(scope="module")
def four_and_pair():
    """Blow-up at four rational points and a pair, marked along the line through two points"""
    points, pairs = FOUR_AND_PAIR
    _, phi = blowup_map(points, pairs)
    marked = point_line(phi, points[0], points[1])
    return canonicalize_surface(blowup_surface(points, pairs), marked)


@pytest.fixture(scope="module")
def marked_on_a_pair():
    points, pairs = TWO_AND_TWO_PAIRS
    _, phi = blowup_map(points, pairs)
    return canonicalize_surface(blowup_surface(points, pairs), pair_line(phi, pairs[1]))


@pytest.fixture(scope="module")
def marked_on_real_points():
    points, pairs = TWO_AND_TWO_PAIRS
    _, phi = blowup_map(points, pairs)
    marked = point_line(phi, points[0], points[1])
    return canonicalize_surface(blowup_surface(points, pairs), marked)


@pytest.mark.parametrize(
    "surface, counts, real",
    [
        ("four_and_pair", {"r_re": 3, "r_im": 0, "c": 1}, 8),
        ("marked_on_a_pair", {"r_re": 1, "r_im": 0, "c": 2}, 4),
        ("marked_on_real_points", {"r_re": 3, "r_im": 2, "c": 0}, 0),
    ],
)
def test_codes_of_blown_up_surfaces_match_newton(request, surface, counts, real):
    ms = request.getfixturevalue(surface).surface
    assert spectrum(ms).counts() == counts
    codes = binary_codes(ms)
    assert len(set(codes.words())) == 16
    assert len({c.parity for c in codes.codes}) == 1

    graphs = newton_lines(ms.equation())
    assert len(graphs) == 16
    assert sum(is_real_graph(g) for g in graphs) == real
    for code in codes.codes:
        found = [g for g in graphs if same_graph(line_graph(code.line.points), g)]
        assert len(found) == 1
        assert code.line.real == is_real_graph(found[0])

    census = census_from_codes(codes)
    assert census.count == census.expected == real


def test_four_and_pair_has_nine_hyperbolic_lines(four_and_pair):
    ms = four_and_pair.surface
    kinds = []
    for line in real_lines_four_and_pair():
        points = [four_and_pair.to_new(p) for p in line]
        assert SurfaceLine(points=(points[0], points[1])).lies_on(ms)
        kinds.append(line_type(ms, points))
    assert len(kinds) == 15
    assert kinds.count(LineKind.HYPERBOLIC) == 9
    assert kinds.count(LineKind.ELLIPTIC) == 6


def test_line_type_reads_the_involution():
    assert line_type(_diagonal(ALL_REAL)) is LineKind.HYPERBOLIC
    elliptic = MarkedSurface.from_texts("x", "y", "-x", "0", "0", ALL_REAL)
    assert line_type(elliptic) is LineKind.ELLIPTIC
    with pytest.raises(NonGeneric):
        line_type(MarkedSurface.from_texts("x", "0", "x", "0", "0", ALL_REAL))


def test_complex_merging_pairs_01b_with_10b(m_codes):
    pattern = complex_merging(m_codes.words())
    assert pattern.consistent
    assert len(pattern.merging) == 4
    assert len(pattern.univalent) == 8
    for first, second in pattern.merging:
        assert first[2:] == second[2:]
        assert pattern.limits[first] == first[2:]


def test_real_merging_cases():
    case = real_merging_case(planes_real=False, lines_real=True)
    assert case is MergeCase.IMAGINARY_PLANES_REAL_LINES
    equal_bits = ["00000", "00011", "11000", "11011", "00101", "00110", "11101", "11110"]
    assert real_merging(equal_bits, case, c=1).consistent
    assert not real_merging(equal_bits, MergeCase.IMAGINARY_PLANES_IMAGINARY_LINES, c=1).consistent

    half = ["00000", "11000", "00011", "11011", "01001", "10001", "01010", "10010"]
    pattern = real_merging(half, MergeCase.REAL_PLANES_REAL_LINES, c=1)
    assert pattern.consistent
    assert ("01001", "10001") in pattern.merging
    with pytest.raises(InputError):
        real_merging_case(planes_real=True, lines_real=False)


def test_segre_poles_and_equator():
    equator = [
        (1, 0, 0),
        (Fraction(-3, 5), Fraction(4, 5), 0),
        (Fraction(-3, 5), Fraction(-4, 5), 0),
    ]
    points = [(0, 0, 1), (0, 0, -1)] + equator
    result = segre_bipartition(points)
    assert result.triple == (2, 3, 4)
    assert result.pair == (0, 1)
    assert len(result.facets) == 6


def test_segre_is_rotation_invariant():
    a, b, c = Fraction(1), Fraction(2), Fraction(3)
    skew = [[0, -c, b], [c, 0, -a], [-b, a, 0]]
    plus = [[Fraction(int(i == j)) + skew[i][j] for j in range(3)] for i in range(3)]
    minus = [[Fraction(int(i == j)) - skew[i][j] for j in range(3)] for i in range(3)]
    rotation = mat_mul(inverse(minus), plus)
    points = [(0, 0, 1), (0, 0, -1), (1, 0, 0), (Fraction(-3, 5), Fraction(4, 5), 0), (0, -1, 0)]
    rotated = [
        [sum(rotation[i][j] * Fraction(p[j]) for j in range(3)) for i in range(3)] for p in points
    ]
    assert segre_bipartition(rotated).triple == segre_bipartition(points).triple


def test_segre_rejects_coplanar_points():
    with pytest.raises(NotGeneral):
        segre_bipartition([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)])


def _sphere_point(a: int, b: int) -> tuple[Fraction, Fraction, Fraction]:
    n = Fraction(a * a + b * b + 1)
    return (Fraction(2 * a) / n, Fraction(2 * b) / n, Fraction(a * a + b * b - 1) / n)


def test_segre_pair_matches_piercing_oracle():
    points = [_sphere_point(a, b) for a, b in [(0, 0), (1, 0), (0, 2), (-1, 1), (3, -1)]]
    assert segre_bipartition(points).pair == bipyramid_apexes(points)


def test_residual_lines_of_blown_up_surface_are_rational(m_surface):
    for point in spectrum(m_surface).points:
        pair = residual_lines(m_surface, point)
        assert pair.rational
        assert pair.field == "Q"


def test_residual_lines_need_a_rational_plane():
    irrational = next(p for p in spectrum(_diagonal(IRRATIONAL)).points if p.plane() is None)
    with pytest.raises(SpectrumDegenerate):
        residual_lines(_diagonal(IRRATIONAL), irrational)


def test_surface_document_round_trip():
    ms = _diagonal(ALL_REAL)
    assert surface_from_document(surface_to_document(ms)) == ms
