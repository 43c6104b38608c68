"""Marked cubic threefold tests 带标记直线三次三维簇测试"""

import random
from fractions import Fraction

import pytest

from spectral_cubics.algebra import (
    det3,
    determinant,
    gram_matrix,
    inverse,
    parse_poly,
    pullback,
    signature,
)
from spectral_cubics.errors import DegenerateSpan, InputError, LineNotOnCubic
from spectral_cubics.models.documents import CubicDocument
from spectral_cubics.threefold import (
    PLANE_VARS,
    THREEFOLD_VARS,
    LineSmoothness,
    LineType,
    MarkedCubic,
    ResidualConic,
    canonicalize,
    from_document,
    line_smoothness,
    line_type,
    residual_conic_status,
    restrict_to_plane_line,
    spectral_pair,
    theta_parametrization_degenerate,
    theta_point,
    theta_rank,
    to_document,
)


@pytest.fixture
def veronese():
    """Theta is the conic xz = y², the quintic splits off the Fermat cubic"""
    return MarkedCubic.from_texts("x", "y", "z", "0", "0", "x^3 + y^3 + z^3")


def _theta_inertia(mc: MarkedCubic) -> set[int]:
    return set(signature(gram_matrix(spectral_pair(mc).theta)))


def test_spectral_pair_of_block_matrix(veronese):
    pair = spectral_pair(veronese)
    theta = parse_poly("x*z - y^2", PLANE_VARS)
    assert pair.theta == theta
    assert pair.quintic == theta * veronese.C
    assert not pair.quintic_vanishes and not pair.theta_vanishes


def test_entries_must_have_the_right_degree():
    with pytest.raises(InputError, match="L12"):
        MarkedCubic.from_texts("x", "y^2", "z", "0", "0", "x^3")


def test_diagnostics_of_a_simple_smooth_line(veronese):
    assert theta_rank(veronese) == 3
    assert line_smoothness(veronese) is LineSmoothness.SMOOTH
    assert line_type(veronese) is LineType.SIMPLE


def test_multiple_and_singular_lines():
    multiple = MarkedCubic.from_texts("x", "y", "x + y", "0", "0", "z^3")
    assert line_type(multiple) is LineType.MULTIPLE
    singular = MarkedCubic.from_texts("x", "0", "0", "y*z", "z^2", "x^3 + y^3")
    assert theta_rank(singular) == 0
    assert line_smoothness(singular) is LineSmoothness.SINGULAR


def test_residual_conics(veronese):
    assert residual_conic_status(veronese, (1, 0, 1)) is ResidualConic.EMPTY
    assert residual_conic_status(veronese, (1, 0, -1)) is ResidualConic.SINGULAR_FIBER
    assert residual_conic_status(veronese, (1, 0, -2)) is ResidualConic.REAL_CIRCLE


def test_theta_is_parametrized_by_the_line(veronese):
    s = theta_point(veronese, (Fraction(1), Fraction(2)))
    assert s == [4, -2, 1]
    assert spectral_pair(veronese).theta.evaluate(s) == 0

    fiber = theta_parametrization_degenerate(veronese, s)
    assert fiber.degenerate
    u, v = fiber.tangency
    assert u * 2 == v * 1
    assert not theta_parametrization_degenerate(veronese, (1, 0, 1)).degenerate


def test_theta_point_needs_a_simple_line():
    multiple = MarkedCubic.from_texts("x", "y", "x + y", "0", "0", "z^3")
    with pytest.raises(InputError):
        theta_point(multiple, (Fraction(1), Fraction(0)))


def test_document_round_trip(veronese):
    doc = to_document(veronese)
    assert from_document(doc) == veronese


def test_canonical_form_survives_a_coordinate_change(veronese):
    rng = random.Random(2)
    while True:
        a = [[Fraction(rng.randint(-3, 3)) for _ in range(5)] for _ in range(5)]
        if determinant(a) != 0:
            break
    moved = pullback(veronese.equation(), a)
    back = inverse(a)
    # the line x = y = z = 0 now spans the images of e4 and e5
    line = [[back[i][k] for i in range(5)] for k in (3, 4)]
    mc = canonicalize(moved, line)
    assert theta_rank(mc) == 3
    assert line_type(mc) is LineType.SIMPLE
    assert _theta_inertia(mc) == _theta_inertia(veronese)
    assert spectral_pair(mc).quintic.total_degree() == 5


def test_canonicalize_rejects_bad_lines():
    cubic = parse_poly("x^3 + y^3 + z^3 + u^3 + v^3", THREEFOLD_VARS)
    with pytest.raises(LineNotOnCubic):
        canonicalize(cubic, [[0, 0, 0, 1, 0], [0, 0, 0, 0, 1]])
    with pytest.raises(DegenerateSpan):
        canonicalize(cubic, [[0, 0, 0, 1, -1], [0, 0, 0, 2, -2]])


def test_cubic_document_with_renamed_variables():
    doc = CubicDocument(
        variables=["a", "b", "c", "d", "e"],
        cubic="d^2*a + e^2*c + 2*d*e*b + a^3 + b^3 + c^3",
        line=[["0", "0", "0", "1", "0"], ["0", "0", "0", "0", "1"]],
    )
    mc = from_document(doc)
    assert mc.L11 == parse_poly("x", PLANE_VARS)
    assert mc.L12 == parse_poly("y", PLANE_VARS)


def test_plane_section_spectrum_is_the_quintic_on_the_line(veronese):
    section = restrict_to_plane_line(veronese, (Fraction(0), Fraction(0), Fraction(1)))
    expected = parse_poly("-x^3*y^2 - y^5", ("x", "y"))
    assert det3(section.fundamental_matrix()) == expected
