"""Nodal cubic threefold tests 节点三次三维簇测试"""

from fractions import Fraction

import pytest

from spectral_cubics.algebra import parse_poly
from spectral_cubics.errors import (
    LineNotOnCubic,
    NotGeneral,
    NotSingularThere,
    WorseThanQuadratic,
)
from spectral_cubics.pipeline import c3i_cubic
from spectral_cubics.threefold import (
    LOCAL_VARS,
    THREEFOLD_VARS,
    project_quadrocubic,
    quadrocubic,
    quadrocubic_singular_points,
    segre_quadrocubic,
)

NODE = [Fraction(0)] * 4 + [Fraction(1)]
SLOPES = (Fraction(0), Fraction(1), Fraction(-1))


def test_c3i_node_has_split_signature():
    nd = quadrocubic(c3i_cubic(SLOPES), NODE)
    assert nd.real_signature == (2, 2)
    assert nd.f2 == parse_poly("x^2 + y^2 - z^2 - w^2", LOCAL_VARS)
    assert nd.f3.total_degree() == 3


def test_projection_from_the_node_squares_theta():
    nd = quadrocubic(c3i_cubic(SLOPES), NODE)
    report = project_quadrocubic(nd, [0, 1, 0, 1])
    assert not report.binodal
    assert report.theta_rank == 1
    assert report.theta_is_square
    assert report.signature_consistent
    assert report.quartic is None


def test_projection_needs_a_point_of_the_quadrocubic():
    nd = quadrocubic(c3i_cubic(SLOPES), NODE)
    with pytest.raises(LineNotOnCubic):
        project_quadrocubic(nd, [1, 0, 0, 0])


def test_smooth_point_is_not_a_node():
    with pytest.raises(NotSingularThere):
        quadrocubic(c3i_cubic(SLOPES), [0, 1, 0, 1, 0])


def test_cubic_cone_has_no_quadratic_part():
    cone = parse_poly("x^3 + y^3 + z^3 + u^3", THREEFOLD_VARS)
    with pytest.raises(WorseThanQuadratic):
        quadrocubic(cone, NODE)


def test_segre_quadrocubic_has_five_singular_points():
    nd = segre_quadrocubic()
    singular = quadrocubic_singular_points(nd)
    assert singular.count == 5
    assert singular.real_count == 5
    assert len(singular.rational_points) >= 3
    for point in singular.rational_points:
        assert nd.is_singular_point(point)


def test_tangent_components_are_not_five_nodes():
    # t = s² meets s·(1 − 4t + t²) = −t − t² where s(s − 1)²(s² + 3s + 1) = 0
    nd = segre_quadrocubic(
        F21="s0^2*t1 - s1^2*t0",
        F12="s1*(t0^2 - 4*t0*t1 + t1^2) + s0*(t0*t1 + t1^2)",
    )
    with pytest.raises(NotGeneral) as err:
        quadrocubic_singular_points(nd)
    assert err.value.details["count"] == 4


def test_binodal_line_splits_the_quintic():
    nd = segre_quadrocubic()
    point = quadrocubic_singular_points(nd).rational_points[0]
    report = project_quadrocubic(nd, point)
    assert report.binodal
    assert report.theta_is_square
    assert report.quintic_divisible


def test_components_must_be_irreducible():
    with pytest.raises(NotGeneral):
        segre_quadrocubic(F21="s0^2*t0")
