"""Quintic and conic position tests 五次曲线与二次曲线位置测试"""

from fractions import Fraction

import pytest

from spectral_cubics.algebra import parse_poly
from spectral_cubics.errors import ThetaNotReduced
from spectral_cubics.pipeline import nest_family
from spectral_cubics.topology import (
    ThetaRealType,
    Verdict,
    contact_check,
    intersection_multiplicities,
    line_intersection_type,
    region_report,
    skew_test,
    theta_real_type,
    topology,
)

PLANE = ("x", "y", "z")


@pytest.fixture(scope="module")
def nest():
    member, theta = nest_family()
    quintic = member(Fraction(1, 100))
    topo = topology(quintic, companions=(theta,))
    return quintic, theta, topo


@pytest.mark.parametrize(
    "conic, kind",
    [
        ("x^2 + y^2 - z^2", ThetaRealType.SMOOTH_NONEMPTY),
        ("x^2 - y^2", ThetaRealType.TWO_REAL_LINES),
        ("x^2 + y^2", ThetaRealType.IMAGINARY_PAIR),
        ("x^2 + y^2 + z^2", ThetaRealType.EMPTY),
    ],
)
def test_theta_real_types(conic, kind):
    assert theta_real_type(parse_poly(conic, PLANE)) is kind


def test_double_line_is_not_reduced():
    with pytest.raises(ThetaNotReduced):
        theta_real_type(parse_poly("x^2", PLANE))


def test_nest_touches_theta_five_times(nest):
    quintic, theta, topo = nest
    mults, _ = intersection_multiplicities(quintic, theta)
    assert mults == [2, 2, 2, 2, 2]
    report = contact_check(quintic, theta, topo)
    assert report.is_contact
    assert sum(p.multiplicity for p in report.tangency_points) == 10
    assert all(p.real for p in report.tangency_points)


def test_crossing_conic_is_not_a_contact_conic(nest):
    quintic, _, topo = nest
    report = contact_check(quintic, parse_poly("x^2 + y^2 - 9*z^2", PLANE))
    assert not report.is_contact
    assert sum(report.multiplicities) == 10


def test_nest_region_and_verdict(nest):
    quintic, theta, topo = nest
    region = region_report(quintic, theta, topo)
    assert region.theta_real_type is ThetaRealType.SMOOTH_NONEMPTY
    inner = next(o.index for o in topo.ovals if o.parent is not None)
    outer = next(o.index for o in topo.ovals if o.parent is None)
    assert region.invisible == [inner]
    assert region.theta_inside == outer
    assert skew_test(quintic, theta, topo, region=region) is Verdict.PERFECT


def test_line_through_the_inner_oval_has_no_real_lines(nest):
    quintic, theta, topo = nest
    prediction = line_intersection_type(quintic, theta, parse_poly("x - 2*y", PLANE), topo)
    assert prediction.no_real_lines
    assert prediction.b == 2


def test_line_missing_both_ovals(nest):
    quintic, theta, topo = nest
    prediction = line_intersection_type(quintic, theta, parse_poly("x + y - 5*z", PLANE), topo)
    assert not prediction.no_real_lines
    assert prediction.b == 0
    assert prediction.a % 2 == 1
    assert prediction.sheets == 2 ** ((prediction.a + 3) // 2)


def test_empty_conic_sees_every_oval():
    quintic = parse_poly("x^5 + y^5 + z^5", PLANE)
    conic = parse_poly("x^2 + y^2 + z^2", PLANE)
    region = region_report(quintic, conic, topology(quintic, companions=(conic,)))
    assert region.invisible == []
    assert region.theta_inside is None
