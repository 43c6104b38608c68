"""Curve topology tests 曲线拓扑测试"""

from fractions import Fraction

import pytest

from spectral_cubics.algebra import parse_poly
from spectral_cubics.errors import NotSquareFree, SingularInput
from spectral_cubics.pipeline import nest_family
from spectral_cubics.topology import (
    FOUR_I,
    FOUR_II,
    NEST,
    QUINTIC_CLASSES,
    LocalType,
    class_code,
    singular_locus,
    topology,
)

from .oracles import sign_grid_components

PLANE = ("x", "y", "z")


def _curve(text: str):
    return parse_poly(text, PLANE)


@pytest.mark.parametrize(
    "args, code",
    [
        ((5, 0, 0), "J"),
        ((5, 3, 0), "J⊔3"),
        ((5, 2, 1), NEST),
        ((5, 4, 0, "I"), FOUR_I),
        ((5, 4, 0, "II"), FOUR_II),
        ((3, 1, 0), "J⊔1"),
        ((2, 1, 0), "1"),
        ((4, 0, 0), "0"),
        ((4, 3, 1), "3(1 nested)"),
    ],
)
def test_class_codes(args, code):
    assert class_code(*args) == code


def test_quintic_class_list_is_complete():
    assert len(QUINTIC_CLASSES) == 9
    assert QUINTIC_CLASSES[0] == "J" and NEST in QUINTIC_CLASSES


def test_circle_is_one_oval():
    topo = topology(_curve("x^2 + y^2 - z^2"))
    assert topo.class_code == "1"
    assert topo.oval_count == 1
    assert topo.j_witness is None


def test_fermat_quintic_is_a_pseudoline():
    topo = topology(_curve("x^5 + y^5 + z^5"))
    assert topo.class_code == "J"
    assert topo.oval_count == 0
    assert topo.j_witness is not None
    assert topo.j_witness.y_lo <= topo.j_witness.y_hi


def test_elliptic_cubic_has_an_oval_and_a_pseudoline():
    topo = topology(_curve("y^2*z - x^3 + x*z^2"))
    assert topo.class_code == "J⊔1"
    assert topo.ovals[0].parent is None


def test_two_oval_quartic_matches_grid():
    f = _curve("x^4 + y^4 - 5*x^2*z^2 + 4*z^4")
    topo = topology(f)
    assert topo.class_code == "2"
    assert sign_grid_components(f, radius=3.0) == 2


def test_nest_matches_grid():
    member, _ = nest_family()
    f = member(Fraction(1, 100))
    topo = topology(f)
    assert topo.class_code == NEST
    nested = [o for o in topo.ovals if o.parent is not None]
    assert len(nested) == 1
    # the pseudoline stays near the line at infinity, outside the square
    assert sign_grid_components(f, radius=3.0) == topo.oval_count


def test_singular_curves_are_rejected():
    with pytest.raises(SingularInput):
        topology(_curve("y^2*z - x^3 - x^2*z"))
    with pytest.raises(SingularInput):
        topology(_curve("x^6 + y^6 - z^6"))


def test_node_types():
    crossing = singular_locus(_curve("y^2*z - x^3 - x^2*z"))
    assert [p.local_type for p in crossing.real_points] == [LocalType.CROSS_NODE]
    solitary = singular_locus(_curve("y^2*z + x^3 + x^2*z"))
    assert [p.local_type for p in solitary.real_points] == [LocalType.SOLITARY_NODE]


def test_cusp_is_a_single_real_singular_point():
    locus = singular_locus(_curve("x^3 - y^2*z"))
    assert not locus.smooth
    assert len(locus.real_points) == 1


def test_repeated_component_is_not_square_free():
    with pytest.raises(NotSquareFree):
        singular_locus(_curve("x^2*z - 2*x*y*z + y^2*z"))
