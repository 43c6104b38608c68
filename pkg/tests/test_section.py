"""Hyperplane section tests 超平面截面测试"""

from fractions import Fraction

import pytest

from spectral_cubics.errors import SectionSingular
from spectral_cubics.pipeline import plane_line_form, section_count
from spectral_cubics.threefold import MarkedCubic


@pytest.fixture(scope="module")
def generic():
    return MarkedCubic.from_texts(
        "x",
        "y",
        "z",
        "x*z + y^2",
        "x^2 - z^2 + y*z",
        "x^3 + 2*y^3 - z^3 + x*y*z",
    )


def test_plane_line_form():
    form = plane_line_form((Fraction(1), Fraction(-2), Fraction(3)))
    assert str(form) == "x - 2*y + 3*z"
    with pytest.raises(SectionSingular):
        plane_line_form((0, 0, 0))


def test_section_count_agrees_with_sheet_formula(generic):
    report = section_count(generic, (Fraction(1), Fraction(1), Fraction(7)))
    assert report.agrees
    assert report.predicted == report.counted
    assert report.outside + report.inside <= 5
    if report.inside:
        assert report.counted == 0
    else:
        assert report.counted == 2 ** ((report.outside + 3) // 2)


def test_singular_line_has_no_section_count():
    singular = MarkedCubic.from_texts("x", "0", "0", "y*z", "z^2", "x^3 + y^3")
    with pytest.raises(SectionSingular):
        section_count(singular, (Fraction(0), Fraction(0), Fraction(1)))
