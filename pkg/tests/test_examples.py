"""Example generator tests 示例生成器测试"""

from fractions import Fraction
from types import SimpleNamespace

import pytest

import spectral_cubics.pipeline.examples as examples_module
from spectral_cubics.algebra import RatPoly, parse_poly
from spectral_cubics.errors import CertificationFailure, InputError, SingularInput
from spectral_cubics.models.config import AnalysisSettings
from spectral_cubics.pipeline import build_example, epsilon_search, nest_family
from spectral_cubics.threefold import quadrocubic
from spectral_cubics.topology import NEST

PLANE = ("x", "y", "z")


def _scripted_topology(monkeypatch, codes):
    calls = iter(codes)

    def fake(f, settings=None):
        code = next(calls)
        if code is None:
            raise SingularInput("scripted singular member")
        return SimpleNamespace(class_code=code)

    monkeypatch.setattr(examples_module, "topology", fake)


def _family(eps: Fraction) -> RatPoly:
    return RatPoly.constant(eps, PLANE)


def test_epsilon_search_returns_start_of_stable_run(monkeypatch):
    _scripted_topology(monkeypatch, ["J⊔2", "J⊔1", "J⊔1", "J⊔1"])
    eps, code, rounds = epsilon_search(_family, AnalysisSettings())
    assert (eps, code, rounds) == (Fraction(1, 20), "J⊔1", 4)


def test_epsilon_search_skips_singular_members(monkeypatch):
    _scripted_topology(monkeypatch, [None, "J", "J", "J"])
    eps, code, _ = epsilon_search(_family, AnalysisSettings(epsilon_start="1/4"))
    assert (eps, code) == (Fraction(1, 8), "J")


def test_epsilon_search_gives_up(monkeypatch):
    _scripted_topology(monkeypatch, ["J", "J⊔1", "J"])
    with pytest.raises(CertificationFailure):
        epsilon_search(_family, AnalysisSettings(epsilon_rounds=3))


def test_nest_family_touches_theta_doubly():
    member, theta = nest_family()
    f = member(Fraction(1, 10))
    assert f.total_degree() == 5
    # on Θ the perturbation is the only surviving term and vanishes at (1, 0, 1)
    assert f.evaluate([1, 0, 1]) == 0
    assert theta == parse_poly("x^2 + y^2 - z^2", PLANE)


@pytest.mark.parametrize(
    "kwargs",
    [{"radius": Fraction(1)}, {"slope": Fraction(0)}, {"sign": 2}],
)
def test_nest_family_rejects_bad_parameters(kwargs):
    with pytest.raises(InputError):
        nest_family(**kwargs)


def test_nest_theta_with_fixed_epsilon():
    doc = build_example("nest-theta", {"epsilon": "1/100", "sign": "-"})
    assert doc.parameters["epsilon"] == "1/100"
    assert doc.parameters["epsilon_search"] == "fixed"
    assert doc.parameters["sign"] == "-"
    assert doc.conic is not None


def test_nest_theta_searches_epsilon():
    doc = build_example("nest-theta", {}, AnalysisSettings(epsilon_start="1/50"))
    assert doc.parameters["stable_class"] == NEST
    assert Fraction(doc.parameters["epsilon"]) <= Fraction(1, 50)


def test_c3i_nodal_marks_a_line_on_the_cubic():
    doc = build_example("c3i-nodal", {"slopes": "0,2,-1"})
    cubic = parse_poly(doc.cubic, doc.variables)
    for point in doc.points():
        assert cubic.evaluate(point) == 0
    assert quadrocubic(cubic, doc.points()[1]).real_signature == (2, 2)
    assert doc.parameters["slopes"] == "0,2,-1"


def test_c3i_nodal_needs_distinct_slopes():
    with pytest.raises(InputError):
        build_example("c3i-nodal", {"slopes": "1,1,2"})
    with pytest.raises(InputError):
        build_example("c3i-nodal", {"slopes": "1,2"})


def test_segre6_is_binodal_by_default():
    doc = build_example("segre6")
    assert doc.parameters["binodal"] == "true"
    assert doc.parameters["singular_points"] == "5"
    cubic = parse_poly(doc.cubic, doc.variables)
    for point in doc.points():
        assert cubic.evaluate(point) == 0


def test_unknown_example_and_parameter():
    with pytest.raises(InputError, match="unknown example"):
        build_example("klein")
    with pytest.raises(InputError, match="unknown parameter"):
        build_example("segre6", {"radius": "2"})
