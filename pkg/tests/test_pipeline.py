"""Analysis chain tests 分析链测试"""

import pytest

from spectral_cubics.atlas.classes import C1_I, C1_I2, C3_I
from spectral_cubics.errors import AtlasViolation, PolySyntaxError, SingularInput, StageError
from spectral_cubics.models.documents import CurveDocument, SurfaceDocument
from spectral_cubics.models.reports import AnalysisReport, AtlasSummary
from spectral_cubics.pipeline import (
    CANONICALIZE,
    PARSE,
    TOPOLOGY,
    analyze_document,
    build_example,
    cubic_candidates,
    require_pass,
    run_id_for,
    surface_report,
)
from spectral_cubics.topology import NEST, RegionReport, ThetaRealType, Verdict


def _region(visible, theta_inside=None):
    return RegionReport(ThetaRealType.SMOOTH_NONEMPTY, visible, 1, theta_inside=theta_inside)


def test_candidates_only_for_the_nest():
    assert cubic_candidates("J⊔2", Verdict.PERFECT, _region({0: True})) is None


def test_skew_nest_lives_over_c3i():
    assert cubic_candidates(NEST, Verdict.SKEW, _region({1: True, 2: True})) == [C3_I]


def test_perfect_nest_candidates():
    hidden = _region({1: False, 2: False})
    assert cubic_candidates(NEST, Verdict.PERFECT, hidden) == [C1_I2]
    around = _region({1: False, 2: True}, theta_inside=2)
    assert cubic_candidates(NEST, Verdict.PERFECT, around) == [C1_I]


def test_run_id_is_a_content_hash():
    doc = CurveDocument(curve="x^5 + y^5 + z^5")
    assert run_id_for(doc) == run_id_for(CurveDocument(curve="x^5 + y^5 + z^5"))
    assert run_id_for(doc).startswith("run_")
    assert run_id_for(doc) != run_id_for(CurveDocument(curve="x^5 - y^5 + z^5"))


def test_curve_without_conic_stops_after_topology():
    report = analyze_document(CurveDocument(curve="x^5 + y^5 + z^5"))
    assert report.topology.class_code == "J"
    assert report.verdict is None and report.atlas is None
    assert report.passed
    assert TOPOLOGY in report.timings


def test_nest_document_passes_the_atlas():
    doc = build_example("nest-theta", {"epsilon": "1/100"})
    report = analyze_document(doc, source="nest.json")
    assert report.source == "nest.json"
    assert report.topology.class_code == NEST
    assert report.contact.is_contact
    assert report.contact.multiplicities == [2, 2, 2, 2, 2]
    assert report.verdict == Verdict.PERFECT.value
    assert report.atlas.cubic_candidates == [C1_I]
    assert require_pass(report) is report


def test_line_through_a_node_gives_a_degenerate_report():
    report = analyze_document(build_example("c3i-nodal"))
    assert report.degenerate
    assert report.line.smoothness == "SingularOnLine"
    assert report.line.theta_rank == 1
    assert report.spectral.theta_is_square
    assert report.topology is None
    assert report.passed


def test_parse_failure_names_its_stage():
    with pytest.raises(StageError) as err:
        analyze_document(CurveDocument(curve="x^5 +"))
    assert err.value.stage == PARSE
    assert isinstance(err.value.cause, PolySyntaxError)
    assert err.value.exit_code == 2


def test_singular_quintic_fails_in_topology():
    with pytest.raises(StageError) as err:
        analyze_document(CurveDocument(curve="y^2*z^3 - x^3*z^2 - x^2*z^3 + x^5"))
    assert err.value.stage == TOPOLOGY
    assert isinstance(err.value.cause, SingularInput)


def test_cubic_off_the_line_fails_in_canonicalize():
    line = [["1", "0", "0", "0", "0"], ["0", "0", "0", "0", "1"]]
    doc = build_example("c3i-nodal").model_copy(update={"line": line})
    with pytest.raises(StageError) as err:
        analyze_document(doc)
    assert err.value.stage == CANONICALIZE


def test_require_pass_raises_on_violation():
    report = AnalysisReport(
        run_id="run_x",
        atlas=AtlasSummary(
            status="Violation", quintic=NEST, verdict="Skew", cubic_candidates=[C1_I]
        ),
    )
    assert not report.passed
    with pytest.raises(AtlasViolation) as err:
        require_pass(report)
    assert err.value.exit_code == 4


def test_surface_report_counts_lines_over_an_irrational_spectrum():
    # -(x² − 2y²)(x + y) with u²x + v²y: two irrational planes of imaginary crossing type
    doc = SurfaceDocument(surface="x*u^2 + y*v^2 - x^3 - x^2*y + 2*x*y^2 + 2*y^3")
    report = surface_report(doc)
    assert report.counts == {"r_re": 3, "r_im": 2, "c": 0}
    assert len(report.codes) == 16
    assert report.digits is not None
    assert report.real_lines == report.expected_real_lines == 0
    assert not any(note.startswith("codes") for note in report.notes)


def test_surface_report_counts_real_lines_of_a_conjugate_pair():
    doc = SurfaceDocument(surface="x*u^2 + y*v^2 - x^3 - x^2*y - x*y^2 - y^3")
    report = surface_report(doc)
    assert report.real_lines == report.expected_real_lines == 8
    assert sum(row["real"] for row in report.codes) == 8
