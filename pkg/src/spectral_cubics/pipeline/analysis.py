"""Analysis chain 分析链

canonicalize → spectral_pair → diagnostics → topology → contact_check → region_report →
skew_test → atlas cross-check, one stage at a time, each failure wrapped as a StageError
逐阶段执行，每个失败包装为 StageError
"""

import hashlib
import json
import time
from contextlib import contextmanager
from typing import Any, Iterator, Optional, Union

from ..algebra import RatPoly, parse_poly
from ..atlas import cross_check
from ..atlas.classes import C1_I, C1_I2, C3_I
from ..errors import AtlasViolation, SingularInput, SpectralCubicsError, StageError
from ..models.config import AnalysisSettings
from ..models.documents import CubicDocument, CurveDocument
from ..models.reports import (
    AnalysisReport,
    AtlasSummary,
    ContactSummary,
    FactorEntry,
    LineDiagnostics,
    OvalSummary,
    RegionSummary,
    SpectralSummary,
    TopologySummary,
)
from ..threefold import (
    PLANE_VARS,
    LineSmoothness,
    MarkedCubic,
    from_document,
    line_smoothness,
    line_type,
    spectral_pair,
    theta_rank,
)
from ..topology import (
    NEST,
    ContactReport,
    CurveTopology,
    RegionReport,
    Verdict,
    contact_check,
    region_report,
    skew_test,
    topology,
)
from ..utils.logger import RunLogger, logger
from ..utils.metadata import run_metadata

Document = Union[CubicDocument, CurveDocument]

# Stage names 阶段名称
PARSE = "parse"
CANONICALIZE = "canonicalize"
SPECTRAL = "spectral_pair"
DIAGNOSTICS = "diagnostics"
TOPOLOGY = "topology"
CONTACT = "contact_check"
REGION = "region_report"
SKEW = "skew_test"
ATLAS = "atlas"


def run_id_for(doc: Document) -> str:
    """Run ID derived from the document, so identical inputs share an ID 由文档派生的运行 ID"""
    digest = hashlib.sha256(doc.model_dump_json().encode("utf-8")).hexdigest()
    return f"run_{digest[:16]}"


def _elapsed_ms(started_at: float) -> int:
    return int((time.perf_counter() - started_at) * 1000)


@contextmanager
def _stage(name: str, report: AnalysisReport, log: RunLogger) -> Iterator[None]:
    """Time one stage and wrap its failure 计时并包装失败"""
    started_at = time.perf_counter()
    log.debug(f"Stage {name} started")
    try:
        yield
    except StageError:
        raise
    except SpectralCubicsError as e:
        log.warn(f"Stage {name} failed", {"type": e.code, "error": str(e)})
        raise StageError(name, e) from e
    except Exception as e:
        log.error(f"Stage {name} crashed", e)
        raise StageError(name, e) from e
    finally:
        report.timings[name] = _elapsed_ms(started_at)


# ─── summaries ───


def _factors(f: RatPoly) -> list[FactorEntry]:
    _, factors = f.factor_list()
    entries = [
        FactorEntry(factor=str(g), degree=g.total_degree(), multiplicity=k) for g, k in factors
    ]
    return sorted(entries, key=lambda e: (e.degree, e.factor))


def topology_summary(topo: CurveTopology) -> TopologySummary:
    """Report form of a CurveTopology 拓扑结果的报告形式"""
    witness = None
    if topo.j_witness is not None:
        w = topo.j_witness
        witness = [str(w.x), str(w.y_lo), str(w.y_hi)]
    return TopologySummary(
        class_code=topo.class_code,
        degree=topo.degree,
        ovals=[
            OvalSummary(index=o.index, parent=o.parent, witness=[str(c) for c in o.witness])
            for o in topo.ovals
        ],
        j_witness=witness,
        chart=topo.chart.describe(),
        critical_count=topo.critical_count,
        slab_count=topo.slab_count,
    )


def contact_summary(contact: ContactReport) -> ContactSummary:
    real = []
    for p in contact.tangency_points:
        if not p.real:
            continue
        entry: dict[str, Any] = {"multiplicity": p.multiplicity, "component": p.component}
        if p.x_box is not None:
            entry["x"] = [str(p.x_box.lo), str(p.x_box.hi)]
        if p.y_approx is not None:
            entry["y_approx"] = p.y_approx
        real.append(entry)
    return ContactSummary(
        is_contact=contact.is_contact,
        multiplicities=sorted(contact.multiplicities),
        field=contact.field,
        real_tangencies=real,
        parity=dict(sorted(contact.parity.items())),
    )


def region_summary(region: RegionReport) -> RegionSummary:
    return RegionSummary(
        theta_real_type=region.theta_real_type.value,
        visible=dict(sorted(region.visible.items())),
        invisible=sorted(region.invisible),
        j_sign=region.j_sign,
        theta_inside=region.theta_inside,
    )


# ─── atlas lookup ───


def cubic_candidates(quintic: str, verdict: Verdict, region: RegionReport) -> Optional[list[str]]:
    """Cubic classes left for X by the region data, None when the atlas alone decides
    区域数据留给 X 的三次型类；由图集单独决定时为 None

    Three deformation classes of pairs have a nest as spectral curve: the skew one over C3_I,
    and two perfect ones told apart by whether both ovals are invisible with no oval around Θ_R.
    以嵌套为谱曲线的三个形变类：C3_I 上的斜匹配，以及由两卵形线是否均不可见区分的两个完美匹配。
    """
    if quintic != NEST:
        return None
    if verdict is Verdict.SKEW:
        return [C3_I]
    all_invisible = sorted(region.invisible) == sorted(region.visible)
    if all_invisible and region.theta_inside is None:
        return [C1_I2]
    return [C1_I]


def atlas_summary(
    quintic: str, verdict: Verdict, candidates: Optional[list[str]]
) -> AtlasSummary:
    result = cross_check(quintic, verdict, candidates)
    return AtlasSummary(
        status=result.status,
        quintic=result.quintic,
        verdict=result.verdict,
        cubic_candidates=candidates or sorted({r.cubic for r in result.records}),
        records=[
            {"cubic": r.cubic, "quintic": r.quintic, "category": r.category.value}
            for r in result.records
        ],
        citations=result.citations,
    )


# ─── chain ───


def _plane_pair(
    quintic: RatPoly,
    theta: Optional[RatPoly],
    report: AnalysisReport,
    settings: AnalysisSettings,
    log: RunLogger,
) -> AnalysisReport:
    """Topology, contact, region, verdict and atlas stages 曲线对的后续阶段"""
    companions = (theta,) if theta is not None else ()
    with _stage(TOPOLOGY, report, log):
        topo = topology(quintic, settings=settings, companions=companions)
        report.topology = topology_summary(topo)
    log.info("Quintic classified", {"class": topo.class_code})
    if theta is None:
        return report

    with _stage(CONTACT, report, log):
        contact = contact_check(quintic, theta, topo, settings)
        report.contact = contact_summary(contact)
    with _stage(REGION, report, log):
        region = region_report(quintic, theta, topo, settings)
        report.region = region_summary(region)
    with _stage(SKEW, report, log):
        verdict = skew_test(quintic, theta, topo, contact, region, settings)
        report.verdict = verdict.value
    with _stage(ATLAS, report, log):
        candidates = cubic_candidates(topo.class_code, verdict, region)
        report.atlas = atlas_summary(topo.class_code, verdict, candidates)
    log.info(
        "Atlas cross-check",
        {"verdict": verdict.value, "status": report.atlas.status},
    )
    return report


def analyze_marked_cubic(
    mc: MarkedCubic,
    settings: Optional[AnalysisSettings] = None,
    report: Optional[AnalysisReport] = None,
    log: Optional[RunLogger] = None,
) -> AnalysisReport:
    """Run the chain on a canonical marked cubic 对标准形标记三次型运行分析链

    A singular marked line stops after the diagnostics with the quintic's factorization.
    标记直线奇异时在诊断后停止，并给出五次式的分解。
    """
    settings = settings or AnalysisSettings()
    report = report or AnalysisReport(run_id="run_local", metadata=run_metadata())
    log = log or logger.with_run_id(report.run_id)

    with _stage(SPECTRAL, report, log):
        pair = spectral_pair(mc)
        report.spectral = SpectralSummary(
            quintic=str(pair.quintic),
            theta=str(pair.theta),
            quintic_vanishes=pair.quintic_vanishes,
            theta_vanishes=pair.theta_vanishes,
        )
    with _stage(DIAGNOSTICS, report, log):
        rank = theta_rank(mc)
        smoothness = line_smoothness(mc)
        report.line = LineDiagnostics(
            smoothness=smoothness.value, line_type=line_type(mc).value, theta_rank=rank
        )
        report.spectral.theta_is_square = rank == 1
        if smoothness is LineSmoothness.SINGULAR:
            report.degenerate = True
            if not pair.quintic_vanishes:
                report.spectral.quintic_factors = _factors(pair.quintic)
        elif pair.quintic_vanishes:
            raise SingularInput("spectral quintic vanishes identically")
    if report.degenerate:
        log.info("Marked line is singular on X", {"theta_rank": rank})
        return report
    return _plane_pair(pair.quintic, pair.theta, report, settings, log)


def analyze_document(
    doc: Document,
    settings: Optional[AnalysisSettings] = None,
    source: Optional[str] = None,
) -> AnalysisReport:
    """Run the chain on a threefold or curve document 对三次型或曲线文档运行分析链

    A curve document carries the quintic and its conic directly and skips the threefold stages.
    曲线文档直接给出五次曲线及其二次曲线，跳过三次三维簇阶段。

    Raises:
        StageError: a stage failed, naming it 某阶段失败
    """
    settings = settings or AnalysisSettings()
    report = AnalysisReport(
        run_id=run_id_for(doc),
        source=source,
        input=json.loads(doc.model_dump_json()),
        metadata=run_metadata(),
    )
    log = logger.with_run_id(report.run_id)
    log.debug("Analysis started", {"source": source})

    if isinstance(doc, CurveDocument):
        with _stage(PARSE, report, log):
            quintic = parse_poly(doc.curve, doc.variables).rename(PLANE_VARS)
            theta = parse_poly(doc.conic, doc.variables).rename(PLANE_VARS) if doc.conic else None
        return _plane_pair(quintic, theta, report, settings, log)

    with _stage(CANONICALIZE, report, log):
        mc = from_document(doc)
    return analyze_marked_cubic(mc, settings, report, log)


def require_pass(report: AnalysisReport) -> AnalysisReport:
    """Raise when the atlas cross-check failed 图集交叉检查失败时抛出

    Raises:
        AtlasViolation: the verdict contradicts the atlas 结论与图集矛盾
    """
    if report.atlas is not None and not report.atlas.passed:
        raise AtlasViolation(
            "verdict contradicts the deformation atlas",
            quintic=report.atlas.quintic,
            verdict=report.atlas.verdict,
            candidates=",".join(report.atlas.cubic_candidates),
        )
    return report
