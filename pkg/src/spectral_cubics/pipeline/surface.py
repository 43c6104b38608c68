"""Surface line report 曲面直线报告

Spectrum, marked-line type, the sixteen codes and the real lines counted among them
谱、标记直线类型、十六个码以及其中的实直线统计
"""

import hashlib
from typing import Optional

from ..errors import CertificationFailure, NonGeneric
from ..models.documents import SurfaceDocument
from ..models.reports import SurfaceReport
from ..surfaces import (
    binary_codes,
    census_from_codes,
    expected_real_lines,
    line_type,
    spectrum,
    surface_from_document,
)
from ..utils.logger import logger
from ..utils.metadata import run_metadata


def surface_report(
    doc: SurfaceDocument,
    source: Optional[str] = None,
) -> SurfaceReport:
    """Analyze a marked cubic surface 分析标记三次曲面

    Raises:
        LineNotOnCubic: the marked line is not on the surface 标记直线不在曲面上
        SpectrumDegenerate: the spectrum form vanishes or has a multiple root 谱退化
    """
    digest = hashlib.sha256(doc.model_dump_json().encode("utf-8")).hexdigest()
    run_id = f"run_{digest[:16]}"
    log = logger.with_run_id(run_id)

    ms = surface_from_document(doc)
    sp = spectrum(ms)
    report = SurfaceReport(
        run_id=run_id,
        source=source,
        spectral_form=str(sp.form),
        spectrum=sp.table(),
        counts=sp.counts(),
        expected_real_lines=expected_real_lines(sp),
        metadata=run_metadata(),
    )

    try:
        report.line_type = line_type(ms).value
    except NonGeneric as e:
        report.notes.append(f"line type: {e}")

    try:
        codes = binary_codes(ms)
    except CertificationFailure as e:
        report.notes.append(f"codes: {e}")
    else:
        census = census_from_codes(codes)
        report.codes = codes.table()
        report.parity = codes.parity
        report.digits = codes.digits
        report.real_lines = census.count
        report.truncated_codes = census.truncated_codes
        if not census.agrees:
            report.notes.append(
                f"real lines: {census.count} counted, {census.expected} expected from the spectrum"
            )

    log.info(
        "Surface analyzed",
        {"real_lines": report.real_lines, **sp.counts(), "codes": len(report.codes)},
    )
    return report
