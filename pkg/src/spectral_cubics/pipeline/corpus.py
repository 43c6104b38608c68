"""Corpus batch mode 语料批处理模式

Analyze every *.json document of a directory, in a worker pool when workers > 1; entries keep
the sorted file order
分析目录中的每个 *.json 文档；workers > 1 时使用进程池，结果保持文件排序
"""

from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Union

from ..errors import (
    EXIT_ATLAS,
    EXIT_COMPUTATION,
    EXIT_INPUT,
    EXIT_OK,
    SpectralCubicsError,
    StageError,
    error_payload,
)
from ..models.config import AnalysisSettings
from ..models.documents import CubicDocument, CurveDocument
from ..models.reports import CorpusEntry
from ..utils.error_log import record_error
from ..utils.logger import logger
from .analysis import analyze_document
from .inputs import load_document

PASS = "Pass"
VIOLATION = "Violation"
DEGENERATE = "Degenerate"
ERROR = "Error"

# Corpus exit status, highest precedence first 语料运行退出码，优先级从高到低
EXIT_PRECEDENCE = (EXIT_COMPUTATION, EXIT_ATLAS, EXIT_INPUT)


def corpus_files(directory: Union[str, Path]) -> list[Path]:
    """Sorted JSON documents of a directory 目录中排序后的 JSON 文档"""
    return sorted(p for p in Path(directory).glob("*.json") if p.is_file())


def analyze_path(path: str, settings_data: dict[str, Any]) -> CorpusEntry:
    """Analyze one file; never raises 分析单个文件，不抛出异常"""
    settings = AnalysisSettings(**settings_data)
    try:
        doc = load_document(path)
        if not isinstance(doc, (CubicDocument, CurveDocument)):
            return CorpusEntry(source=path, status="Skipped")
        report = analyze_document(doc, settings, source=path)
    except (SpectralCubicsError, Exception) as e:
        stage = e.stage if isinstance(e, StageError) else None
        payload = error_payload(e, stage)
        record_error(e.cause if isinstance(e, StageError) else e, "corpus", stage, path)
        return CorpusEntry(
            source=path,
            status=ERROR,
            exit_code=payload.get("status", EXIT_COMPUTATION),
            error=payload["error"],
        )
    if report.degenerate:
        status = DEGENERATE
    elif report.passed:
        status = PASS
    else:
        status = VIOLATION
    return CorpusEntry(source=path, status=status, exit_code=0, report=report)


def run_corpus(
    directory: Union[str, Path], settings: AnalysisSettings
) -> list[CorpusEntry]:
    """Analyze a directory of documents 分析一个目录中的文档"""
    files = [str(p) for p in corpus_files(directory)]
    data = settings.model_dump()
    logger.info("Corpus run", {"documents": len(files), "workers": settings.workers})
    if settings.workers <= 1 or len(files) <= 1:
        return [analyze_path(f, data) for f in files]
    with ProcessPoolExecutor(max_workers=settings.workers) as pool:
        return list(pool.map(analyze_path, files, [data] * len(files)))


def corpus_exit_code(entries: list[CorpusEntry]) -> int:
    """Exit status of a corpus run: 3 before 4 before 2, 0 when every entry passed
    语料运行的退出码：3 优先于 4，4 优先于 2；全部通过时为 0
    """
    codes = {e.exit_code for e in entries}
    if any(e.status == VIOLATION for e in entries):
        codes.add(EXIT_ATLAS)
    return next((code for code in EXIT_PRECEDENCE if code in codes), max(codes, default=EXIT_OK))
