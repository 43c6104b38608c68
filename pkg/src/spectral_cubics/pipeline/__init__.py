"""Analysis pipeline 分析流水线

Wires the algebra, topology and atlas packages into the reports the CLI prints
将代数、拓扑与图集各包串联为命令行输出的报告
"""

from .analysis import (
    ATLAS,
    CANONICALIZE,
    CONTACT,
    DIAGNOSTICS,
    PARSE,
    REGION,
    SKEW,
    SPECTRAL,
    TOPOLOGY,
    analyze_document,
    analyze_marked_cubic,
    atlas_summary,
    cubic_candidates,
    require_pass,
    run_id_for,
    topology_summary,
)
from .corpus import analyze_path, corpus_exit_code, corpus_files, run_corpus
from .examples import (
    EXAMPLES,
    STABLE_REPEATS,
    build_example,
    c3i_cubic,
    c3i_nodal,
    epsilon_search,
    nest_family,
    nest_theta,
    segre6,
)
from .inputs import AnyDocument, document_from_body, load_document, read_json
from .section import plane_line_form, section_count
from .surface import surface_report

__all__ = [
    # Analysis chain
    "ATLAS",
    "CANONICALIZE",
    "CONTACT",
    "DIAGNOSTICS",
    "PARSE",
    "REGION",
    "SKEW",
    "SPECTRAL",
    "TOPOLOGY",
    "analyze_document",
    "analyze_marked_cubic",
    "atlas_summary",
    "cubic_candidates",
    "require_pass",
    "run_id_for",
    "topology_summary",
    # Inputs and corpus
    "AnyDocument",
    "analyze_path",
    "corpus_exit_code",
    "corpus_files",
    "document_from_body",
    "load_document",
    "read_json",
    "run_corpus",
    # Examples
    "EXAMPLES",
    "STABLE_REPEATS",
    "build_example",
    "c3i_cubic",
    "c3i_nodal",
    "epsilon_search",
    "nest_family",
    "nest_theta",
    "segre6",
    # Sections and surfaces
    "plane_line_form",
    "section_count",
    "surface_report",
]
