"""Self-consistency of the atlas 图集自洽性检查"""

from collections import Counter
from typing import Callable

from ..models.reports import AtlasCheckReport
from ..utils.logger import logger
from .classes import CUBIC_CLASSES, CUBIC_ORDER, KLEIN_I, QUINTIC_CLASS_TABLE
from .fano import FANO_TABLE, ODD
from .graphs import (
    CUBIC_GRAPH,
    QUINTIC_GRAPH,
    AdjacencyGraph,
    isomorphisms,
    quadrocubic_invariants,
)
from .matchings import MatchingCategory, MatchingRecord, enumerate_matchings, matching_category

EXPECTED_COUNTS = {
    MatchingCategory.PERFECT.value: 9,
    MatchingCategory.SKEW_TYPE_PRESERVING.value: 6,
    MatchingCategory.SKEW_ADMISSIBLE_MIXED.value: 3,
}

Decoration = Callable[[str], tuple[int, str]]


def _cubic(code: str) -> tuple[int, str]:
    c = CUBIC_CLASSES[code]
    return c.d, c.klein


def _quintic(code: str) -> tuple[int, str]:
    q = QUINTIC_CLASS_TABLE[code]
    return q.d, q.klein


def _smith_adjacency(graph: AdjacencyGraph, decorate: Decoration) -> list[str]:
    out = []
    for e in graph.edges:
        gap = abs(decorate(e.u)[0] - decorate(e.v)[0])
        if gap != 1:
            out.append(f"{graph.name}: {e.u}-{e.v} discrepancies differ by {gap}")
    return out


def _klein_principle(graph: AdjacencyGraph, decorate: Decoration) -> list[str]:
    out = []
    for e in graph.edges:
        for a, b in ((e.u, e.v), (e.v, e.u)):
            if decorate(a)[1] == KLEIN_I and not decorate(a)[0] < decorate(b)[0]:
                out.append(f"{graph.name}: type I endpoint {a} of {e.u}-{e.v} is not lower")
    return out


def _quadrocubic_endpoints() -> list[str]:
    out = []
    for e in CUBIC_GRAPH.edges:
        if e.label is None or e.label == "0":
            # an empty real quadrocubic carries no type information
            continue
        lower = min((e.u, e.v), key=lambda c: CUBIC_CLASSES[c].d)
        if _cubic(lower) != quadrocubic_invariants(e.label):
            out.append(f"edge {e.label}: endpoint {lower} disagrees with its quadrocubic")
    return out


def _best_isomorphism() -> tuple[dict[str, str], list[str]]:
    best: tuple[dict[str, str], list[str]] = ({}, [])
    for mapping in isomorphisms(CUBIC_GRAPH, QUINTIC_GRAPH):
        mismatches = [c for c in CUBIC_ORDER if _cubic(c) != _quintic(mapping[c])]
        if not best[0] or len(mismatches) < len(best[1]):
            best = (mapping, mismatches)
    return best


def _realization(records: list[MatchingRecord]) -> list[str]:
    out = []
    choices = {(row.cubic, c.quintic) for row in FANO_TABLE.values() for c in row.choices}
    listed = {(r.cubic, r.quintic) for r in records}
    for x, s in sorted(choices - listed):
        out.append(f"Fano choice ({x}, {s}) is not a spectral matching")
    for x, s in sorted(listed - choices):
        out.append(f"matching ({x}, {s}) has no Fano component")
    for row in FANO_TABLE.values():
        for c in row.choices:
            perfect = matching_category(row.cubic, c.quintic) is MatchingCategory.PERFECT
            if perfect != (c.selector == ODD):
                out.append(f"({row.cubic}, {c.quintic}): odd component iff perfect fails")
    return out


def graph_properties_check() -> AtlasCheckReport:
    """Check the structural properties of the atlas 检查图集的结构性质

    Covers Smith adjacency and the Klein principle on both graphs, the quadrocubic labels, a
    combinatorial isomorphism of the graphs, the matching counts, and the agreement between
    the matchings and the Fano components that realize them.
    """
    report = AtlasCheckReport()
    sections = {
        "smith_adjacency": _smith_adjacency(CUBIC_GRAPH, _cubic)
        + _smith_adjacency(QUINTIC_GRAPH, _quintic),
        "klein_principle": _klein_principle(CUBIC_GRAPH, _cubic)
        + _klein_principle(QUINTIC_GRAPH, _quintic),
        "quadrocubic_endpoints": _quadrocubic_endpoints(),
    }

    mapping, mismatches = _best_isomorphism()
    report.isomorphism = mapping
    report.decoration_mismatches = mismatches
    sections["isomorphic"] = [] if mapping else ["graphs are not isomorphic"]

    records = enumerate_matchings()
    counts = Counter(r.category.value for r in records)
    report.counts = dict(sorted(counts.items()))
    sections["matching_counts"] = [
        f"{name}: expected {n}, found {counts.get(name, 0)}"
        for name, n in EXPECTED_COUNTS.items()
        if counts.get(name, 0) != n
    ]
    perfect = Counter(r.cubic for r in records if r.category is MatchingCategory.PERFECT)
    sections["one_perfect_per_cubic"] = [
        f"{c}: {perfect.get(c, 0)} perfect matchings" for c in CUBIC_ORDER if perfect.get(c) != 1
    ]
    sections["fano_realization"] = _realization(records)

    for name, failures in sections.items():
        report.checks[name] = not failures
        report.failures += failures
    logger.debug("Atlas checks", {"passed": report.passed, "mismatches": mismatches})
    return report
