"""Serialized form of the atlas 图集的序列化形式"""

import json
from dataclasses import dataclass
from typing import Any

from pydantic import TypeAdapter

from .classes import (
    CUBIC_CLASSES,
    CUBIC_ORDER,
    QUINTIC_CLASS_TABLE,
    QUINTIC_ORDER,
    CubicClass,
    QuinticClass,
)
from .fano import FANO_TABLE, FanoRow
from .graphs import CUBIC_GRAPH, QUINTIC_GRAPH, AdjacencyGraph
from .matchings import MatchingRecord, enumerate_matchings
from .monodromy import MonodromyFacts, monodromy_facts


@dataclass(frozen=True)
class AtlasTables:
    """Every table of the atlas 图集的全部表格"""

    cubic_classes: tuple[CubicClass, ...]
    quintic_classes: tuple[QuinticClass, ...]
    cubic_graph: AdjacencyGraph
    quintic_graph: AdjacencyGraph
    matchings: tuple[MatchingRecord, ...]
    fano: tuple[FanoRow, ...]
    monodromy: tuple[MonodromyFacts, ...]


_ADAPTER = TypeAdapter(AtlasTables)


def atlas_tables() -> AtlasTables:
    return AtlasTables(
        cubic_classes=tuple(CUBIC_CLASSES[c] for c in CUBIC_ORDER),
        quintic_classes=tuple(QUINTIC_CLASS_TABLE[q] for q in QUINTIC_ORDER),
        cubic_graph=CUBIC_GRAPH,
        quintic_graph=QUINTIC_GRAPH,
        matchings=tuple(enumerate_matchings()),
        fano=tuple(FANO_TABLE[c] for c in CUBIC_ORDER),
        monodromy=tuple(monodromy_facts(c) for c in CUBIC_ORDER),
    )


def atlas_document() -> dict[str, Any]:
    """JSON-ready dict of every table 全部表格的 JSON 字典"""
    return _ADAPTER.dump_python(atlas_tables(), mode="json")


def dump_atlas() -> str:
    """Stable JSON text of the atlas, sorted keys 键排序的稳定 JSON 文本"""
    return json.dumps(atlas_document(), sort_keys=True, ensure_ascii=False, indent=2) + "\n"
