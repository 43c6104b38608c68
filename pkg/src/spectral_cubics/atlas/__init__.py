"""Deformation atlas 形变图集

Deformation classes of real cubic threefolds and plane quintics, their adjacency graphs, the
spectral matchings, real Fano components and monodromy orbits, as data plus the matching rule
实三次三维簇与平面五次曲线的形变类、邻接图、谱匹配、实 Fano 分支与单值轨道
"""

from .classes import (
    CUBIC_CLASSES,
    CUBIC_ORDER,
    QUINTIC_CLASS_TABLE,
    QUINTIC_ORDER,
    CubicClass,
    QuinticClass,
    cubic_class,
    quintic_class,
)
from .graphs import (
    CUBIC_GRAPH,
    QUINTIC_GRAPH,
    AdjacencyGraph,
    GraphEdge,
    adjacency,
    isomorphisms,
    quadrocubic_invariants,
)
from .fano import FANO_TABLE, FanoChoice, FanoRow, expected_quintic, fano_lookup, realizing_choice
from .monodromy import MonodromyFacts, monodromy_facts
from .matchings import (
    CrossCheck,
    MatchingCategory,
    MatchingRecord,
    cross_check,
    enumerate_matchings,
    matching_category,
)
from .checks import graph_properties_check
from .dump import AtlasTables, atlas_document, atlas_tables, dump_atlas

__all__ = [
    # Classes
    "CUBIC_CLASSES",
    "CUBIC_ORDER",
    "QUINTIC_CLASS_TABLE",
    "QUINTIC_ORDER",
    "CubicClass",
    "QuinticClass",
    "cubic_class",
    "quintic_class",
    # Graphs
    "CUBIC_GRAPH",
    "QUINTIC_GRAPH",
    "AdjacencyGraph",
    "GraphEdge",
    "adjacency",
    "isomorphisms",
    "quadrocubic_invariants",
    # Fano components and monodromy
    "FANO_TABLE",
    "FanoChoice",
    "FanoRow",
    "expected_quintic",
    "fano_lookup",
    "realizing_choice",
    "MonodromyFacts",
    "monodromy_facts",
    # Matchings
    "CrossCheck",
    "MatchingCategory",
    "MatchingRecord",
    "cross_check",
    "enumerate_matchings",
    "matching_category",
    "graph_properties_check",
    # Dump
    "AtlasTables",
    "atlas_document",
    "atlas_tables",
    "dump_atlas",
]
