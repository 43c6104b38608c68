"""Adjacency graphs of deformation classes 形变类的邻接图

Vertices are deformation classes; an edge joins two classes separated by a wall of one-nodal
curves. Edges of the cubic graph carry the class of the quadrocubic of the node: "k" for a
genus-4 curve with k real components, "k_I" for one of Klein type I.
顶点为形变类；边连接被单节点墙分隔的两个类。三次图的边标注节点的四三次曲线类。
"""

from dataclasses import dataclass
from typing import Iterator, Optional

from ..errors import InputError
from ..topology.curve import FOUR_I, FOUR_II, NEST
from .classes import (
    C0,
    C1,
    C1_I,
    C1_I2,
    C2,
    C3,
    C3_I,
    C4,
    C5,
    CUBIC_ORDER,
    KLEIN_I,
    QUINTIC_ORDER,
)


@dataclass(frozen=True)
class GraphEdge:
    """Edge between two classes 两类之间的边

    Attributes:
        u: Endpoint earlier in the class order 顺序靠前的端点
        v: Other endpoint 另一端点
        label: Quadrocubic class for the cubic graph 四三次曲线类
    """

    u: str
    v: str
    label: Optional[str] = None

    def joins(self, a: str, b: str) -> bool:
        return {self.u, self.v} == {a, b}


@dataclass(frozen=True)
class AdjacencyGraph:
    """Undirected graph on class codes 类代码上的无向图"""

    name: str
    vertices: tuple[str, ...]
    edges: tuple[GraphEdge, ...]

    def edge(self, a: str, b: str) -> Optional[GraphEdge]:
        for e in self.edges:
            if e.joins(a, b):
                return e
        return None

    def neighbours(self, a: str) -> list[str]:
        out = [e.v if e.u == a else e.u for e in self.edges if a in (e.u, e.v)]
        return sorted(out, key=self.vertices.index)

    def degree(self, a: str) -> int:
        return len(self.neighbours(a))


CUBIC_GRAPH = AdjacencyGraph(
    name="cubic threefolds",
    vertices=tuple(CUBIC_ORDER),
    edges=(
        GraphEdge(C0, C1_I2, "0"),
        GraphEdge(C0, C1_I, "1_I"),
        GraphEdge(C0, C1, "1"),
        GraphEdge(C1, C2, "2"),
        GraphEdge(C2, C3_I, "3_I"),
        GraphEdge(C2, C3, "3"),
        GraphEdge(C3, C4, "4"),
        GraphEdge(C4, C5, "5"),
    ),
)

QUINTIC_GRAPH = AdjacencyGraph(
    name="plane quintics",
    vertices=tuple(QUINTIC_ORDER),
    edges=(
        GraphEdge("J", "J⊔1"),
        GraphEdge("J⊔1", "J⊔2"),
        GraphEdge("J⊔1", NEST),
        GraphEdge("J⊔2", "J⊔3"),
        GraphEdge("J⊔3", FOUR_I),
        GraphEdge("J⊔3", FOUR_II),
        GraphEdge(FOUR_II, "J⊔5"),
        GraphEdge("J⊔5", "J⊔6"),
    ),
)


def quadrocubic_invariants(label: str) -> tuple[int, str]:
    """Smith discrepancy and Klein type of a genus-4 curve class 亏格 4 曲线类的 Smith 差与 Klein 类型

    A curve with k real components has d = 5 - k; it is of type I when k = 5 or the label
    carries the "_I" suffix.
    """
    k = int(label.split("_")[0])
    klein = KLEIN_I if k == 5 or label.endswith("_I") else "II"
    return 5 - k, klein


def adjacency(a: str, b: str) -> Optional[GraphEdge]:
    """Edge joining two classes of the same graph, if any 同一图中两类之间的边

    Raises:
        InputError: codes from different graphs or unknown codes 代码来自不同图或未知
    """
    for graph in (CUBIC_GRAPH, QUINTIC_GRAPH):
        if a in graph.vertices and b in graph.vertices:
            return graph.edge(a, b)
    raise InputError("classes do not belong to one adjacency graph", a=a, b=b)


def isomorphisms(source: AdjacencyGraph, target: AdjacencyGraph) -> Iterator[dict[str, str]]:
    """All graph isomorphisms, found by backtracking in vertex order 回溯搜索全部同构"""
    if len(source.vertices) != len(target.vertices) or len(source.edges) != len(target.edges):
        return

    def extend(mapping: dict[str, str]) -> Iterator[dict[str, str]]:
        if len(mapping) == len(source.vertices):
            yield dict(mapping)
            return
        a = source.vertices[len(mapping)]
        used = set(mapping.values())
        for b in target.vertices:
            if b in used or source.degree(a) != target.degree(b):
                continue
            if all(
                (source.edge(a, x) is None) == (target.edge(b, y) is None)
                for x, y in mapping.items()
            ):
                mapping[a] = b
                yield from extend(mapping)
                del mapping[a]

    yield from extend({})
