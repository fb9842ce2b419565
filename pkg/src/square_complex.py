# -*- coding: utf-8 -*-
"""
方形复形与超图 / Square complexes and hypergraphs

The presentation complex of a length-4 presentation has one vertex, a loop
one-cell per generator and a square two-cell per relator. Its hypergraph
graph Γ joins the opposite sides of every square (sides 1-3 are pair 0,
sides 2-4 are pair 1); hypergraphs are the connected components of Γ.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Set, Tuple

import networkx as nx

from .presentation import Model, Presentation, num_relators

logger = logging.getLogger(__name__)

SQUARE_SIDES = 4


@dataclass(frozen=True)
class SquareComplex:
    """
    方形复形 / A square complex.

    one_cells maps an id to its (tail, head) vertices; two_cells maps an id to
    its four boundary sides, each a signed one-cell id (+k along the cell,
    -k against it).
    """
    vertex_count: int
    one_cells: Dict[int, Tuple[int, int]]
    two_cells: Dict[int, Tuple[int, ...]]

    def __post_init__(self):
        for cid, (tail, head) in self.one_cells.items():
            if not (0 <= tail < self.vertex_count and 0 <= head < self.vertex_count):
                raise ValueError(f"One-cell {cid} has an endpoint outside the vertex set")
        for cid, sides in self.two_cells.items():
            if len(sides) != SQUARE_SIDES:
                raise ValueError(f"Two-cell {cid} does not have {SQUARE_SIDES} sides")
            for side in sides:
                if abs(side) not in self.one_cells:
                    raise ValueError(f"Two-cell {cid} uses unknown one-cell {abs(side)}")
            # 边界须首尾相接 / the boundary must be a closed path
            for i, side in enumerate(sides):
                nxt = sides[(i + 1) % SQUARE_SIDES]
                if self._end(side) != self._start(nxt):
                    raise ValueError(f"Boundary of two-cell {cid} is not a closed path")

    def _start(self, side: int) -> int:
        tail, head = self.one_cells[abs(side)]
        return tail if side > 0 else head

    def _end(self, side: int) -> int:
        tail, head = self.one_cells[abs(side)]
        return head if side > 0 else tail

    def without(self, one_cells: Iterable[int] = (), two_cells: Iterable[int] = ()) -> "SquareComplex":
        """删去若干胞腔 / the subcomplex with the given cells removed"""
        drop_one, drop_two = set(one_cells), set(two_cells)
        remaining_two = {cid: s for cid, s in self.two_cells.items() if cid not in drop_two}
        remaining_one = {cid: e for cid, e in self.one_cells.items() if cid not in drop_one}
        for cid, sides in remaining_two.items():
            if any(abs(side) in drop_one for side in sides):
                raise ValueError(f"Two-cell {cid} still uses a removed one-cell")
        return SquareComplex(self.vertex_count, remaining_one, remaining_two)

    @property
    def euler_characteristic(self) -> int:
        return self.vertex_count - len(self.one_cells) + len(self.two_cells)


def build_presentation_complex(p: Presentation) -> SquareComplex:
    """群表示复形 / The presentation complex: one vertex, n loops, |R| squares"""
    one_cells = {g: (0, 0) for g in range(1, p.n + 1)}
    two_cells = {index: tuple(r) for index, r in enumerate(p.relators, start=1)}
    return SquareComplex(vertex_count=1, one_cells=one_cells, two_cells=two_cells)


# ========== 超图 Hypergraphs ==========

class HyperEdge(NamedTuple):
    u: int          # 一维胞腔 (对边之一)
    v: int
    two_cell: int   # 标记: 所在方块
    pair: int       # 0: 第1、3边; 1: 第2、4边


@dataclass
class HypergraphGraph:
    """超图图 Γ / the graph Γ: vertices are one-cells, two edges per square"""
    vertices: Tuple[int, ...]
    edges: Tuple[HyperEdge, ...]

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(self.vertices)
        for edge in self.edges:
            g.add_edge(edge.u, edge.v, key=(edge.two_cell, edge.pair), edge=edge)
        return g


@dataclass(frozen=True)
class Hypergraph:
    """超图 = Γ 的连通分支 / a connected component of Γ"""
    component_id: int
    vertices: FrozenSet[int]
    edges: Tuple[HyperEdge, ...]

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(self.vertices)
        for edge in self.edges:
            g.add_edge(edge.u, edge.v, key=(edge.two_cell, edge.pair), edge=edge)
        return g


@dataclass
class EmbeddingCheck:
    """嵌入树检测结果 / result of the embedded-tree test with its witness"""
    ok: bool
    cycle: Optional[List[HyperEdge]] = None
    repeated_two_cell: Optional[int] = None

    def witness(self) -> str:
        if self.cycle is not None:
            cells = ",".join(f"{e.two_cell}.{e.pair}" for e in self.cycle)
            return f"cycle:{cells}"
        if self.repeated_two_cell is not None:
            return f"two-cell:{self.repeated_two_cell}"
        return "none"


@dataclass
class HypergraphStats:
    component_count: int = 0
    tree_count: int = 0
    embedded_count: int = 0
    leaf_count: int = 0

    @property
    def all_embedded(self) -> bool:
        return self.embedded_count == self.component_count


def build_hypergraph_graph(x: SquareComplex) -> HypergraphGraph:
    """构建 Γ / Build Γ; |edges| = 2 |two-cells|"""
    edges = []
    for cid in sorted(x.two_cells):
        s = x.two_cells[cid]
        edges.append(HyperEdge(abs(s[0]), abs(s[2]), cid, 0))
        edges.append(HyperEdge(abs(s[1]), abs(s[3]), cid, 1))
    return HypergraphGraph(vertices=tuple(sorted(x.one_cells)), edges=tuple(edges))


def hypergraphs(gamma: HypergraphGraph) -> List[Hypergraph]:
    """连通分支, 按最小顶点编号 / components numbered by their smallest vertex"""
    g = gamma.to_networkx()
    components = sorted((frozenset(c) for c in nx.connected_components(g)), key=min)
    owner = {v: index for index, comp in enumerate(components) for v in comp}
    grouped: Dict[int, List[HyperEdge]] = {index: [] for index in range(len(components))}
    for edge in gamma.edges:
        grouped[owner[edge.u]].append(edge)
    return [Hypergraph(index, comp, tuple(grouped[index])) for index, comp in enumerate(components)]


def is_embedded_tree(component: Hypergraph) -> EmbeddingCheck:
    """
    嵌入树 / Embedded tree test.

    (a) no cycle, loops and parallel edges included;
    (b) no two-cell contributes two edges.
    The cycle witness is reported first when both fail.
    """
    if len(component.edges) != len(component.vertices) - 1:
        g = component.to_networkx()
        cycle = [g.edges[u, v, key]["edge"] for u, v, key in nx.find_cycle(g)]
        return EmbeddingCheck(False, cycle=cycle)
    counts = Counter(edge.two_cell for edge in component.edges)
    repeated = sorted(cid for cid, count in counts.items() if count > 1)
    if repeated:
        return EmbeddingCheck(False, repeated_two_cell=repeated[0])
    return EmbeddingCheck(True)


def carrier(component: Hypergraph) -> FrozenSet[int]:
    """载体: 含该超图边的方块 / the two-cells carrying the component's edges"""
    return frozenset(edge.two_cell for edge in component.edges)


def is_tree(component: Hypergraph) -> bool:
    return len(component.edges) == len(component.vertices) - 1


def leaf_vertices(gamma: HypergraphGraph) -> Set[int]:
    """Γ 中度为1的顶点 / vertices of degree one in Γ (a loop counts twice)"""
    degree = Counter()
    for edge in gamma.edges:
        degree[edge.u] += 1
        degree[edge.v] += 1
    return {v for v in gamma.vertices if degree[v] == 1}


def generators_occurring_once(p: Presentation) -> Set[int]:
    """恰好出现一次的生成元 / generators that occur exactly once in R"""
    counts = Counter(abs(letter) for relator in p.relators for letter in relator)
    return {g for g in range(1, p.n + 1) if counts[g] == 1}


def hypergraph_stats(p: Presentation) -> HypergraphStats:
    gamma = build_hypergraph_graph(build_presentation_complex(p))
    stats = HypergraphStats(leaf_count=len(leaf_vertices(gamma)))
    for component in hypergraphs(gamma):
        stats.component_count += 1
        stats.tree_count += is_tree(component)
        stats.embedded_count += is_embedded_tree(component).ok
    return stats


def leaf_probability_bound(n: int, d: float) -> float:
    """
    存在叶子的概率上界 (正模型) / Union bound on P(some generator occurs once).

    For a fixed generator a, p = (n^4 - (n-1)^4) C((n-1)^4, N-1) / C(n^4, N)
    is the chance that exactly one relator contains a; the bound is n * p,
    capped at 1. Positive model, N = floor(n^(4d)).
    """
    size = num_relators(n, d, Model.POSITIVE)
    total = n ** 4
    avoiding = (n - 1) ** 4
    if size == 0:
        return 0.0
    single = Fraction((total - avoiding) * comb(avoiding, size - 1), comb(total, size))
    return float(min(Fraction(1), n * single))
