# -*- coding: utf-8 -*-
"""
平凡性检测 / Triviality detection

Word-pair graph: vertices are the n^2 pairs (i, j); every positive relator
a_i a_j a_k a_l joins (i, j) and (k, l). When that graph is connected and has
an odd closed walk, all generators are equal and the group is Z/4 (positive
model) or Z/4 or Z/2 (square model).
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import networkx as nx

from .presentation import Presentation, Relator, is_positive
from .random_graph import gnm_to_gnp, is_odd_closed_walk, odd_cycle

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


class TrivialityStatus(Enum):
    CERTIFIED = "certified"
    UNKNOWN = "unknown"


@dataclass
class WordPairGraph:
    """字对图 / word-pair graph"""
    n: int
    graph: nx.MultiGraph
    r0_count: int = 0  # 形如 a_i a_j a_i a_j 的关系子 (自环)

    def stats(self) -> Dict[str, float]:
        """与 G(n^2, p) 比较用的统计量 / counts for the G(n^2, p) comparison"""
        vertices = self.graph.number_of_nodes()
        edges = self.graph.number_of_edges()
        return {
            "vertices": vertices,
            "edges": edges,
            "self_loops": self.r0_count,
            "gilbert_p": gnm_to_gnp(vertices, edges - self.r0_count),
        }


@dataclass
class TrivialityVerdict:
    """平凡性结论及证书 / verdict with its certificate"""
    status: TrivialityStatus
    spanning_tree: List[Tuple[Pair, Pair]] = field(default_factory=list)
    odd_walk: Optional[List[Pair]] = None
    reason: str = ""

    @property
    def certified(self) -> bool:
        return self.status is TrivialityStatus.CERTIFIED

    def sizes(self) -> Optional[Tuple[int, int]]:
        """证书大小 / (spanning-tree edges, odd-walk length), None when not certified"""
        if not self.certified or self.odd_walk is None:
            return None
        return len(self.spanning_tree), len(self.odd_walk) - 1


def build_word_pair_graph(p: Presentation) -> WordPairGraph:
    """
    构建字对图 / Build the word-pair graph from the positive relators of p.

    Non-positive relators are ignored. The multigraph keeps one edge per
    relator; R_0 relators become self-loops.
    """
    n = p.n
    graph = nx.MultiGraph()
    graph.add_nodes_from((i, j) for i in range(1, n + 1) for j in range(1, n + 1))
    r0_count = 0
    for relator in p.relators:
        if not is_positive(relator):
            continue
        a, b, c, d = relator
        graph.add_edge((a, b), (c, d), relator=tuple(relator))
        if (a, b) == (c, d):
            r0_count += 1
    return WordPairGraph(n=n, graph=graph, r0_count=r0_count)


def detect_trivial(p: Presentation) -> TrivialityVerdict:
    """ℤ4 证书 / certify that all generators coincide (connected, non-bipartite)"""
    wpg = build_word_pair_graph(p)
    if not nx.is_connected(wpg.graph):
        return TrivialityVerdict(TrivialityStatus.UNKNOWN, reason="word-pair graph is disconnected")
    walk = odd_cycle(wpg.graph)
    if walk is None:
        return TrivialityVerdict(TrivialityStatus.UNKNOWN, reason="word-pair graph is bipartite")
    root = (1, 1)
    tree = list(nx.bfs_edges(wpg.graph, root))
    logger.debug("triviality certified: %d tree edges, odd walk of length %d",
                 len(tree), len(walk) - 1)
    return TrivialityVerdict(TrivialityStatus.CERTIFIED, spanning_tree=tree, odd_walk=walk)


def replay_certificate(p: Presentation, verdict: TrivialityVerdict) -> bool:
    """
    复核证书 / Re-check a certificate against the presentation.

    The tree must span all n^2 pairs using word-pair edges and the walk must be
    an odd closed walk of the same graph.
    """
    if not verdict.certified or verdict.odd_walk is None:
        return False
    wpg = build_word_pair_graph(p)
    tree = nx.Graph()
    tree.add_nodes_from(wpg.graph.nodes)
    for u, v in verdict.spanning_tree:
        if not wpg.graph.has_edge(u, v):
            return False
        tree.add_edge(u, v)
    if not nx.is_tree(tree):
        return False
    return is_odd_closed_walk(wpg.graph, verdict.odd_walk)


def relator_exponent_sum(relator: Relator) -> int:
    return sum(1 if letter > 0 else -1 for letter in relator)


def certified_group_order(p: Presentation) -> int:
    """
    证书成立时的群阶 / Order of the cyclic group once all generators coincide.

    With a_i = g for all i the group is Z/gcd(4, exponent sums): 4 when every
    relator has exponent sum 0 or +-4, otherwise 2.
    """
    return math.gcd(4, *(relator_exponent_sum(r) for r in p.relators))
