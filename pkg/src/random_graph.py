# -*- coding: utf-8 -*-
"""
随机图 / Random graphs

Erdős–Rényi G(n, m) and Gilbert G(n, p) samplers, connectivity, odd closed
walks (non-bipartiteness witnesses) and even-length walks. Graphs are
networkx graphs; self-loops count as odd closed walks of length 1.
"""

import logging
from enum import Enum
from typing import Hashable, List, Optional, Set, Tuple

import networkx as nx
import numpy as np

from .seeding import derive_seed, make_rng

logger = logging.getLogger(__name__)

Walk = List[Hashable]


class GraphProperty(Enum):
    """阈值实验中检测的性质 / property measured by a threshold run"""
    CONNECTED = "connectivity"
    ODD_CYCLE = "oddcycle"


# ========== 采样 Sampling ==========

def sample_gnm(n: int, m: int, seed: int) -> nx.Graph:
    """
    G(n, m): m 条不同的无环边 / m distinct loop-free edges, uniform.

    Pairs are drawn uniformly and deduplicated until m edges are collected.
    """
    if n < 1:
        raise ValueError(f"Graph needs at least one vertex, got n={n}")
    max_edges = n * (n - 1) // 2
    if not 0 <= m <= max_edges:
        raise ValueError(f"m={m} is outside [0, {max_edges}] for n={n}")
    rng = make_rng(seed)
    edges: Set[Tuple[int, int]] = set()
    order: List[Tuple[int, int]] = []
    while len(edges) < m:
        pairs = rng.integers(0, n, size=(max(64, 2 * (m - len(edges))), 2))
        pairs = pairs[pairs[:, 0] != pairs[:, 1]]
        for u, v in np.sort(pairs, axis=1).tolist():
            if (u, v) not in edges:
                edges.add((u, v))
                order.append((u, v))
                if len(edges) == m:
                    break
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(order)
    return g


def sample_gnp(n: int, p: float, seed: int) -> nx.Graph:
    """G(n, p): 每对顶点独立以概率 p 连边 / each pair independently with probability p"""
    if n < 1:
        raise ValueError(f"Graph needs at least one vertex, got n={n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Edge probability must lie in [0, 1], got {p}")
    rng = make_rng(seed)
    rows, cols = np.triu_indices(n, k=1)
    keep = rng.random(rows.size) < p
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(zip(rows[keep].tolist(), cols[keep].tolist()))
    return g


def gnm_to_gnp(n: int, m: int) -> float:
    """与 G(n, m) 对应的 Gilbert 参数 p = m / C(n, 2)"""
    pairs = n * (n - 1) // 2
    if pairs == 0:
        return 0.0
    return min(1.0, m / pairs)


# ========== 性质 Properties ==========

def is_connected(g: nx.Graph) -> bool:
    if g.number_of_nodes() == 0:
        raise ValueError("Connectivity is undefined for the graph with no vertices")
    return nx.is_connected(g)


def _close_walk(parent: dict, depth: dict, u: Hashable, v: Hashable) -> Walk:
    # tree path u -> lca -> v, closed by the edge v - u
    up, down = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        up.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        down.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        up.append(a)
        down.append(b)
    return up + down[-2::-1] + [u]


def odd_cycle(g: nx.Graph) -> Optional[Walk]:
    """
    奇闭链 / An odd closed walk, or None when g is bipartite.

    The walk is a vertex list w[0..k] with w[0] == w[k] and k odd. A self-loop
    at x gives [x, x]. Otherwise a BFS 2-colouring is run per component and
    the first monochromatic edge is closed through the BFS tree.
    """
    for u, _ in nx.selfloop_edges(g):
        return [u, u]
    for component in nx.connected_components(g):
        root = min(component)
        parent = {root: None}
        depth = {root: 0}
        for a, b in nx.bfs_edges(g, root):
            parent[b] = a
            depth[b] = depth[a] + 1
        for u, v in g.edges(component):
            if depth[u] % 2 == depth[v] % 2:
                return _close_walk(parent, depth, u, v)
    return None


def is_walk(g: nx.Graph, walk: Walk) -> bool:
    """核验链: 相邻顶点间有边 / every consecutive pair is an edge"""
    if not walk or any(vertex not in g for vertex in walk):
        return False
    return all(g.has_edge(a, b) for a, b in zip(walk, walk[1:]))


def is_odd_closed_walk(g: nx.Graph, walk: Walk) -> bool:
    return is_walk(g, walk) and walk[0] == walk[-1] and (len(walk) - 1) % 2 == 1


def even_path(g: nx.Graph, x: Hashable, y: Hashable) -> Optional[Walk]:
    """
    偶长度链 x -> y / A shortest even-length walk from x to y.

    Found as a shortest path from (x, 0) to (y, 0) in the bipartite double
    cover. Exists iff x and y share a component that is non-bipartite, or
    they lie in the same colour class of a bipartite one.
    """
    if x not in g or y not in g:
        raise ValueError(f"Vertices {x!r}, {y!r} must belong to the graph")
    if x == y:
        return [x]
    cover = nx.Graph()
    for u, v in g.edges():
        cover.add_edge((u, 0), (v, 1))
        cover.add_edge((u, 1), (v, 0))
    try:
        path = nx.shortest_path(cover, (x, 0), (y, 0))
    except (nx.NetworkXNoPath, nx.NodeNotFound):
        return None
    return [vertex for vertex, _parity in path]


# ========== 阈值实验 Threshold estimation ==========

def has_property(g: nx.Graph, prop: GraphProperty) -> bool:
    if prop is GraphProperty.CONNECTED:
        return is_connected(g)
    return odd_cycle(g) is not None


def estimate_threshold(n: int, delta: float, trials: int, prop: GraphProperty,
                       seed: int) -> float:
    """
    在 p = n^(delta-1) 处估计性质出现的频率 / empirical rate of prop in G(n, n^(delta-1))

    Each trial uses its own derived seed, so the rate does not depend on the
    evaluation order.
    """
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    prop = GraphProperty(prop)
    p = min(1.0, float(n) ** (delta - 1.0))
    hits = 0
    for trial in range(trials):
        g = sample_gnp(n, p, derive_seed(seed, "gnp", n, repr(delta), trial))
        hits += has_property(g, prop)
    rate = hits / trials
    logger.debug("threshold n=%d delta=%s p=%.6g %s rate=%.4f", n, delta, p, prop.value, rate)
    return rate
