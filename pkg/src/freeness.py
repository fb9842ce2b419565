# -*- coding: utf-8 -*-
"""
自由性检测 / Freeness detection

When every hypergraph of the presentation complex is an embedded tree, the
group is free: removing an embedded tree together with its carrier is an HNN
splitting step, which adds one free generator. Repeating until only loops
remain gives a certified rank of n - |R|.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Union

import numpy as np

from .presentation import Model, Presentation, model_base, parse_density, RELATOR_LENGTH
from .square_complex import (
    EmbeddingCheck,
    build_hypergraph_graph,
    build_presentation_complex,
    carrier,
    hypergraphs,
    is_embedded_tree,
)

logger = logging.getLogger(__name__)


@dataclass
class RemovalStep:
    """一次去除 / one removal: a hypergraph's one-cells and its carrier"""
    component_vertices: FrozenSet[int]
    removed_two_cells: FrozenSet[int]


@dataclass
class FreenessCertificate:
    """自由性证书 / freeness certificate"""
    rank: int
    steps: List[RemovalStep] = field(default_factory=list)
    leftover_loops: int = 0

    @property
    def certified(self) -> bool:
        return True


@dataclass
class NotCertified:
    """未认证及见证 / not certified, with the offending hypergraph"""
    component_id: int
    check: EmbeddingCheck

    @property
    def certified(self) -> bool:
        return False

    def witness(self) -> str:
        return f"hypergraph{self.component_id}:{self.check.witness()}"


FreenessResult = Union[FreenessCertificate, NotCertified]


def detect_free(p: Presentation, rng: Optional[np.random.Generator] = None) -> FreenessResult:
    """
    判定自由性 / Certify freeness by iterated carrier removal.

    Each round removes one hypergraph that still has edges (the smallest
    component id, or a random one when rng is given); the certified rank does
    not depend on that choice.
    """
    x = build_presentation_complex(p)
    for component in hypergraphs(build_hypergraph_graph(x)):
        check = is_embedded_tree(component)
        if not check.ok:
            return NotCertified(component.component_id, check)

    certificate = FreenessCertificate(rank=0)
    while x.two_cells:
        edgeful = [c for c in hypergraphs(build_hypergraph_graph(x)) if c.edges]
        chosen = edgeful[0] if rng is None else edgeful[int(rng.integers(len(edgeful)))]
        # 子复形的超图仍是嵌入树 / subcomplex hypergraphs stay embedded trees
        if not is_embedded_tree(chosen).ok:
            raise RuntimeError(f"hypergraph {sorted(chosen.vertices)} lost the embedded-tree property")
        removed = carrier(chosen)
        x = x.without(one_cells=chosen.vertices, two_cells=removed)
        certificate.steps.append(RemovalStep(chosen.vertices, removed))
        certificate.rank += 1
        logger.debug("removed hypergraph %s with %d squares", sorted(chosen.vertices), len(removed))

    certificate.leftover_loops = len(x.one_cells)
    certificate.rank += certificate.leftover_loops
    return certificate


def certified_rank_identity(cert: FreenessCertificate, p: Presentation) -> bool:
    """rank = 1 - chi(presentation complex) = n - |R|"""
    return cert.rank == 1 - build_presentation_complex(p).euler_characteristic


def non_tree_bound(n: int, d: float, model: Union[Model, str] = Model.POSITIVE) -> float:
    """
    非嵌入树概率的级数上界 / Series bound on P(some hypergraph is not an embedded tree).

    sum_{k>=1} base^((4d-1)k) = q / (1 - q) with q = base^(4d-1); infinite
    once 4d >= 1.
    """
    density = parse_density(d)
    if RELATOR_LENGTH * density >= 1:
        return math.inf
    q = float(model_base(n, model)) ** float(RELATOR_LENGTH * density - 1)
    if q >= 1.0:
        return math.inf
    return q / (1.0 - q)
