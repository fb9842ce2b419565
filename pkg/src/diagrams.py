# -*- coding: utf-8 -*-
"""
抽象范坎彭图 / Abstract van Kampen diagrams

An abstract diagram is a planar disc-like 2-complex whose faces have l sides
(l = 4 here), each face carrying a relator class, an orientation and a start
offset; some edges may carry a fixed letter. This module validates such
diagrams, computes edge ownership and the fulfillment-probability bound,
searches for fulfillments by a relator set, and scans the corner shapes.

Slot convention: a face lists its l slots counterclockwise as signed edge
ids, +e when the traversal follows the edge direction and -e otherwise. With
orientation o and start t, slot s holds relator position (s - t) mod l for
o = +1 and (t - s) mod l for o = -1; the letter read along the traversal is
w[pos] or w[pos]^-1 respectively.
"""

import itertools
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

import networkx as nx

sys.path.insert(0, str(Path(__file__).parent.parent))

from data.canned_diagrams import (
    CANNED_FILES,
    CORNER_PLACEMENT,
    CORNER_RELATOR,
    CORNER_SHAPE_TABLE,
    DIAGRAM_DIR,
)
from src.presentation import Model, Presentation, Relator, is_positive, model_base

logger = logging.getLogger(__name__)

TAIL, HEAD = 0, 1
Endpoint = Tuple[int, int]  # (edge, TAIL | HEAD)
Placement = Tuple[int, int]  # (orientation, start)


class Slot(NamedTuple):
    face: int
    index: int
    sign: int


@dataclass
class AbstractDiagram:
    """
    抽象图 / An abstract diagram.

    joins lists extra endpoint identifications; they keep the vertices of a
    diagram obtained by deleting faces from a larger one.
    """
    l: int
    faces: Dict[int, Tuple[int, ...]]
    classes: Dict[int, int]
    orientations: Dict[int, int]
    starts: Dict[int, int]
    fixed: Dict[int, int] = field(default_factory=dict)
    joins: List[Tuple[Endpoint, Endpoint]] = field(default_factory=list)

    def edge_slots(self) -> Dict[int, List[Slot]]:
        slots: Dict[int, List[Slot]] = {}
        for face in sorted(self.faces):
            for index, signed in enumerate(self.faces[face]):
                slots.setdefault(abs(signed), []).append(
                    Slot(face, index, 1 if signed > 0 else -1))
        return slots

    def position(self, face: int, index: int) -> int:
        return slot_position(self.l, index, self.orientations[face], self.starts[face])

    def class_faces(self) -> Dict[int, List[int]]:
        grouped: Dict[int, List[int]] = {}
        for face in sorted(self.faces):
            grouped.setdefault(self.classes[face], []).append(face)
        return grouped


def slot_position(l: int, index: int, orientation: int, start: int) -> int:
    """槽位对应的关系子位置 (0起) / relator position (0-based) of a slot"""
    if orientation > 0:
        return (index - start) % l
    return (start - index) % l


def edge_letter(word: Sequence[int], signed_edge: int, index: int, placement: Placement) -> int:
    """放置 word 后边的字母 (沿边方向) / the letter an edge receives, read along the edge"""
    orientation, start = placement
    pos = slot_position(len(word), index, orientation, start)
    forward = word[pos] if orientation > 0 else -word[pos]
    return forward if signed_edge > 0 else -forward


# ========== 顶点与链接 Vertices and links ==========

def _slot_ends(signed: int) -> Tuple[Endpoint, Endpoint]:
    e = abs(signed)
    if signed > 0:
        return (e, TAIL), (e, HEAD)
    return (e, HEAD), (e, TAIL)


def _corners(d: AbstractDiagram) -> List[Tuple[int, Endpoint, Endpoint]]:
    corners = []
    for face in sorted(d.faces):
        slots = d.faces[face]
        for index, signed in enumerate(slots):
            _, arrive = _slot_ends(signed)
            depart, _ = _slot_ends(slots[(index + 1) % len(slots)])
            corners.append((face, arrive, depart))
    return corners


def vertex_map(d: AbstractDiagram) -> Dict[Endpoint, int]:
    """边端点 -> 顶点编号 / map every edge endpoint to its vertex id"""
    g = nx.Graph()
    for e in d.edge_slots():
        g.add_nodes_from([(e, TAIL), (e, HEAD)])
    for _, a, b in _corners(d):
        g.add_edge(a, b)
    for a, b in d.joins:
        if a in g and b in g:
            g.add_edge(a, b)
    components = sorted(nx.connected_components(g), key=min)
    return {endpoint: vertex for vertex, comp in enumerate(components) for endpoint in comp}


@dataclass
class VertexInfo:
    vertex: int
    half_edges: List[Endpoint]
    internal: bool
    link_components: int
    link_has_cycle: bool

    @property
    def valence(self) -> int:
        return len(self.half_edges)


def vertex_structure(d: AbstractDiagram) -> List[VertexInfo]:
    """
    顶点链接 / Vertex links.

    The link of v has the half-edges at v as nodes and one edge per face
    corner at v. An internal vertex has a single cyclic link.
    """
    vmap = vertex_map(d)
    links: Dict[int, nx.MultiGraph] = {}
    for endpoint, vertex in vmap.items():
        links.setdefault(vertex, nx.MultiGraph()).add_node(endpoint)
    for _, a, b in _corners(d):
        links[vmap[a]].add_edge(a, b)
    infos = []
    for vertex in sorted(links):
        link = links[vertex]
        components = list(nx.connected_components(link))
        cyclic = any(all(link.degree(x) == 2 for x in comp) for comp in components)
        infos.append(VertexInfo(
            vertex=vertex,
            half_edges=sorted(link.nodes),
            internal=len(components) == 1 and cyclic,
            link_components=len(components),
            link_has_cycle=cyclic,
        ))
    return infos


# ========== 校验 Validation ==========

def validate(d: AbstractDiagram) -> List[str]:
    """
    结构校验 / Structural checks; an empty list means the diagram is valid.

    Slot counts, edge multiplicities, opposite traversal of internal edges,
    face metadata, fixed edges, connectivity, Euler characteristic 1 and
    vertex links (a cyclic link must be the only component).
    """
    defects: List[str] = []
    if d.l < 2:
        defects.append(f"relator length l={d.l} is too small")
    if not d.faces:
        defects.append("diagram has no faces")
    for face, slots in sorted(d.faces.items()):
        if len(slots) != d.l:
            defects.append(f"face {face} has {len(slots)} slots, expected {d.l}")
        if any(signed == 0 for signed in slots):
            defects.append(f"face {face} uses edge 0")
        if d.classes.get(face) is None:
            defects.append(f"face {face} has no class")
        if d.orientations.get(face) not in (1, -1):
            defects.append(f"face {face} has no orientation")
        start = d.starts.get(face)
        if start is None or not 0 <= start < d.l:
            defects.append(f"face {face} has start {start} outside [0, {d.l})")

    slots = d.edge_slots()
    for e, where in sorted(slots.items()):
        if len(where) > 2:
            defects.append(f"edge {e} lies on {len(where)} slots")
        elif len(where) == 2 and where[0].sign == where[1].sign:
            defects.append(f"edge {e} is traversed in the same direction by both sides")
    for e, letter in sorted(d.fixed.items()):
        if e not in slots:
            defects.append(f"fixed edge {e} is not in the diagram")
        if letter == 0:
            defects.append(f"fixed edge {e} has no letter")
    for a, b in d.joins:
        if a[0] not in slots or b[0] not in slots:
            defects.append(f"join {a} {b} names an unknown edge")
    if defects:
        return defects

    infos = vertex_structure(d)
    vertices, edges, faces = len(infos), len(slots), len(d.faces)
    if vertices - edges + faces != 1:
        defects.append(f"Euler characteristic V-E+F = {vertices}-{edges}+{faces} != 1")

    vmap = vertex_map(d)
    incidence = nx.Graph()
    incidence.add_nodes_from(("f", face) for face in d.faces)
    for e, where in slots.items():
        for slot in where:
            incidence.add_edge(("f", slot.face), ("v", vmap[(e, TAIL)]))
            incidence.add_edge(("f", slot.face), ("v", vmap[(e, HEAD)]))
    if not nx.is_connected(incidence):
        defects.append("diagram is not connected")

    for info in infos:
        if info.link_has_cycle and info.link_components > 1:
            defects.append(f"vertex {info.vertex} has a cyclic link plus other link components")
    return defects


def parity_defects(d: AbstractDiagram, fulfillment: Optional["Fulfillment"] = None) -> List[int]:
    """
    奇价内顶点 / Internal vertices of odd valence.

    Around an internal vertex of a diagram fulfilled by positive relators the
    edges alternate between incoming and outgoing, so a non-empty result
    rules out every positive fulfillment.
    """
    if fulfillment is not None and not all(is_positive(w) for w in fulfillment.relators.values()):
        raise ValueError("parity defects apply to fulfillments by positive relators only")
    return [info.vertex for info in vertex_structure(d) if info.internal and info.valence % 2]


# ========== 归属 Ownership ==========

@dataclass
class OwnershipReport:
    """边归属 / edge ownership"""
    class_rank: Dict[int, int]                 # 类 -> 次序 (1 = 重数最大)
    multiplicities: List[Tuple[int, int]]      # (类, m_i), 按重数递减
    owners: Dict[int, Tuple[int, ...]]         # 边 -> 所属面
    delta: Dict[int, int]                      # δ(f)
    kappa: Dict[int, int]                      # κ_i = max δ(f), f in class i
    never_fulfillable: List[int] = field(default_factory=list)


def ownership(d: AbstractDiagram) -> OwnershipReport:
    """
    计算边归属 / Compute edge ownership.

    Internal non-fixed edges belong to the side with the larger (class rank,
    position); fixed edges belong to every side; free boundary edges to none.
    Equal keys with equal orientation can never be fulfilled.
    """
    grouped = d.class_faces()
    multiplicities = sorted(((c, len(fs)) for c, fs in grouped.items()), key=lambda cm: (-cm[1], cm[0]))
    class_rank = {c: rank for rank, (c, _) in enumerate(multiplicities, start=1)}
    delta = {face: 0 for face in d.faces}
    owners: Dict[int, Tuple[int, ...]] = {}
    never: List[int] = []

    for e, where in sorted(d.edge_slots().items()):
        if e in d.fixed:
            owners[e] = tuple(slot.face for slot in where)
        elif len(where) == 1:
            owners[e] = ()
        else:
            first, second = where
            if first.face == second.face:
                owners[e] = (first.face,)
            else:
                keys = [(class_rank[d.classes[s.face]], d.position(s.face, s.index)) for s in where]
                if keys[0] == keys[1]:
                    if d.orientations[first.face] == d.orientations[second.face]:
                        never.append(e)
                        owners[e] = ()
                        continue
                    owners[e] = (max(first.face, second.face),)
                else:
                    owners[e] = (where[0].face if keys[0] > keys[1] else where[1].face,)
        for face in owners[e]:
            delta[face] += 1

    kappa = {c: max(delta[f] for f in fs) for c, fs in grouped.items()}
    return OwnershipReport(class_rank, multiplicities, owners, delta, kappa, never)


def reduction_pairs(d: AbstractDiagram) -> List[int]:
    """约化对: 同类、反向、同位置 / edges between a mirrored pair of faces"""
    pairs = []
    for e, where in sorted(d.edge_slots().items()):
        if len(where) != 2 or where[0].face == where[1].face:
            continue
        a, b = where
        if (d.classes[a.face] == d.classes[b.face]
                and d.orientations[a.face] != d.orientations[b.face]
                and d.position(a.face, a.index) == d.position(b.face, b.index)):
            pairs.append(e)
    return pairs


def is_reduced(d: AbstractDiagram) -> bool:
    return not reduction_pairs(d)


# ========== 统计与界 Statistics and bounds ==========

@dataclass
class DiagramStats:
    l: int
    faces: int             # |A|
    boundary_length: int   # |∂A|
    fixed_count: int       # K
    internal_edges: int

    @property
    def area_sum(self) -> int:
        return self.l * self.faces


@dataclass
class FulfillmentBound:
    exponent: float
    base: int
    probability: float
    vacuous: bool


def diagram_stats(d: AbstractDiagram) -> DiagramStats:
    slots = d.edge_slots()
    boundary = sum(1 for where in slots.values() if len(where) == 1)
    return DiagramStats(l=d.l, faces=len(d.faces), boundary_length=boundary,
                        fixed_count=len(d.fixed), internal_edges=len(slots) - boundary)


def ownership_identity(d: AbstractDiagram, report: Optional[OwnershipReport] = None) -> bool:
    """|∂A| - 2K == l|A| - 2 Σ δ(f)"""
    report = report or ownership(d)
    stats = diagram_stats(d)
    return (stats.boundary_length - 2 * stats.fixed_count
            == stats.area_sum - 2 * sum(report.delta.values()))


def iso_check(stats: DiagramStats, d: float, eps: float) -> bool:
    """等周不等式 |∂D| >= l(1 - 2d - ε)|D|"""
    return stats.boundary_length >= stats.l * (1 - 2 * d - eps) * stats.faces


def bound_exponent(stats: DiagramStats, d: float) -> float:
    """e = ((|∂A| - 2K)/|A| - l(1 - 2d)) / 2; P(fulfillable) <= base^e"""
    if stats.faces == 0:
        raise ValueError("bound exponent needs at least one face")
    return 0.5 * ((stats.boundary_length - 2 * stats.fixed_count) / stats.faces
                  - stats.l * (1 - 2 * d))


def fulfillment_bound(stats: DiagramStats, n: int, d: float,
                      model: Union[Model, str] = Model.POSITIVE) -> FulfillmentBound:
    """概率上界 base^e, e >= 0 时无意义 / base^e, vacuous for e >= 0"""
    exponent = bound_exponent(stats, d)
    base = model_base(n, model)
    return FulfillmentBound(exponent=exponent, base=base,
                            probability=min(1.0, float(base) ** exponent),
                            vacuous=exponent >= 0)


# ========== 实现搜索 Fulfillment search ==========

ALL_PLACEMENTS: Tuple[Placement, ...] = tuple((o, t) for o in (1, -1) for t in range(4))


@dataclass
class Fulfillment:
    """一个实现 / a fulfillment: relator per class, placement per face, letter per edge"""
    relators: Dict[int, Relator]
    placements: Dict[int, Placement]
    letters: Dict[int, int]


def find_fulfillments(d: AbstractDiagram, relators: Iterable[Relator],
                      max_results: Optional[int] = None,
                      free_placement: bool = False) -> List[Fulfillment]:
    """
    回溯搜索实现 / Backtracking search for fulfillments.

    Classes are visited in ownership order and receive pairwise distinct
    relators; every face must agree with the letters already on its edges and
    with the fixed letters. With free_placement each face also chooses its
    orientation and start, and placements forming a reduction pair with an
    already placed face of the same class are skipped.
    """
    report = ownership(d)
    if report.never_fulfillable and not free_placement:
        return []
    pool = list(dict.fromkeys(tuple(w) for w in relators))
    if any(len(w) != d.l for w in pool):
        raise ValueError(f"every relator must have length {d.l}")

    order = sorted(d.faces, key=lambda f: (report.class_rank[d.classes[f]], f))
    slots_by_edge = d.edge_slots()
    letters: Dict[int, int] = dict(d.fixed)
    chosen: Dict[int, Relator] = {}
    placed: Dict[int, Placement] = {}
    results: List[Fulfillment] = []

    def apply(face: int, word: Relator, placement: Placement, trail: List[int]) -> bool:
        for index, signed in enumerate(d.faces[face]):
            e = abs(signed)
            letter = edge_letter(word, signed, index, placement)
            known = letters.get(e)
            if known is None:
                letters[e] = letter
                trail.append(e)
            elif known != letter:
                return False
        return True

    def mirrors_neighbour(face: int, placement: Placement) -> bool:
        for index, signed in enumerate(d.faces[face]):
            for other in slots_by_edge[abs(signed)]:
                if other.face == face or other.face not in placed:
                    continue
                if d.classes[other.face] != d.classes[face]:
                    continue
                o_place = placed[other.face]
                if (o_place[0] != placement[0]
                        and slot_position(d.l, other.index, *o_place)
                        == slot_position(d.l, index, *placement)):
                    return True
        return False

    def visit(depth: int) -> None:
        if max_results is not None and len(results) >= max_results:
            return
        if depth == len(order):
            results.append(Fulfillment(dict(chosen), dict(placed), dict(letters)))
            return
        face = order[depth]
        cls = d.classes[face]
        fresh = cls not in chosen
        words = [w for w in pool if w not in chosen.values()] if fresh else [chosen[cls]]
        placements = ALL_PLACEMENTS if free_placement else ((d.orientations[face], d.starts[face]),)
        for word in words:
            if fresh:
                chosen[cls] = word
            for placement in placements:
                if free_placement and mirrors_neighbour(face, placement):
                    continue
                trail: List[int] = []
                if apply(face, word, placement, trail):
                    placed[face] = placement
                    visit(depth + 1)
                    del placed[face]
                for e in trail:
                    del letters[e]
                if max_results is not None and len(results) >= max_results:
                    break
            if fresh:
                del chosen[cls]
            if max_results is not None and len(results) >= max_results:
                return

    visit(0)
    return results


# ========== 手术与角形 Surgery and corner shapes ==========

def remove_faces_with_relator(d: AbstractDiagram, placements: Dict[int, Placement],
                              r: Relator) -> Optional[AbstractDiagram]:
    """
    去掉承载 r 的面 / Delete faces that bear r.

    Every edge the deleted faces share with the rest becomes a fixed edge
    labelled by r's letter. Returns None when the placements disagree on an
    edge. Vertex identities of the remaining edges are kept as joins.
    """
    letters = dict(d.fixed)
    for face, placement in placements.items():
        for index, signed in enumerate(d.faces[face]):
            e = abs(signed)
            letter = edge_letter(r, signed, index, placement)
            if letters.setdefault(e, letter) != letter:
                return None

    keep = [face for face in sorted(d.faces) if face not in placements]
    kept_edges = {abs(signed) for face in keep for signed in d.faces[face]}
    vmap = vertex_map(d)
    by_vertex: Dict[int, List[Endpoint]] = {}
    for endpoint, vertex in sorted(vmap.items()):
        if endpoint[0] in kept_edges:
            by_vertex.setdefault(vertex, []).append(endpoint)
    joins = [(ends[0], other) for ends in by_vertex.values() for other in ends[1:]]

    return AbstractDiagram(
        l=d.l,
        faces={f: d.faces[f] for f in keep},
        classes={f: d.classes[f] for f in keep},
        orientations={f: d.orientations[f] for f in keep},
        starts={f: d.starts[f] for f in keep},
        fixed={e: letters[e] for e in sorted(kept_edges) if e in letters},
        joins=joins,
    )


@dataclass
class CornerShape:
    """角形: 基图与承载 r 的面 / a base diagram and the faces that bear r"""
    name: str
    base: AbstractDiagram
    removed: Tuple[int, ...]

    def instantiate(self, r: Relator, placements: Sequence[Placement]) -> Optional[AbstractDiagram]:
        return remove_faces_with_relator(self.base, dict(zip(self.removed, placements)), r)


def corner_scan(p: Presentation, r: Relator,
                shapes: Optional[Sequence[CornerShape]] = None) -> Dict[str, bool]:
    """
    角扫描 / For each shape, can it be fulfilled around a corner bearing r?

    Every placement of r on the removed faces is tried (8 per face) and the
    rest of the shape is searched over R minus r with free placement.
    """
    r = tuple(r)
    shapes = corner_shapes() if shapes is None else shapes
    pool = [w for w in p.relators if tuple(w) != r]
    found: Dict[str, bool] = {}
    for shape in shapes:
        found[shape.name] = False
        if not is_reduced(shape.base):
            continue
        for combo in itertools.product(ALL_PLACEMENTS, repeat=len(shape.removed)):
            instance = shape.instantiate(r, combo)
            if instance is None:
                continue
            if find_fulfillments(instance, pool, max_results=1, free_placement=True):
                found[shape.name] = True
                break
        logger.debug("corner shape %s: %s", shape.name, found[shape.name])
    return found


def corner_probability_bound(n: int, d: float, model: Union[Model, str] = Model.POSITIVE) -> float:
    """8 (P_a' + P_b' + 8 P_b'') 的上界 / bound on the corner event from the primed shapes"""
    canned = canned_diagrams()
    weights = {"a_prime": 8, "b_prime": 8, "b_double_prime": 64}
    total = 0.0
    for name, weight in weights.items():
        total += weight * fulfillment_bound(diagram_stats(canned[name]), n, d, model).probability
    return total


def grid_diagram(rows: int, cols: int) -> AbstractDiagram:
    """
    矩形网格图 / A rows x cols grid of squares.

    Every face gets its own class, start 0 and a checkerboard orientation.
    """
    if rows < 1 or cols < 1:
        raise ValueError(f"grid needs positive dimensions, got {rows}x{cols}")
    ids = itertools.count(1)
    horizontal = {(i, j): next(ids) for i in range(rows + 1) for j in range(cols)}
    vertical = {(i, j): next(ids) for i in range(rows) for j in range(cols + 1)}
    faces, classes, orientations, starts = {}, {}, {}, {}
    for i in range(rows):
        for j in range(cols):
            face = i * cols + j + 1
            faces[face] = (horizontal[i, j], vertical[i, j + 1],
                           -horizontal[i + 1, j], -vertical[i, j])
            classes[face] = face
            orientations[face] = 1 if (i + j) % 2 == 0 else -1
            starts[face] = 0
    return AbstractDiagram(4, faces, classes, orientations, starts)


# ========== 文件格式 Diagram files ==========

_END_NAMES = {"tail": TAIL, "head": HEAD}


def _parse_endpoint(token: str, number: int) -> Endpoint:
    edge, sep, end = token.partition(":")
    if not sep or end not in _END_NAMES:
        raise ValueError(f"Line {number}: endpoint must look like <edge>:<tail|head>, got {token!r}")
    return int(edge), _END_NAMES[end]


def parse_diagram(text: str) -> AbstractDiagram:
    """解析图文件 / Parse the diagram text format"""
    l: Optional[int] = None
    faces: Dict[int, Tuple[int, ...]] = {}
    classes: Dict[int, int] = {}
    orientations: Dict[int, int] = {}
    starts: Dict[int, int] = {}
    fixed: Dict[int, int] = {}
    joins: List[Tuple[Endpoint, Endpoint]] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.startswith("l="):
                l = int(line[2:])
                continue
            keyword, *args = line.split()
            if keyword == "face":
                faces[int(args[0])] = tuple(int(token) for token in args[1:])
            elif keyword == "class":
                classes[int(args[0])] = int(args[1])
            elif keyword == "orient":
                if args[1] not in ("+", "-"):
                    raise ValueError(f"orientation must be + or -, got {args[1]!r}")
                orientations[int(args[0])] = 1 if args[1] == "+" else -1
            elif keyword == "start":
                starts[int(args[0])] = int(args[1])
            elif keyword == "fixed":
                fixed[int(args[0])] = int(args[1])
            elif keyword == "join":
                joins.append((_parse_endpoint(args[0], number), _parse_endpoint(args[1], number)))
            else:
                raise ValueError(f"unknown keyword {keyword!r}")
        except (IndexError, ValueError) as exc:
            raise ValueError(f"Line {number}: {exc}")
    if l is None:
        raise ValueError("Diagram file is missing its 'l=<int>' line")
    return AbstractDiagram(l, faces, classes, orientations, starts, fixed, joins)


def format_diagram(d: AbstractDiagram) -> str:
    lines = [f"l={d.l}"]
    for face in sorted(d.faces):
        lines.append("face {} {}".format(face, " ".join(f"{s:+d}" for s in d.faces[face])))
    for face in sorted(d.faces):
        lines.append(f"class {face} {d.classes[face]}")
        lines.append(f"orient {face} {'+' if d.orientations[face] > 0 else '-'}")
        lines.append(f"start {face} {d.starts[face]}")
    for e in sorted(d.fixed):
        lines.append(f"fixed {e} {d.fixed[e]:+d}")
    names = {TAIL: "tail", HEAD: "head"}
    for (ea, ka), (eb, kb) in d.joins:
        lines.append(f"join {ea}:{names[ka]} {eb}:{names[kb]}")
    return "\n".join(lines) + "\n"


def read_diagram(path: Union[str, Path]) -> AbstractDiagram:
    return parse_diagram(Path(path).read_text(encoding="utf-8"))


def write_diagram(d: AbstractDiagram, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(format_diagram(d), encoding="utf-8")
    return path


# ========== 预制图 Canned diagrams ==========

def load_canned(name: str) -> AbstractDiagram:
    if name not in CANNED_FILES:
        raise ValueError(f"Unknown canned diagram {name!r}; available: {sorted(CANNED_FILES)}")
    return read_diagram(DIAGRAM_DIR / CANNED_FILES[name])


def corner_shapes() -> List[CornerShape]:
    """a', b', b'' 作为角形 / the corner shapes built on the collared diagrams"""
    return [CornerShape(name, load_canned(base), removed)
            for name, (base, removed) in CORNER_SHAPE_TABLE.items()]


def canned_diagrams() -> Dict[str, AbstractDiagram]:
    """
    全部预制图 / Every canned diagram.

    The file fixtures plus the fixed-letter shapes a', b', b'' instantiated
    with the reference corner relator.
    """
    diagrams = {name: load_canned(name) for name in CANNED_FILES}
    for shape in corner_shapes():
        instance = shape.instantiate(CORNER_RELATOR, [CORNER_PLACEMENT] * len(shape.removed))
        if instance is None:
            raise RuntimeError(f"reference relator does not fit corner shape {shape.name}")
        diagrams[shape.name] = instance
    return diagrams
