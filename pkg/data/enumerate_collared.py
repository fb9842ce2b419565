# -*- coding: utf-8 -*-
"""
枚举 2-collared 图 / Enumerate 2-collared square diagrams

Generates every disc diagram made of F squares with boundary length B
(internal edges pair up slots of distinct faces), keeps the 2-collared ones
and prints one representative per isomorphism class in the diagram file
format. The shipped fixtures collared_a/b/c.diag are the classes found for
(F, B) = (2, 4) and (4, 6).

A diagram is 2-collared when two non-adjacent boundary vertices carry 0 or 2
internal edges and every other boundary vertex carries exactly one.

用法 / Usage:
    python data/enumerate_collared.py --faces 4 --boundary 6 [--out-dir DIR]
"""

import argparse
import sys
from collections import Counter
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.diagrams import (
    HEAD,
    TAIL,
    AbstractDiagram,
    format_diagram,
    validate,
    vertex_map,
    vertex_structure,
)

SIDES = 4
SlotRef = Tuple[int, int]  # (face, slot)


def pairings(faces: int, boundary: int) -> Iterator[Dict[SlotRef, Optional[SlotRef]]]:
    """
    槽位配对 / Every partial matching of slots with the given boundary count.

    A face is never glued to itself.
    """
    slots = [(f, s) for f in range(1, faces + 1) for s in range(SIDES)]
    partner: Dict[SlotRef, Optional[SlotRef]] = {}

    def extend(index: int, boundary_left: int) -> Iterator[Dict[SlotRef, Optional[SlotRef]]]:
        while index < len(slots) and slots[index] in partner:
            index += 1
        if index == len(slots):
            if boundary_left == 0:
                yield dict(partner)
            return
        slot = slots[index]
        if boundary_left > 0:
            partner[slot] = None
            yield from extend(index + 1, boundary_left - 1)
            del partner[slot]
        for other in slots[index + 1:]:
            if other in partner or other[0] == slot[0]:
                continue
            partner[slot], partner[other] = other, slot
            yield from extend(index + 1, boundary_left)
            del partner[slot], partner[other]

    yield from extend(0, boundary)


def build(faces: int, partner: Dict[SlotRef, Optional[SlotRef]]) -> AbstractDiagram:
    """由配对构造图 / Build the diagram: paired slots share an edge, opposite signs"""
    signed: Dict[SlotRef, int] = {}
    next_edge = 1
    for slot in sorted(partner):
        if slot in signed:
            continue
        signed[slot] = next_edge
        other = partner[slot]
        if other is not None:
            signed[other] = -next_edge
        next_edge += 1
    face_slots = {f: tuple(signed[(f, s)] for s in range(SIDES)) for f in range(1, faces + 1)}
    ones = {f: 1 for f in face_slots}
    return AbstractDiagram(SIDES, face_slots, {f: f for f in face_slots}, ones,
                           {f: 0 for f in face_slots})


def is_disc(d: AbstractDiagram) -> bool:
    """圆盘: 有效且每个顶点链接连通 / valid and every vertex link connected"""
    return not validate(d) and all(info.link_components == 1 for info in vertex_structure(d))


def boundary_cycle(d: AbstractDiagram) -> List[int]:
    """边界顶点的循环序列 / boundary vertices in cyclic order"""
    vmap = vertex_map(d)
    successor: Dict[int, int] = {}
    for signed in (s for slots in d.faces.values() for s in slots):
        edge = abs(signed)
        if sum(abs(x) == edge for slots in d.faces.values() for x in slots) != 1:
            continue
        tail, head = vmap[(edge, TAIL)], vmap[(edge, HEAD)]
        start, end = (tail, head) if signed > 0 else (head, tail)
        successor[start] = end
    cycle = [min(successor)]
    while successor[cycle[-1]] != cycle[0]:
        cycle.append(successor[cycle[-1]])
    return cycle


def is_two_collared(d: AbstractDiagram) -> bool:
    vmap = vertex_map(d)
    internal = Counter()
    for edge, where in d.edge_slots().items():
        if len(where) == 2:
            internal[vmap[(edge, TAIL)]] += 1
            internal[vmap[(edge, HEAD)]] += 1
    cycle = boundary_cycle(d)
    size = len(cycle)
    for i in range(size):
        for j in range(i + 2, size):
            if i == 0 and j == size - 1:
                continue
            corners = {cycle[i], cycle[j]}
            if any(internal[v] not in (0, 2) for v in corners):
                continue
            if all(internal[v] == 1 for v in cycle if v not in corners):
                return True
    return False


def canonical_code(d: AbstractDiagram) -> Tuple:
    """同构不变码 / Isomorphism invariant: least BFS code over starts and reflections"""
    slots = d.edge_slots()
    best = None
    for first in sorted(d.faces):
        for entry in range(SIDES):
            for direction in (1, -1):
                label = {first: 0}
                entries = {first: entry}
                queue = [first]
                code = []
                while queue:
                    face = queue.pop(0)
                    for step in range(SIDES):
                        index = (entries[face] + direction * step) % SIDES
                        edge = abs(d.faces[face][index])
                        others = [s for s in slots[edge] if (s.face, s.index) != (face, index)]
                        if not others:
                            code.append(("b",))
                            continue
                        other = others[0]
                        if other.face not in label:
                            label[other.face] = len(label)
                            entries[other.face] = other.index
                            queue.append(other.face)
                        offset = ((other.index - entries[other.face]) * direction) % SIDES
                        code.append((label[other.face], offset))
                code = tuple(code)
                if best is None or code < best:
                    best = code
    return best


def enumerate_collared(faces: int, boundary: int) -> List[AbstractDiagram]:
    found: Dict[Tuple, AbstractDiagram] = {}
    for partner in pairings(faces, boundary):
        d = build(faces, partner)
        if not is_disc(d) or not is_two_collared(d):
            continue
        found.setdefault(canonical_code(d), d)
    return [found[code] for code in sorted(found)]


def main():
    parser = argparse.ArgumentParser(
        description="枚举 2-collared 方形图 / Enumerate 2-collared square diagrams",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--faces", type=int, required=True, help="面数 |E|")
    parser.add_argument("--boundary", type=int, required=True, help="边界长度 |∂E|")
    parser.add_argument("--out-dir", type=Path, default=None, help="输出目录 / output directory")
    args = parser.parse_args()

    shapes = enumerate_collared(args.faces, args.boundary)
    print("=" * 60)
    print(f"faces={args.faces} boundary={args.boundary}: {len(shapes)} shape(s)")
    print("=" * 60)
    for number, shape in enumerate(shapes, start=1):
        text = f"# faces={args.faces} boundary={args.boundary} shape={number}\n" + format_diagram(shape)
        if args.out_dir is not None:
            args.out_dir.mkdir(parents=True, exist_ok=True)
            target = args.out_dir / f"collared_{args.faces}_{args.boundary}_{number}.diag"
            target.write_text(text, encoding="utf-8")
            print(f"wrote {target}")
        else:
            print(text)


if __name__ == "__main__":
    main()
