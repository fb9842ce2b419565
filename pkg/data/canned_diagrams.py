# -*- coding: utf-8 -*-
"""
预制图表 / Canned diagram table

File fixtures under data/diagrams/ (text format of src.diagrams) and the
corner-shape table: the fixed-letter shapes a', b', b'' are obtained from
the 2-collared diagrams a and b by deleting the faces that bear the corner
relator r. The collared shapes are produced by enumerate_collared.py.
"""

from pathlib import Path

DIAGRAM_DIR = Path(__file__).parent / "diagrams"

# 名称 -> 文件 / name -> fixture file
CANNED_FILES = {
    "square": "square.diag",
    "two_faces": "two_faces.diag",
    "collared_a": "collared_a.diag",
    "collared_b": "collared_b.diag",
    "collared_c": "collared_c.diag",
    "fan3": "fan3.diag",
}

# 角形: 名称 -> (基图, 承载 r 的面)
# Corner shapes: name -> (base diagram, faces that bear r)
CORNER_SHAPE_TABLE = {
    "a_prime": ("collared_a", (1,)),         # 两个固定字母, 一个面
    "b_prime": ("collared_b", (1,)),         # 两个固定字母, 三个面
    "b_double_prime": ("collared_b", (1, 3)),  # 五个固定字母, 两个面
}

# 实例化 a', b', b'' 时使用的参考关系子与放置 (方向, 起点)
# Reference corner relator and placement (orientation, start)
CORNER_RELATOR = (1, 2, 3, 4)
CORNER_PLACEMENT = (1, 0)
