# -*- coding: utf-8 -*-
"""
数据模块 / Data module

包含：
- 预制抽象图 (data/diagrams/*.diag)
- 角形表 (a', b', b'')
- 2-collared 图的枚举脚本
"""

from .canned_diagrams import (
    CANNED_FILES,
    CORNER_PLACEMENT,
    CORNER_RELATOR,
    CORNER_SHAPE_TABLE,
    DIAGRAM_DIR,
)

__all__ = [
    'CANNED_FILES',
    'CORNER_PLACEMENT',
    'CORNER_RELATOR',
    'CORNER_SHAPE_TABLE',
    'DIAGRAM_DIR',
]
