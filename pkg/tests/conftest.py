# -*- coding: utf-8 -*-
"""
共享测试夹具 / Shared test fixtures
"""

import sys
from pathlib import Path

# 添加项目根目录到路径 / put the repository root on the path
sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest

from src.presentation import Model, Presentation


@pytest.fixture
def z4_presentation():
    """
    ℤ4 示例 / the four-relator ℤ4 fixture

    字对图为路径 (1,1)-(1,2)-(2,1)-(2,2) 加 (1,1) 处自环
    """
    return Presentation(
        model=Model.POSITIVE,
        n=2,
        d=0.9,
        relators=((1, 1, 1, 1), (1, 1, 1, 2), (1, 2, 2, 1), (2, 1, 2, 2)),
    )


@pytest.fixture
def bipartite_presentation():
    """去掉自环后字对图为二部图 / the same path without the loop"""
    return Presentation(
        model=Model.POSITIVE,
        n=2,
        d=0.9,
        relators=((1, 1, 1, 2), (1, 2, 2, 1), (2, 1, 2, 2)),
    )


@pytest.fixture
def single_square():
    """n=4, {a1 a2 a3 a4}"""
    return Presentation(model=Model.POSITIVE, n=4, d=0.1, relators=((1, 2, 3, 4),))


@pytest.fixture
def loop_square():
    """n=2, {a1 a2 a1 a2}: Γ 只有自环"""
    return Presentation(model=Model.POSITIVE, n=2, d=0.1, relators=((1, 2, 1, 2),))


@pytest.fixture
def make_presentation():
    """直接构造群表示 / build a presentation from explicit relators"""

    def build(n, relators, model=Model.POSITIVE, d=0.5, seed=0):
        return Presentation(model=model, n=n, d=d, relators=tuple(relators), seed=seed)

    return build
