# -*- coding: utf-8 -*-
"""
阿贝尔化测试 / Tests for the abelianization oracle
"""

import sys
from itertools import combinations
from math import gcd
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix

from src.abelianization import (
    AbelianInvariants,
    abelian_invariants,
    is_divisibility_chain,
    relation_matrix,
    smith_normal_form,
)
from src.presentation import Model, Presentation


def minor_gcds(rows):
    """
    行列式因子 / determinantal divisors D_k = gcd of all k x k minors

    Independent check: d_1 ... d_k = D_k.
    """
    m = Matrix(rows)
    divisors = []
    for k in range(1, min(m.shape) + 1):
        g = 0
        for r in combinations(range(m.rows), k):
            for c in combinations(range(m.cols), k):
                g = gcd(g, int(m.extract(list(r), list(c)).det()))
        divisors.append(g)
    return divisors


class TestRelationMatrix:
    """指数和矩阵 / exponent-sum matrix"""

    def test_examples(self):
        p = Presentation(Model.POSITIVE, 2, 0.5, ((1, 2, 1, 2),))
        assert relation_matrix(p).entries.tolist() == [[2, 2]]
        q = Presentation(Model.SQUARE, 2, 0.5, ((1, -2, 1, -2),))
        assert relation_matrix(q).entries.tolist() == [[2, -2]]
        empty = Presentation(Model.POSITIVE, 3, 0.5, ())
        assert relation_matrix(empty).shape == (0, 3)

    def test_mixed_letters(self):
        p = Presentation(Model.SQUARE, 3, 0.5, ((1, 1, -3, 2), (-2, -2, -2, 3)))
        assert relation_matrix(p).entries.tolist() == [[2, 1, -1], [0, -3, 1]]


class TestSmithNormalForm:
    """Smith 标准形 / Smith normal form"""

    @pytest.mark.parametrize("matrix,expected", [
        ([[2, 0], [0, 3]], [1, 6]),
        ([[2, 2]], [2]),
        ([[0, 0], [0, 0]], [0, 0]),
        ([[4, 0], [3, 1], [2, 2], [1, 3]], [1, 4]),
        ([[6, 4], [4, 6]], [2, 10]),
        ([[0, 5, 0]], [5]),
    ])
    def test_examples(self, matrix, expected):
        assert smith_normal_form(matrix) == expected

    def test_empty(self):
        assert smith_normal_form(np.zeros((0, 3), dtype=np.int64)) == []

    def test_rejects_vectors(self):
        with pytest.raises(ValueError):
            smith_normal_form([1, 2, 3])

    def test_large_entries_stay_exact(self):
        """超出 int64 的中间值 / entries whose products leave int64"""
        big = 2 ** 40 + 1
        matrix = np.array([[big, 0], [0, big + 2]], dtype=object)
        assert smith_normal_form(matrix) == [1, big * (big + 2)]

    @given(st.lists(st.lists(st.integers(min_value=-6, max_value=6), min_size=3, max_size=3),
                    min_size=1, max_size=4))
    @settings(max_examples=150, deadline=None)
    def test_agrees_with_minors(self, rows):
        """对角元乘积等于行列式因子 / diagonal prefix products equal D_k"""
        diagonal = smith_normal_form(rows)
        assert is_divisibility_chain(diagonal)
        assert all(d >= 0 for d in diagonal)
        product = 1
        for d, expected in zip(diagonal, minor_gcds(rows)):
            product *= d
            assert product == expected

    @given(st.lists(st.lists(st.integers(min_value=-6, max_value=6), min_size=3, max_size=3),
                    min_size=1, max_size=4),
           st.data())
    @settings(max_examples=150, deadline=None)
    def test_invariant_under_permutations_and_signs(self, rows, data):
        """行列置换与变号不改变标准形 / row/column permutations and sign flips"""
        row_order = data.draw(st.permutations(range(len(rows))))
        col_order = data.draw(st.permutations(range(3)))
        row_signs = data.draw(st.lists(st.sampled_from([1, -1]), min_size=len(rows), max_size=len(rows)))
        col_signs = data.draw(st.lists(st.sampled_from([1, -1]), min_size=3, max_size=3))
        shuffled = [
            [row_signs[i] * col_signs[j] * rows[row_order[i]][col_order[j]] for j in range(3)]
            for i in range(len(rows))
        ]
        assert smith_normal_form(shuffled) == smith_normal_form(rows)

    def test_divisibility_chain(self):
        assert is_divisibility_chain([1, 2, 4, 0])
        assert not is_divisibility_chain([2, 3])
        assert not is_divisibility_chain([0, 2])


class TestInvariants:
    """阿贝尔不变量 / abelian invariants"""

    def test_examples(self, z4_presentation):
        p = Presentation(Model.POSITIVE, 2, 0.5, ((1, 2, 1, 2),))
        assert abelian_invariants(p) == AbelianInvariants(1, [2])
        assert abelian_invariants(z4_presentation) == AbelianInvariants(0, [4])
        assert abelian_invariants(Presentation(Model.POSITIVE, 3, 0.5, ())) == AbelianInvariants(3, [])

    def test_formatting(self):
        assert str(AbelianInvariants(3, [])) == "Z^3"
        assert str(AbelianInvariants(0, [4])) == "Z/4"
        assert str(AbelianInvariants(1, [2, 6])) == "Z^1 x Z/2 x Z/6"
        assert str(AbelianInvariants(0, [])) == "0"

    def test_cyclic_quotients(self):
        p = Presentation(Model.SQUARE, 1, 0.5, ((1, 1, 1, 1),))
        q = Presentation(Model.SQUARE, 2, 0.5, ((1, 1, 1, 2), (1, 1, 2, 2), (1, 2, 2, 2)))
        assert abelian_invariants(p) == AbelianInvariants(0, [4])
        # 行 (3,1), (2,2), (1,3): D_1 = 1, D_2 = 4
        assert abelian_invariants(q) == AbelianInvariants(0, [4])
