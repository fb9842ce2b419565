# -*- coding: utf-8 -*-
"""
阿贝尔化 / Abelianization oracle

The relation matrix holds the exponent sums of every relator; its Smith
normal form gives G^ab = Z^r x Z/d_1 x ... All arithmetic is exact: the
row reduction runs on int64 while products stay far from overflow and
switches to Python integers (dtype=object) otherwise.
"""

import logging
from dataclasses import dataclass, field
from typing import List

import numpy as np

from .presentation import Presentation

logger = logging.getLogger(__name__)

# 乘积低于该界时 int64 运算是精确的 / int64 stays exact below this bound
_INT64_SAFE = 1 << 62


@dataclass
class RelationMatrix:
    """关系矩阵: 行为关系子, 列为生成元 / rows are relators, columns generators"""
    entries: np.ndarray

    @property
    def shape(self):
        return self.entries.shape


@dataclass
class AbelianInvariants:
    """G^ab = Z^free_rank x Z/t_1 x ... (t_i | t_{i+1}, t_i > 1)"""
    free_rank: int
    torsion: List[int] = field(default_factory=list)

    def __str__(self) -> str:
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " x ".join(parts) if parts else "0"


def relation_matrix(p: Presentation) -> RelationMatrix:
    """指数和矩阵 / exponent-sum matrix, shape (|R|, n)"""
    entries = np.zeros((len(p.relators), p.n), dtype=np.int64)
    if p.relators:
        words = np.asarray(p.relators, dtype=np.int64)
        rows = np.repeat(np.arange(len(p.relators)), words.shape[1])
        np.add.at(entries, (rows, np.abs(words).ravel() - 1), np.sign(words).ravel())
    return RelationMatrix(entries)


def _max_abs(values: np.ndarray) -> int:
    return int(np.abs(values).max()) if values.size else 0


def _echelon_rows(matrix: np.ndarray) -> np.ndarray:
    """
    行阶梯形 / Unimodular row reduction to echelon form, nonzero rows only.

    Euclid on each column: the row with the smallest nonzero entry becomes
    the pivot and is subtracted from the rows below until it is alone.
    """
    a = np.array(matrix, copy=True)
    if a.dtype != object:
        a = a.astype(np.int64) if _max_abs(a) < (1 << 31) else a.astype(object)
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        while True:
            column = a[r:, c]
            nonzero = np.flatnonzero(column)
            if nonzero.size == 0:
                break
            best = r + int(nonzero[np.argmin(np.abs(column[nonzero]))])
            if best != r:
                a[[r, best]] = a[[best, r]]
            if nonzero.size == 1:
                r += 1
                break
            quotients = a[r + 1:, c] // a[r, c]
            if a.dtype != object and (
                    _max_abs(quotients) * _max_abs(a[r]) + _max_abs(a) >= _INT64_SAFE):
                a = a.astype(object)
                quotients = quotients.astype(object)
            a[r + 1:] -= quotients[:, None] * a[r]
    return a[:r]


def _diagonalize(a: np.ndarray) -> List[int]:
    """小矩阵的完全对角化 / full Smith diagonalization of a small exact matrix"""
    a = np.array(a, dtype=object)
    rows, cols = a.shape
    diagonal: List[int] = []
    for t in range(min(rows, cols)):
        while True:
            block = a[t:, t:]
            nonzero = np.argwhere(block != 0)
            if nonzero.size == 0:
                return diagonal
            values = np.abs(block[nonzero[:, 0], nonzero[:, 1]])
            i, j = nonzero[int(np.argmin(values))] + t
            a[[t, i]] = a[[i, t]]
            a[:, [t, j]] = a[:, [j, t]]
            pivot = a[t, t]

            a[t + 1:, :] -= (a[t + 1:, t] // pivot)[:, None] * a[t, :]
            a[:, t + 1:] -= a[:, t][:, None] * (a[t, t + 1:] // pivot)[None, :]
            if np.any(a[t + 1:, t] != 0) or np.any(a[t, t + 1:] != 0):
                continue

            bad = np.argwhere(a[t + 1:, t + 1:] % pivot != 0)
            if bad.size:
                # 引入不整除的行, 主元会继续变小 / pull in a non-divisible row
                a[t, :] += a[t + 1 + int(bad[0][0]), :]
                continue
            diagonal.append(abs(int(pivot)))
            break
    return diagonal


def smith_normal_form(matrix) -> List[int]:
    """
    Smith 标准形对角元 / Diagonal of the Smith normal form.

    Returns min(rows, cols) nonnegative entries with d_i | d_{i+1}, zeros last.
    """
    a = np.asarray(matrix)
    if a.ndim != 2:
        raise ValueError(f"Expected a 2-dimensional matrix, got shape {a.shape}")
    size = min(a.shape)
    if size == 0:
        return []
    diagonal = _diagonalize(_echelon_rows(a))
    return diagonal + [0] * (size - len(diagonal))


def is_divisibility_chain(diagonal: List[int]) -> bool:
    for left, right in zip(diagonal, diagonal[1:]):
        if left == 0 and right != 0:
            return False
        if left != 0 and right % left != 0:
            return False
    return True


def abelian_invariants(p: Presentation) -> AbelianInvariants:
    """由 SNF 读出不变量 / free rank and torsion of G^ab"""
    diagonal = smith_normal_form(relation_matrix(p).entries)
    nonzero = [d for d in diagonal if d != 0]
    return AbelianInvariants(free_rank=p.n - len(nonzero), torsion=[d for d in nonzero if d > 1])
