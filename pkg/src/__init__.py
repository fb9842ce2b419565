# -*- coding: utf-8 -*-
"""
square-model - Случайные группы в квадратной модели / 方形模型随机群

采样群表示、平凡性与自由性证书、阿贝尔化校验、抽象图概率界。
Sampling, triviality and freeness certificates, an abelianization oracle and
abstract diagram bounds for the square and positive square models.
"""

from .presentation import Model, Presentation, num_relators, sample_presentation
from .triviality import detect_trivial
from .freeness import detect_free
from .abelianization import abelian_invariants
from .harness import analyze

__version__ = "1.0.0"

__all__ = [
    'Model',
    'Presentation',
    'num_relators',
    'sample_presentation',
    'detect_trivial',
    'detect_free',
    'abelian_invariants',
    'analyze',
]
