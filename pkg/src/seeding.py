# -*- coding: utf-8 -*-
"""
随机数种子 / Seeding

所有采样器共用的伪随机数发生器 (PCG64) 与种子派生。
PCG64 generator factory and hashed seed derivation shared by every sampler.
"""

import hashlib
from typing import Union

import numpy as np

# 种子为无符号64位整数 / seeds are unsigned 64-bit integers
SEED_MASK = (1 << 64) - 1


def make_rng(seed: int) -> np.random.Generator:
    """创建PCG64发生器 / Create a PCG64 generator for a 64-bit seed"""
    if seed < 0:
        raise ValueError(f"Seed must be non-negative, got {seed}")
    return np.random.Generator(np.random.PCG64(seed & SEED_MASK))


def derive_seed(*parts: Union[int, str, float]) -> int:
    """
    派生子种子 / Derive a sub-seed

    BLAKE2b over the '|'-joined string forms of the parts, first 8 bytes
    little endian. Floats should be passed as their decimal strings so the
    result does not depend on float formatting.
    """
    key = "|".join(str(part) for part in parts).encode("utf-8")
    digest = hashlib.blake2b(key, digest_size=8).digest()
    return int.from_bytes(digest, "little")
