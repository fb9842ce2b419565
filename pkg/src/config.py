# -*- coding: utf-8 -*-
"""
扫描配置 / Sweep configuration

每个预设对应一个待检验的随机群性质:
one preset per measured property (triviality, freeness, leafless
presentations, positive fraction), plus a loader for the flat key-value
config file used by `square-model sweep --config`.
"""

from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Dict, List, Optional, Union

from .presentation import Model, parse_density


@dataclass
class SweepConfig:
    """扫描参数 / Parameters of one sweep (grid of n x d, repeated trials)"""

    model: Model = Model.POSITIVE
    n_values: List[int] = field(default_factory=lambda: [10])
    d_values: List[float] = field(default_factory=lambda: [0.2])
    trials: int = 100
    seed: int = 0

    # 检测器开关 / detector toggles
    trivial: bool = True
    free: bool = True
    hypergraphs: bool = True
    leafless: bool = True
    positive_fraction: bool = False
    d_prime: Optional[float] = None   # 正字比例实验的 d' < d

    workers: int = 1  # 并行进程数, 结果与之无关

    def __post_init__(self):
        self.model = Model.parse(self.model)
        if not self.n_values or not self.d_values:
            raise ValueError("SweepConfig needs at least one n and one d")
        if any(n < 1 for n in self.n_values):
            raise ValueError(f"Every n must be positive, got {self.n_values}")
        for d in self.d_values:
            parse_density(d)
        if self.trials < 1:
            raise ValueError(f"trials must be positive, got {self.trials}")
        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed}")
        if self.workers < 1:
            raise ValueError(f"workers must be positive, got {self.workers}")
        if self.positive_fraction:
            if self.d_prime is None:
                raise ValueError("positive_fraction needs d_prime")
            parse_density(self.d_prime)
            if any(self.d_prime >= d for d in self.d_values):
                raise ValueError(f"d_prime={self.d_prime} must be smaller than every d")


# ========== 预设 Presets ==========

# 平凡性阈值 d = 1/2 两侧 (正模型)
TRIVIALITY_CONFIG = SweepConfig(
    model=Model.POSITIVE,
    n_values=[50],
    d_values=[0.4, 0.5, 0.65],
    trials=100,
    trivial=True,
    free=False,
    hypergraphs=False,
    leafless=False,
)

# 低密度下的自由性
FREENESS_CONFIG = SweepConfig(
    model=Model.POSITIVE,
    n_values=[200],
    d_values=[0.1, 0.2, 0.3],
    trials=100,
    trivial=False,
    free=True,
    hypergraphs=True,
    leafless=False,
)

# 无叶子的表示 (d > 1/4 时几乎必然)
LEAFLESS_CONFIG = SweepConfig(
    model=Model.POSITIVE,
    n_values=[100],
    d_values=[0.2, 0.3],
    trials=200,
    trivial=False,
    free=False,
    hypergraphs=False,
    leafless=True,
)

# 方形模型中的正关系子比例
POSITIVE_FRACTION_CONFIG = SweepConfig(
    model=Model.SQUARE,
    n_values=[30],
    d_values=[0.5],
    trials=200,
    trivial=False,
    free=False,
    hypergraphs=False,
    leafless=False,
    positive_fraction=True,
    d_prime=0.3,
)

DEFAULT_CONFIG = SweepConfig()

SWEEP_PRESETS: Dict[str, SweepConfig] = {
    "triviality": TRIVIALITY_CONFIG,
    "trivial": TRIVIALITY_CONFIG,

    "freeness": FREENESS_CONFIG,
    "free": FREENESS_CONFIG,

    "leafless": LEAFLESS_CONFIG,
    "leaves": LEAFLESS_CONFIG,

    "positive-fraction": POSITIVE_FRACTION_CONFIG,
    "positive_fraction": POSITIVE_FRACTION_CONFIG,

    "default": DEFAULT_CONFIG,
}


def get_config(name: str = None) -> SweepConfig:
    """获取预设 / Get a preset (default when unknown)"""
    if name and name.lower() in SWEEP_PRESETS:
        return SWEEP_PRESETS[name.lower()]
    return DEFAULT_CONFIG


# ========== 配置文件 Config files ==========

_LIST_KEYS = {"n": ("n_values", int), "d": ("d_values", float)}
_SCALAR_KEYS = {"trials": int, "seed": int, "workers": int, "d_prime": float}
_BOOL_KEYS = {"trivial", "free", "hypergraphs", "leafless", "positive_fraction"}


def _parse_bool(value: str) -> bool:
    lowered = value.lower()
    if lowered not in ("true", "false"):
        raise ValueError(f"expected true or false, got {value!r}")
    return lowered == "true"


def _parse_list(value: str, cast) -> list:
    body = value.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    items = [item.strip() for item in body.split(",") if item.strip()]
    if not items:
        raise ValueError("empty list")
    return [cast(item) for item in items]


def parse_config(text: str) -> SweepConfig:
    """
    解析扁平键值配置 / Parse the flat key-value format.

    One `key = value` per line, '#' comments, lists as `[a, b, c]`. An
    optional `preset = <name>` line supplies the values not given.
    """
    updates: Dict[str, object] = {}
    base = DEFAULT_CONFIG
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not value:
            raise ValueError(f"Line {number}: expected 'key = value', got {raw!r}")
        try:
            if key == "preset":
                if value.lower() not in SWEEP_PRESETS:
                    raise ValueError(f"unknown preset {value!r}")
                base = SWEEP_PRESETS[value.lower()]
            elif key == "model":
                updates["model"] = Model.parse(value)
            elif key in _LIST_KEYS:
                name, cast = _LIST_KEYS[key]
                updates[name] = _parse_list(value, cast)
            elif key in _SCALAR_KEYS:
                updates[key] = _SCALAR_KEYS[key](value)
            elif key in _BOOL_KEYS:
                updates[key] = _parse_bool(value)
            else:
                raise ValueError(f"unknown key {key!r}")
        except ValueError as exc:
            raise ValueError(f"Line {number}: {exc}")
    return replace(base, **updates)


def load_config(path: Union[str, Path]) -> SweepConfig:
    return parse_config(Path(path).read_text(encoding="utf-8"))
