# -*- coding: utf-8 -*-
"""
群表示与随机采样 / Group presentations and random sampling

方形模型与正方形模型 / square model and positive square model:
生成元 a_1..a_n, 关系子为长度4的循环既约字 (正模型中只含正字母)。
Relators are length-4 words over a_1..a_n and their inverses; a letter is a
signed integer, k for a_k and -k for a_k^-1.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple, Union

import numpy as np
from sympy import Float, Integer, Pow, Rational, factorint

from .seeding import make_rng

logger = logging.getLogger(__name__)

RELATOR_LENGTH = 4
MAX_GENERATORS = 10_000
MAX_FLOOR_DIGITS = 1 << 16  # decimal digits
EXACT_CHECK_BITS = 1 << 16
FILE_HEADER = "square-model v1"

Relator = Tuple[int, int, int, int]


class Model(Enum):
    """采样模型 / Sampling model"""
    POSITIVE = "positive"
    SQUARE = "square"

    @classmethod
    def parse(cls, value: Union[str, "Model"]) -> "Model":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ValueError(f"Unknown model: {value!r} (expected 'positive' or 'square')")


class Letter(NamedTuple):
    """字母 a_k^{±1} / A letter a_k^{+-1}"""
    generator: int  # 1-based
    exponent: int   # +1 or -1

    @classmethod
    def from_int(cls, value: int) -> "Letter":
        if value == 0:
            raise ValueError("0 is not a letter")
        return cls(abs(value), 1 if value > 0 else -1)

    def to_int(self) -> int:
        return self.generator * self.exponent

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.exponent)

    def __str__(self) -> str:
        if self.exponent > 0:
            return f"a{self.generator}"
        return f"a{self.generator}^-1"


# ========== 字的基本性质 Word predicates ==========

def is_cyclically_reduced(word: Tuple[int, ...]) -> bool:
    """循环既约: 相邻字母 (含首尾) 不互逆 / no adjacent inverse pair, cyclically"""
    size = len(word)
    return all(word[i] != -word[(i + 1) % size] for i in range(size))


def is_positive(word: Tuple[int, ...]) -> bool:
    return all(letter > 0 for letter in word)


def format_relator(word: Tuple[int, ...]) -> str:
    return " ".join(str(Letter.from_int(letter)) for letter in word)


def parse_density(d: Union[str, float, Decimal]) -> Fraction:
    """
    解析密度 / Parse a density d in (0, 1) as an exact fraction.

    Floats are read through their shortest decimal form, so 0.3 means 3/10.
    Any number of decimal places is accepted; trailing zeros do not matter.
    """
    try:
        decimal = Decimal(str(d))
    except InvalidOperation:
        raise ValueError(f"Density is not a decimal number: {d!r}")
    if not decimal.is_finite() or not Decimal(0) < decimal < Decimal(1):
        raise ValueError(f"Density d must lie in (0, 1), got {d}")
    return Fraction(decimal.normalize())


def density_string(d: Union[str, float, Decimal]) -> str:
    """密度的规范十进制写法 / canonical decimal string of d (used in seeds and files)"""
    return format(Decimal(str(d)).normalize(), "f")


def _exact_power(base: int, p: int, q: int) -> Optional[int]:
    """base^(p/q) 为整数时返回它 / the integer base^(p/q), or None if it is irrational"""
    root = 1
    for prime, multiplicity in factorint(base).items():
        if (multiplicity * p) % q:
            return None
        root *= prime ** (multiplicity * p // q)
    return root


def floor_power(base: int, exponent: Fraction) -> int:
    """
    精确计算 floor(base^exponent) / Exact floor(base ** exponent).

    exponent = p/q >= 0. When base^(p/q) is an integer it is built from the
    prime factorization of base. Otherwise the value is irrational and it is
    evaluated with evalf at doubling precision until the error interval holds
    no integer; small powers are then re-verified with integer arithmetic.
    """
    if base < 1:
        raise ValueError(f"Base must be positive, got {base}")
    if exponent < 0:
        raise ValueError(f"Exponent must be non-negative, got {exponent}")
    p, q = exponent.numerator, exponent.denominator
    exact = _exact_power(base, p, q)
    if exact is not None:
        return exact
    power_expr = Pow(Integer(base), Rational(p, q))
    digits = 30
    while digits <= MAX_FLOOR_DIGITS:
        value = power_expr.evalf(digits)
        slack = value * Float(10, digits) ** (4 - digits)
        low, high = int(value - slack), int(value + slack)
        if low == high:
            break
        digits *= 2
    else:
        raise ArithmeticError(f"could not separate {base}^{exponent} from an integer")
    if p * base.bit_length() <= EXACT_CHECK_BITS:
        power = base ** p
        if not (low ** q <= power < (low + 1) ** q):
            raise ArithmeticError(f"integer root check failed for {base}^{exponent}")
    return low


# ========== 计数 Counting ==========

def _check_generators(n: int) -> None:
    if not 1 <= n <= MAX_GENERATORS:
        raise ValueError(f"Number of generators must be in [1, {MAX_GENERATORS}], got {n}")


def count_words(n: int, model: Union[Model, str]) -> int:
    """
    长度4的可用字的个数 / Number of admissible length-4 words.

    positive: n^4.  square: cyclically reduced words, (2n-1)^4 + 2n - 1
    (trace of the 4th power of the letter transition matrix, whose spectrum is
    2n-1 once, -1 (n-1 times) and +1 (n times)).
    """
    _check_generators(n)
    if Model.parse(model) is Model.POSITIVE:
        return n ** RELATOR_LENGTH
    return (2 * n - 1) ** RELATOR_LENGTH + 2 * n - 1


def enumerate_words(n: int, model: Union[Model, str]) -> Iterator[Relator]:
    """按字典序枚举全部可用字 / Enumerate admissible words (small n only)"""
    _check_generators(n)
    if Model.parse(model) is Model.POSITIVE:
        letters = list(range(1, n + 1))
    else:
        letters = [k for g in range(1, n + 1) for k in (g, -g)]
    for word in itertools.product(letters, repeat=RELATOR_LENGTH):
        if is_cyclically_reduced(word):
            yield word


def model_base(n: int, model: Union[Model, str]) -> int:
    """密度的底数 / base of the density: n (positive) or 2n-1 (square)"""
    return n if Model.parse(model) is Model.POSITIVE else 2 * n - 1


def num_relators(n: int, d: Union[str, float], model: Union[Model, str]) -> int:
    """|R| = floor(base^(4d)), exact / exact relator count"""
    _check_generators(n)
    density = parse_density(d)
    return floor_power(model_base(n, model), RELATOR_LENGTH * density)


def positive_word_share(n: int) -> float:
    """方形模型中一次抽样得到正字的概率 / chance that a square-model draw is positive"""
    return n ** RELATOR_LENGTH / count_words(n, Model.SQUARE)


def distinct_letter_probability(n: int) -> float:
    """正字含4个不同生成元的概率 / chance that a positive word has 4 distinct generators"""
    _check_generators(n)
    return math.perm(n, RELATOR_LENGTH) / n ** RELATOR_LENGTH


# ========== 群表示 Presentation ==========

@dataclass(frozen=True)
class Presentation:
    """群表示 <a_1..a_n | R> / A presentation"""

    model: Model
    n: int                          # 生成元个数
    d: float                        # 密度
    relators: Tuple[Relator, ...]   # 无重复, 按采样顺序
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "model", Model.parse(self.model))
        object.__setattr__(self, "relators", tuple(tuple(r) for r in self.relators))
        _check_generators(self.n)
        parse_density(self.d)
        seen = set()
        for relator in self.relators:
            if len(relator) != RELATOR_LENGTH:
                raise ValueError(f"Relator {relator} does not have length {RELATOR_LENGTH}")
            if any(letter == 0 or abs(letter) > self.n for letter in relator):
                raise ValueError(f"Relator {relator} uses a letter outside a_1..a_{self.n}")
            if not is_cyclically_reduced(relator):
                raise ValueError(f"Relator {relator} is not cyclically reduced")
            if self.model is Model.POSITIVE and not is_positive(relator):
                raise ValueError(f"Relator {relator} is not positive")
            if relator in seen:
                raise ValueError(f"Duplicate relator {relator}")
            seen.add(relator)

    @property
    def positive_relators(self) -> Tuple[Relator, ...]:
        return positive_subset(self)

    def describe(self) -> str:
        return (f"model={self.model.value} n={self.n} d={density_string(self.d)} "
                f"relators={len(self.relators)}")


def positive_subset(p: Presentation) -> Tuple[Relator, ...]:
    """R ∩ W_n, 正关系子 / the positive relators"""
    return tuple(r for r in p.relators if is_positive(r))


# ========== 采样 Sampling ==========

_MIN_BATCH = 256


def _draw_words(rng: np.random.Generator, n: int, model: Model, size: int) -> np.ndarray:
    """抽取一批一致随机的可用字 / a batch of uniform admissible words (rejection)"""
    words = rng.integers(1, n + 1, size=(size, RELATOR_LENGTH), dtype=np.int64)
    if model is Model.SQUARE:
        words *= rng.choice(np.array([-1, 1], dtype=np.int64), size=(size, RELATOR_LENGTH))
        reduced = np.all(words != -np.roll(words, -1, axis=1), axis=1)
        words = words[reduced]
    return words


def sample_presentation(n: int, d: Union[str, float], model: Union[Model, str],
                        seed: int) -> Presentation:
    """
    采样随机群表示 / Sample a random presentation.

    Draws floor(base^(4d)) distinct admissible words uniformly, i.e. a uniform
    subset of the required size. Deterministic in (n, d, model, seed).
    """
    model = Model.parse(model)
    target = num_relators(n, d, model)
    universe = count_words(n, model)
    if target > universe:
        raise ValueError(
            f"Cannot draw {target} distinct relators from {universe} words "
            f"(n={n}, d={d}, model={model.value})"
        )
    rng = make_rng(seed)
    chosen: Dict[Relator, None] = {}
    while len(chosen) < target:
        batch = _draw_words(rng, n, model, max(_MIN_BATCH, 2 * (target - len(chosen))))
        for word in map(tuple, batch.tolist()):
            if word not in chosen:
                chosen[word] = None
                if len(chosen) == target:
                    break
    logger.debug("sampled %d relators (n=%d, d=%s, model=%s)", target, n, d, model.value)
    return Presentation(model=model, n=n, d=float(d), relators=tuple(chosen), seed=seed)


# ========== 文件格式 Presentation files ==========

def format_presentation(p: Presentation) -> str:
    lines = [
        FILE_HEADER,
        f"model={p.model.value} n={p.n} d={density_string(p.d)} seed={p.seed}",
    ]
    lines.extend(" ".join(str(letter) for letter in relator) for relator in p.relators)
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    """解析群表示文本 / Parse the presentation text format"""
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines or lines[0] != FILE_HEADER:
        raise ValueError(f"Presentation file must start with '{FILE_HEADER}'")
    if len(lines) < 2:
        raise ValueError("Presentation file is missing its parameter line")

    params: Dict[str, str] = {}
    for token in lines[1].split():
        key, sep, value = token.partition("=")
        if not sep:
            raise ValueError(f"Malformed parameter {token!r} on line 2")
        params[key] = value
    missing = {"model", "n", "d", "seed"} - params.keys()
    if missing:
        raise ValueError(f"Parameter line is missing {sorted(missing)}")

    relators: List[Relator] = []
    for number, line in enumerate(lines[2:], start=3):
        try:
            relator = tuple(int(token) for token in line.split())
        except ValueError:
            raise ValueError(f"Line {number}: relator must be signed integers: {line!r}")
        if len(relator) != RELATOR_LENGTH:
            raise ValueError(f"Line {number}: relator must have {RELATOR_LENGTH} letters")
        relators.append(relator)

    try:
        return Presentation(model=Model.parse(params["model"]), n=int(params["n"]),
                            d=float(params["d"]), relators=tuple(relators),
                            seed=int(params["seed"]))
    except (TypeError, ValueError) as exc:
        raise ValueError(f"Invalid presentation file: {exc}")


def write_presentation(p: Presentation, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(format_presentation(p), encoding="utf-8")
    return path


def read_presentation(path: Union[str, Path]) -> Presentation:
    return parse_presentation(Path(path).read_text(encoding="utf-8"))
