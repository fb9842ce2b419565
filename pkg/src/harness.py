# -*- coding: utf-8 -*-
"""
实验框架 / Experiment harness

analyze(): all detectors plus the abelianization oracle on one presentation,
with cross-checks. sweep(): seeded Monte Carlo over an (n, d) grid, one CSV
row per cell. Every trial derives its own seed from (master seed, n, d,
trial), so the output does not depend on scheduling.
"""

import csv
import logging
import multiprocessing as mp
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Dict, List, Optional, Union

from .abelianization import AbelianInvariants, abelian_invariants
from .config import SweepConfig
from .freeness import FreenessCertificate, FreenessResult, certified_rank_identity, detect_free
from .presentation import (
    RELATOR_LENGTH,
    Model,
    Presentation,
    density_string,
    floor_power,
    format_presentation,
    num_relators,
    parse_density,
    positive_subset,
    sample_presentation,
)
from .seeding import derive_seed
from .square_complex import HypergraphStats, generators_occurring_once, hypergraph_stats
from .triviality import (
    TrivialityVerdict,
    certified_group_order,
    detect_trivial,
    replay_certificate,
)

logger = logging.getLogger(__name__)


class CrossCheckError(RuntimeError):
    """检测器与阿贝尔化结果矛盾 / a detector disagrees with the abelianization oracle"""

    def __init__(self, message: str, bundle: str, seed: int, bundle_path: Optional[Path] = None):
        super().__init__(message)
        self.bundle = bundle
        self.seed = seed
        self.bundle_path = bundle_path


# ========== 单个表示 Single presentation ==========

@dataclass
class AnalysisReport:
    """分析报告 / everything analyze() learns about one presentation"""
    presentation: Presentation
    triviality: TrivialityVerdict
    freeness: FreenessResult
    hypergraphs: HypergraphStats
    invariants: AbelianInvariants
    leaves: List[int] = field(default_factory=list)

    def trivial_line(self) -> str:
        sizes = self.triviality.sizes()
        if sizes is None:
            return f"trivial: {self.triviality.status.value}"
        return f"trivial: {self.triviality.status.value} tree_edges={sizes[0]} odd_walk={sizes[1]}"

    def free_line(self) -> str:
        if isinstance(self.freeness, FreenessCertificate):
            return f"free: certified rank={self.freeness.rank}"
        return f"free: not-certified witness={self.freeness.witness()}"

    def format_text(self) -> str:
        h = self.hypergraphs
        lines = [
            f"presentation: {self.presentation.describe()}",
            self.trivial_line(),
            self.free_line(),
            (f"hypergraphs: components={h.component_count} trees={h.tree_count} "
             f"embedded={h.embedded_count} leaves={h.leaf_count}"),
            f"abelianization: {self.invariants}",
        ]
        return "\n".join(lines) + "\n"

    def to_dict(self) -> Dict[str, object]:
        p = self.presentation
        free = {"certified": self.freeness.certified}
        if isinstance(self.freeness, FreenessCertificate):
            free["rank"] = self.freeness.rank
        else:
            free["witness"] = self.freeness.witness()
        sizes = self.triviality.sizes()
        trivial_certificate = None if sizes is None else {"tree_edges": sizes[0], "odd_walk": sizes[1]}
        return {
            "model": p.model.value,
            "n": p.n,
            "d": density_string(p.d),
            "seed": p.seed,
            "num_relators": len(p.relators),
            "trivial": self.triviality.status.value,
            "trivial_certificate": trivial_certificate,
            "free": free,
            "hypergraphs": asdict(self.hypergraphs),
            "leaves": self.leaves,
            "abelianization": {
                "free_rank": self.invariants.free_rank,
                "torsion": self.invariants.torsion,
                "text": str(self.invariants),
            },
        }


def cross_check(p: Presentation, triviality: TrivialityVerdict, freeness: FreenessResult,
                invariants: AbelianInvariants) -> List[str]:
    """对照阿贝尔化 / Compare every certificate against the oracle; returns violations"""
    violations = []
    if triviality.certified:
        if not replay_certificate(p, triviality):
            violations.append("triviality certificate does not replay")
        order = certified_group_order(p)
        if invariants.free_rank != 0 or invariants.torsion != [order]:
            violations.append(f"trivial certified (Z/{order}) but abelianization is {invariants}")
    if isinstance(freeness, FreenessCertificate):
        if not certified_rank_identity(freeness, p):
            violations.append(f"free rank {freeness.rank} != n - |R| = {p.n - len(p.relators)}")
        if invariants.free_rank != freeness.rank or invariants.torsion:
            violations.append(f"free certified rank={freeness.rank} but abelianization is {invariants}")
    return violations


def write_bundle(p: Presentation, bundle_dir: Union[str, Path]) -> Path:
    """复现包 / Write the presentation that triggered a violation"""
    bundle_dir = Path(bundle_dir)
    bundle_dir.mkdir(parents=True, exist_ok=True)
    name = f"repro_{p.model.value}_n{p.n}_d{density_string(p.d)}_seed{p.seed}.txt"
    path = bundle_dir / name
    path.write_text(format_presentation(p), encoding="utf-8")
    return path


def analyze(p: Presentation, bundle_dir: Optional[Union[str, Path]] = None) -> AnalysisReport:
    """
    分析一个表示 / Run every detector and the oracle on p.

    Raises CrossCheckError when a certificate contradicts the abelianization;
    the reproduction bundle is written to bundle_dir when given.
    """
    report = AnalysisReport(
        presentation=p,
        triviality=detect_trivial(p),
        freeness=detect_free(p),
        hypergraphs=hypergraph_stats(p),
        invariants=abelian_invariants(p),
        leaves=sorted(generators_occurring_once(p)),
    )
    violations = cross_check(p, report.triviality, report.freeness, report.invariants)
    if violations:
        path = write_bundle(p, bundle_dir) if bundle_dir is not None else None
        logger.error("cross-check violation for %s: %s", p.describe(), "; ".join(violations))
        raise CrossCheckError("; ".join(violations), format_presentation(p), p.seed, path)
    return report


# ========== 扫描 Sweeps ==========

CSV_HEADER = [
    "n", "d", "model", "trials", "seed", "num_relators",
    "trivial_rate", "free_rate", "mean_certified_rank",
    "embedded_tree_rate", "leafless_rate", "positive_fraction_rate",
]


@dataclass
class TrialOutcome:
    trivial: Optional[bool] = None
    free: Optional[bool] = None
    rank: Optional[int] = None
    embedded: Optional[bool] = None
    leafless: Optional[bool] = None
    positive_excess: Optional[bool] = None


@dataclass
class SweepRow:
    """CSV 一行 / one CSV row; None means the detector was off"""
    n: int
    d: str
    model: str
    trials: int
    seed: int
    num_relators: int
    trivial_rate: Optional[float] = None
    free_rate: Optional[float] = None
    mean_certified_rank: Optional[float] = None
    embedded_tree_rate: Optional[float] = None
    leafless_rate: Optional[float] = None
    positive_fraction_rate: Optional[float] = None

    def to_csv_row(self) -> List[str]:
        values = []
        for f in fields(self):
            value = getattr(self, f.name)
            if value is None:
                values.append("")
            elif isinstance(value, float):
                values.append(f"{value:.6f}")
            else:
                values.append(str(value))
        return values


def trial_seed(master_seed: int, n: int, d: Union[str, float], trial: int) -> int:
    return derive_seed(master_seed, n, density_string(d), trial)


def positive_threshold(n: int, d_prime: Union[str, float]) -> int:
    """floor(n^(4d')); |R ∩ W_n| > n^(4d') iff it exceeds this"""
    return floor_power(n, RELATOR_LENGTH * parse_density(d_prime))


def run_trial(config: SweepConfig, n: int, d: float, trial: int) -> TrialOutcome:
    p = sample_presentation(n, d, config.model, trial_seed(config.seed, n, d, trial))
    outcome = TrialOutcome()
    if config.trivial:
        outcome.trivial = detect_trivial(p).certified
    if config.free:
        result = detect_free(p)
        outcome.free = result.certified
        if isinstance(result, FreenessCertificate):
            outcome.rank = result.rank
    if config.hypergraphs:
        outcome.embedded = hypergraph_stats(p).all_embedded
    if config.leafless:
        outcome.leafless = not generators_occurring_once(p)
    if config.positive_fraction:
        outcome.positive_excess = len(positive_subset(p)) > positive_threshold(n, config.d_prime)
    return outcome


def _run_trial_packed(args) -> TrialOutcome:
    return run_trial(*args)


def _rate(values: List[Optional[bool]]) -> Optional[float]:
    if not values or values[0] is None:
        return None
    return sum(values) / len(values)


def sweep_cell(config: SweepConfig, n: int, d: float, pool=None) -> SweepRow:
    jobs = [(config, n, d, trial) for trial in range(config.trials)]
    outcomes = pool.map(_run_trial_packed, jobs) if pool is not None else list(map(_run_trial_packed, jobs))
    ranks = [o.rank for o in outcomes if o.rank is not None]
    row = SweepRow(
        n=n,
        d=density_string(d),
        model=config.model.value,
        trials=config.trials,
        seed=config.seed,
        num_relators=num_relators(n, d, config.model),
        trivial_rate=_rate([o.trivial for o in outcomes]),
        free_rate=_rate([o.free for o in outcomes]),
        mean_certified_rank=sum(ranks) / len(ranks) if ranks else None,
        embedded_tree_rate=_rate([o.embedded for o in outcomes]),
        leafless_rate=_rate([o.leafless for o in outcomes]),
        positive_fraction_rate=_rate([o.positive_excess for o in outcomes]),
    )
    logger.info("sweep cell n=%d d=%s done (%d trials)", n, row.d, config.trials)
    return row


def sweep(config: SweepConfig) -> List[SweepRow]:
    """扫描 (n, d) 网格 / Run the sweep; rows ordered by n then d"""
    cells = [(n, d) for n in config.n_values for d in config.d_values]
    if config.workers > 1:
        with mp.Pool(processes=config.workers) as pool:
            return [sweep_cell(config, n, d, pool) for n, d in cells]
    return [sweep_cell(config, n, d) for n, d in cells]


def write_csv(rows: List[SweepRow], path: Union[str, Path]) -> Path:
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow(row.to_csv_row())
    return path


def positive_fraction_experiment(n: int, d: float, d_prime: float, trials: int,
                                 seed: int) -> float:
    """
    正关系子比例实验 / Rate of |R ∩ W_n| > n^(4d') in the square model at density d.

    Requires d' < d.
    """
    if parse_density(d_prime) >= parse_density(d):
        raise ValueError(f"d_prime={d_prime} must be smaller than d={d}")
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    threshold = positive_threshold(n, d_prime)
    hits = 0
    for trial in range(trials):
        p = sample_presentation(n, d, Model.SQUARE, trial_seed(seed, n, d, trial))
        hits += len(positive_subset(p)) > threshold
    return hits / trials
