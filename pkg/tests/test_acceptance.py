# -*- coding: utf-8 -*-
"""
验收测试 / Acceptance runs: oracle agreement and Monte Carlo trends

These runs take minutes; deselect with  pytest -m "not slow".
"""

import itertools
import math
import sys
from collections import Counter
from dataclasses import replace
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from src.config import FREENESS_CONFIG, LEAFLESS_CONFIG, TRIVIALITY_CONFIG
from src.diagrams import (
    bound_exponent,
    canned_diagrams,
    diagram_stats,
    find_fulfillments,
    fulfillment_bound,
    grid_diagram,
    is_reduced,
    ownership,
    ownership_identity,
    parity_defects,
    vertex_structure,
)
from src.freeness import FreenessCertificate, certified_rank_identity, detect_free
from src.harness import analyze, positive_fraction_experiment, sweep
from src.presentation import (
    Model,
    distinct_letter_probability,
    enumerate_words,
    num_relators,
    sample_presentation,
)
from src.random_graph import GraphProperty, estimate_threshold
from src.seeding import derive_seed, make_rng
from src.square_complex import build_hypergraph_graph, build_presentation_complex

pytestmark = pytest.mark.slow

# 单侧 99% 正态分位数 / one-sided 99% normal quantile
Z_99 = 2.326


def rates_by_d(rows, attribute):
    return {float(row.d): getattr(row, attribute) for row in rows}


def test_oracle_agreement_grid(tmp_path):
    """每个证书都与阿贝尔化一致 / every certificate agrees with the abelianization"""
    cells = list(itertools.product(list(Model), [8, 16, 32], ["0.1", "0.2", "0.3", "0.6"]))
    per_cell = math.ceil(500 / len(cells))
    checked = Counter()
    for model, n, d in cells:
        for trial in range(per_cell):
            p = sample_presentation(n, d, model, derive_seed(2024, model.value, n, d, trial))
            report = analyze(p, bundle_dir=tmp_path)
            if report.triviality.certified:
                allowed = [[4]] if model is Model.POSITIVE else [[2], [4]]
                assert report.invariants.free_rank == 0
                assert report.invariants.torsion in allowed
                checked["trivial"] += 1
            if isinstance(report.freeness, FreenessCertificate):
                assert report.invariants.torsion == []
                assert report.invariants.free_rank == report.freeness.rank == n - len(p.relators)
                checked["free"] += 1
    assert len(cells) * per_cell >= 500
    assert checked["trivial"] > 0 and checked["free"] > 0


def test_rank_is_order_invariant():
    certificates = 0
    for attempt in range(2000):
        seed = derive_seed(7, "order", attempt)
        p = sample_presentation(40 + attempt % 41, "0.1", Model.POSITIVE, seed)
        first = detect_free(p)
        if not first.certified:
            continue
        assert certified_rank_identity(first, p)
        assert detect_free(p, rng=make_rng(seed)).rank == first.rank
        certificates += 1
        if certificates == 200:
            break
    assert certificates == 200


def test_triviality_transition():
    rates = rates_by_d(sweep(replace(TRIVIALITY_CONFIG, seed=1)), "trivial_rate")
    assert rates[0.4] <= 0.1
    assert rates[0.65] >= 0.9
    assert rates[0.4] <= rates[0.5] <= rates[0.65]


def test_freeness_transition():
    """
    自由率受上限约束 / the free rate sits under its ceiling

    A certificate needs four distinct generators in every relator, so with
    |R| = 8 at n = 200, d = 0.1 the free rate is at most 0.7855.
    """
    trials = 200
    config = replace(FREENESS_CONFIG, d_values=[0.1, 0.3], trials=trials, seed=1)
    rates = rates_by_d(sweep(config), "free_rate")
    size = num_relators(200, "0.1", Model.POSITIVE)
    assert size == 8
    ceiling = distinct_letter_probability(200) ** size
    allowance = Z_99 * math.sqrt(ceiling * (1 - ceiling) / trials)
    assert ceiling - allowance <= rates[0.1] <= ceiling + allowance
    assert rates[0.1] > rates[0.3]


@pytest.mark.parametrize("prop", list(GraphProperty))
def test_random_graph_threshold(prop):
    assert estimate_threshold(400, 0.5, 200, prop, seed=3) >= 0.95


def test_leafless_trend():
    rates = rates_by_d(sweep(replace(LEAFLESS_CONFIG, seed=1)), "leafless_rate")
    assert rates[0.3] >= 0.85
    assert rates[0.2] <= 0.1


def test_positive_fraction():
    assert positive_fraction_experiment(30, 0.5, 0.3, 200, seed=1) >= 0.95


@pytest.mark.parametrize("n", [4, 6])
def test_bound_consistency(n):
    """经验实现频率不超过解析界 / empirical fulfillment rate stays under the bound"""
    d, samples = "0.2", 2000
    shapes = {name: diag for name, diag in canned_diagrams().items()
              if bound_exponent(diagram_stats(diag), float(d)) < 0}
    assert {"a_prime", "b_prime", "b_double_prime", "collared_a"} <= set(shapes)
    hits = Counter()
    for trial in range(samples):
        p = sample_presentation(n, d, Model.POSITIVE, derive_seed(99, n, trial))
        for name, diag in shapes.items():
            hits[name] += bool(find_fulfillments(diag, p.relators, max_results=1))
    for name, diag in shapes.items():
        bound = fulfillment_bound(diagram_stats(diag), n, float(d)).probability
        allowance = Z_99 * math.sqrt(bound * (1 - bound) / samples)
        assert hits[name] / samples <= bound + allowance, name


@pytest.mark.parametrize("name", ["fan3", "collared_c"])
def test_parity_obstruction(name):
    diag = canned_diagrams()[name]
    assert parity_defects(diag)
    assert find_fulfillments(diag, list(enumerate_words(3, Model.POSITIVE))) == []


@given(st.integers(min_value=2, max_value=20),
       st.sampled_from(["0.1", "0.2", "0.3", "0.4"]),
       st.sampled_from(list(Model)),
       st.integers(min_value=0, max_value=10 ** 9))
@settings(max_examples=1000, deadline=None)
def test_hypergraph_identities(n, d, model, seed):
    p = sample_presentation(n, d, model, seed)
    gamma = build_hypergraph_graph(build_presentation_complex(p))
    assert len(gamma.edges) == 2 * len(p.relators)
    degree = Counter()
    for edge in gamma.edges:
        degree[edge.u] += 1
        degree[edge.v] += 1
    occurrences = Counter(abs(letter) for r in p.relators for letter in r)
    assert all(degree[g] == occurrences[g] for g in range(1, n + 1))


@given(st.integers(min_value=1, max_value=4), st.integers(min_value=1, max_value=4), st.data())
@settings(max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
def test_diagram_identities(rows, cols, data):
    d = grid_diagram(rows, cols)
    for face in d.faces:
        d.classes[face] = data.draw(st.integers(min_value=1, max_value=4))
        d.orientations[face] = data.draw(st.sampled_from([1, -1]))
        d.starts[face] = data.draw(st.integers(min_value=0, max_value=3))
    assume(is_reduced(d))
    report = ownership(d)
    assume(not report.never_fulfillable)
    assert ownership_identity(d, report)
    assert len(vertex_structure(d)) - len(d.edge_slots()) + len(d.faces) == 1
