# -*- coding: utf-8 -*-
"""
平凡性检测测试 / Tests for the triviality certificate
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.abelianization import abelian_invariants
from src.presentation import Model, Presentation, sample_presentation
from src.triviality import (
    TrivialityStatus,
    TrivialityVerdict,
    build_word_pair_graph,
    certified_group_order,
    detect_trivial,
    relator_exponent_sum,
    replay_certificate,
)


# ========== 字对图 Word-pair graph ==========

class TestWordPairGraph:
    """字对图构造 / word-pair graph construction"""

    def test_single_edge(self, make_presentation):
        wpg = build_word_pair_graph(make_presentation(2, [(1, 1, 1, 2)]))
        assert wpg.graph.number_of_nodes() == 4
        assert wpg.graph.number_of_edges() == 1
        assert wpg.graph.has_edge((1, 1), (1, 2))
        assert wpg.r0_count == 0

    def test_self_loop(self, make_presentation):
        wpg = build_word_pair_graph(make_presentation(2, [(1, 1, 1, 1)]))
        assert wpg.graph.has_edge((1, 1), (1, 1))
        assert wpg.r0_count == 1

    def test_non_positive_relators_are_ignored(self, make_presentation):
        p = make_presentation(2, [(1, -2, 1, -2), (1, 1, 2, 2)], model=Model.SQUARE)
        wpg = build_word_pair_graph(p)
        assert wpg.graph.number_of_edges() == 1
        assert wpg.graph.has_edge((1, 1), (2, 2))

    def test_stats(self, make_presentation):
        p = make_presentation(2, [(1, 1, 1, 1), (1, 1, 1, 2), (1, 2, 2, 1)])
        stats = build_word_pair_graph(p).stats()
        assert stats["vertices"] == 4
        assert stats["edges"] == 3
        assert stats["self_loops"] == 1
        assert stats["gilbert_p"] == pytest.approx(2 / 6)

    def test_stats_single_vertex(self, make_presentation):
        stats = build_word_pair_graph(make_presentation(1, [(1, 1, 1, 1)])).stats()
        assert stats["gilbert_p"] == 0.0


# ========== 证书 Certificate ==========

class TestDetectTrivial:
    """ℤ4 证书 / the ℤ4 certificate"""

    def test_z4_fixture_is_certified(self, z4_presentation):
        verdict = detect_trivial(z4_presentation)
        assert verdict.status is TrivialityStatus.CERTIFIED
        assert len(verdict.spanning_tree) == 3
        assert replay_certificate(z4_presentation, verdict)
        invariants = abelian_invariants(z4_presentation)
        assert invariants.free_rank == 0
        assert invariants.torsion == [4]

    def test_bipartite_path_is_unknown(self, bipartite_presentation):
        verdict = detect_trivial(bipartite_presentation)
        assert verdict.status is TrivialityStatus.UNKNOWN
        assert "bipartite" in verdict.reason

    def test_empty_relators_are_unknown(self):
        p = Presentation(Model.POSITIVE, 2, 0.1, ())
        verdict = detect_trivial(p)
        assert not verdict.certified
        assert "disconnected" in verdict.reason

    def test_one_generator(self):
        """n=1: 单点加自环 / one vertex with a loop"""
        p = Presentation(Model.POSITIVE, 1, 0.5, ((1, 1, 1, 1),))
        assert detect_trivial(p).certified

    def test_replay_rejects_forged_certificate(self, z4_presentation, bipartite_presentation):
        verdict = detect_trivial(z4_presentation)
        # 自环不在二部表示中 / the loop is missing from the bipartite presentation
        assert not replay_certificate(bipartite_presentation, verdict)
        assert not replay_certificate(z4_presentation, TrivialityVerdict(TrivialityStatus.UNKNOWN))

    def test_certificate_sizes(self, z4_presentation, bipartite_presentation):
        # 自环给出长度 1 的奇闭链 / the loop at (1, 1) is an odd walk of length 1
        assert detect_trivial(z4_presentation).sizes() == (3, 1)
        assert detect_trivial(bipartite_presentation).sizes() is None

    def test_replay_rejects_broken_tree(self, z4_presentation):
        verdict = detect_trivial(z4_presentation)
        verdict.spanning_tree = verdict.spanning_tree[:-1]
        assert not replay_certificate(z4_presentation, verdict)

    def test_group_order(self, z4_presentation):
        assert certified_group_order(z4_presentation) == 4
        mixed = Presentation(Model.SQUARE, 2, 0.5, ((1, 1, 1, 1), (1, 1, 1, -2)))
        assert certified_group_order(mixed) == 2

    def test_exponent_sum(self):
        assert relator_exponent_sum((1, -2, 3, 3)) == 2
        assert relator_exponent_sum((-1, -1, -1, -1)) == -4

    @given(st.integers(min_value=2, max_value=6),
           st.sampled_from(["0.55", "0.65", "0.8", "0.9"]),
           st.sampled_from(list(Model)),
           st.integers(min_value=0, max_value=10 ** 9))
    @settings(max_examples=60, deadline=None)
    def test_certified_matches_abelianization(self, n, d, model, seed):
        """证书成立则阿贝尔化为 ℤ4 或 ℤ2 / a certificate implies ab = Z/4 or Z/2"""
        p = sample_presentation(n, d, model, seed)
        verdict = detect_trivial(p)
        if verdict.certified:
            assert replay_certificate(p, verdict)
            invariants = abelian_invariants(p)
            assert invariants.free_rank == 0
            assert invariants.torsion == [certified_group_order(p)]

    @given(st.integers(min_value=2, max_value=4),
           st.sampled_from(["0.5", "0.6", "0.75"]),
           st.sampled_from(list(Model)),
           st.integers(min_value=0, max_value=10 ** 9),
           st.data())
    @settings(max_examples=80, deadline=None)
    def test_more_positive_relators_keep_the_certificate(self, n, d, model, seed, data):
        """加入正关系子后证书仍成立 / extra positive relators never undo a certificate"""
        p = sample_presentation(n, d, model, seed)
        letters = st.integers(min_value=1, max_value=n)
        extra = data.draw(st.lists(st.tuples(letters, letters, letters, letters), max_size=6))
        relators = tuple(dict.fromkeys(p.relators + tuple(extra)))
        larger = Presentation(p.model, n, p.d, relators, p.seed)
        if detect_trivial(p).certified:
            assert detect_trivial(larger).certified
