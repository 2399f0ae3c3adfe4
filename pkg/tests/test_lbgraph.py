import hashlib
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from cliquelb.graph import K22, BipartiteGraph, InvalidParameterError, enumerate_k22, is_bipartite
from cliquelb.lbgraph import (
    LowerBoundGraph,
    PeelLog,
    construct_lower_bound_graph,
    derive_seed,
    dump_lbg,
    generate_random_bipartite,
    item3_violations,
    construction_statistics,
    parse_lbg,
    peel,
    peel_with_samples,
    sample_sides,
    verify_lower_bound_graph,
)

# first deterministic run of construct_lower_bound_graph(64, seed=1)
PINNED_N64_SEED1_H_SIZE = 78
PINNED_N64_SEED1_SHA256 = "80ff8bc25bae01ac2c1e03025d28447bd3f1668e0f922175ab7822d0c6e6fdae"


class TestRandomBipartite:
    def test_p_zero_is_edgeless(self):
        assert not generate_random_bipartite(10, 0.0, 3).edges

    def test_p_one_is_complete(self):
        g = generate_random_bipartite(6, 1.0, 3)
        assert len(g.edges) == 36

    def test_rejects_small_n(self):
        with pytest.raises(InvalidParameterError):
            generate_random_bipartite(1, 0.5, 0)

    def test_rejects_bad_p(self):
        with pytest.raises(InvalidParameterError):
            generate_random_bipartite(4, 1.5, 0)

    def test_same_seed_same_graph(self):
        assert generate_random_bipartite(30, 0.2, 9) == generate_random_bipartite(30, 0.2, 9)
        assert generate_random_bipartite(30, 0.2, 9) != generate_random_bipartite(30, 0.2, 10)

    def test_mean_edge_count(self):
        # binomial mean n^2 p = 4096
        counts = [len(generate_random_bipartite(256, 1 / 16, s).edges) for s in range(1, 21)]
        assert abs(np.mean(counts) - 4096) <= 0.05 * 4096


def test_derive_seed_is_stable_and_tagged():
    assert derive_seed(1, "edges") == derive_seed(1, "edges")
    assert derive_seed(1, "edges") != derive_seed(1, "sample")
    assert 0 <= derive_seed(123, "edges") < 2 ** 64


class TestPeel:
    def test_no_k22_gives_empty_family(self):
        g = BipartiteGraph.from_edges(3, 3, [(0, 0), (1, 1), (2, 2)])
        lbg = peel(g, 0)
        assert lbg.k == 0 and not lbg.base.edges

    def test_single_k22_accepted_with_suitable_samples(self):
        g = BipartiteGraph.from_edges(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])
        seed = next(s for s in range(1000)
                    if sample_sides(g, s) == (frozenset({0}), frozenset({0})))
        lbg = peel(g, seed)
        assert lbg.designated_family == (K22(0, 1, 0, 1),)
        assert lbg.base == g

    def test_single_k22_rejected_when_both_sampled(self):
        g = BipartiteGraph.from_edges(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])
        lbg = peel_with_samples(g, frozenset({0, 1}), frozenset({0}))
        assert lbg.k == 0

    def test_threshold_rejects_heavy_pairs(self):
        # a1, a2 share 5 neighbours: C(5, 2) = 10 copies on that A-pair
        g = BipartiteGraph.from_edges(2, 5, [(a, b) for a in range(2) for b in range(5)])
        assert peel_with_samples(g, frozenset({0}), frozenset(range(0, 5, 2))).k == 0
        g4 = BipartiteGraph.from_edges(2, 4, [(a, b) for a in range(2) for b in range(4)])
        assert peel_with_samples(g4, frozenset({0}), frozenset({0, 1})).k == 1

    def test_outputs_verify(self):
        for seed in range(20):
            g = generate_random_bipartite(64, 1 / 8, seed)
            lbg = peel(g, seed + 100)
            report = verify_lower_bound_graph(lbg, len(g.edges))
            assert report.passed, report

    @pytest.mark.parametrize("seed", range(8))
    def test_peel_invariants(self, seed):
        g = generate_random_bipartite(48, 1 / math.sqrt(48), seed)
        log = PeelLog()
        side_a, side_b = sample_sides(g, seed)
        lbg = peel_with_samples(g, side_a, side_b, log=log)
        assert lbg.k > 0
        original = set(g.edges)
        for K in lbg.designated_family:
            assert len({K.a1, K.a2} & side_a) == 1
            assert len({K.b1, K.b2} & side_b) == 1
        # Item-3 soundness on the original random graph
        assert oracles.item3_pairs(lbg.designated_family, original) == []
        # the samples themselves are proper colourings of H_A and H_B
        assert all((u in side_a) != (v in side_a) for u, v in lbg.h_a_edges)
        assert all((u in side_b) != (v in side_b) for u, v in lbg.h_b_edges)
        assert max(log.fa_inserts) <= 6 and max(log.fb_inserts) <= 6
        assert len(log.fa_inserts) == lbg.k
        assert log.considered == len(enumerate_k22(g))
        assert len(lbg.base.edges) <= 4 * lbg.k
        assert lbg.base.edges <= original


class TestConstruct:
    def test_rejects_small_n(self):
        with pytest.raises(InvalidParameterError):
            construct_lower_bound_graph(3, 0)

    def test_pinned_regression(self):
        lbg, stats = construct_lower_bound_graph(64, 1)
        assert stats.h_size == PINNED_N64_SEED1_H_SIZE
        assert hashlib.sha256(dump_lbg(lbg).encode()).hexdigest() == PINNED_N64_SEED1_SHA256

    def test_deterministic(self):
        a = construct_lower_bound_graph(40, 77)
        b = construct_lower_bound_graph(40, 77)
        assert a == b

    def test_expected_k_closed_form(self):
        _, stats = construct_lower_bound_graph(256, 3)
        assert stats.expected_k == 16256.25

    def test_stats_monotone(self):
        for seed in range(5):
            _, s = construct_lower_bound_graph(64, seed)
            assert s.edge_count <= 4 * s.h_size <= 4 * s.k_total

    @pytest.mark.parametrize("seed", range(10))
    def test_generated_graph_verifies(self, seed):
        lbg, _ = construct_lower_bound_graph(64, seed)
        assert verify_lower_bound_graph(lbg, 1024).passed


class TestVerify:
    def test_small_passes(self, small_lbg):
        r = verify_lower_bound_graph(small_lbg, 12)
        assert r.passed and r.k_value == 4 and r.item1_edge_count == 12

    def test_small_edge_bound(self, small_lbg):
        r = verify_lower_bound_graph(small_lbg, 11)
        assert not r.passed and r.item2_union_ok

    def test_small_extended_family_fails(self, small_lbg):
        # adding {a1, a3, b2, b4}: no cross-pair K_{2,2} (exhaustive check), but the
        # chords a1a3 and b2b4 put triangles into H_A and H_B
        ext = LowerBoundGraph(small_lbg.base, small_lbg.designated_family + (K22(0, 2, 1, 3),),
                              small_lbg.side_sample_a, small_lbg.side_sample_b)
        r = verify_lower_bound_graph(ext, 12)
        assert not r.passed
        assert r.item3_cross_pair_violations == oracles.item3_pairs(ext.designated_family, ext.base.edges) == []
        assert not r.item4_ha_bipartite and not r.item4_hb_bipartite

    def test_duplicate_a_pair_is_item3_violation(self, small_lbg):
        ext = LowerBoundGraph(small_lbg.base, small_lbg.designated_family + (K22(0, 1, 0, 1),),
                              small_lbg.side_sample_a, small_lbg.side_sample_b)
        r = verify_lower_bound_graph(ext, 12)
        assert (0, 4) in r.item3_cross_pair_violations and not r.passed

    def test_union_mismatch(self, small_lbg):
        base = BipartiteGraph(4, 4, small_lbg.base.edges | {(0, 2)})
        r = verify_lower_bound_graph(LowerBoundGraph(base, small_lbg.designated_family,
                                                     frozenset(), frozenset()), 20)
        assert not r.item2_union_ok and r.item2_all_k22

    def test_missing_edge_is_not_k22(self, small_lbg):
        base = BipartiteGraph(4, 4, small_lbg.base.edges - {(0, 0)})
        r = verify_lower_bound_graph(LowerBoundGraph(base, small_lbg.designated_family,
                                                     frozenset(), frozenset()), 20)
        assert not r.item2_all_k22

    @settings(max_examples=60, deadline=None)
    @given(st.integers(4, 9), st.integers(0, 10_000), st.integers(1, 8))
    def test_item3_matches_naive(self, n, seed, extra):
        g = generate_random_bipartite(n, 0.6, seed)
        rng = np.random.default_rng(seed)
        family = enumerate_k22(g)
        if not family:
            return
        picks = rng.choice(len(family), size=min(extra, len(family)), replace=False)
        chosen = tuple(family[i] for i in sorted(picks))
        lbg = LowerBoundGraph(g, chosen, frozenset(), frozenset())
        assert item3_violations(lbg) == oracles.item3_pairs(chosen, g.edges)
        report = verify_lower_bound_graph(lbg, 10 ** 6)
        assert report.item4_ha_bipartite == oracles.two_colorable(n, lbg.h_a_edges)


def test_lbg_text_roundtrip(small_lbg):
    assert parse_lbg(dump_lbg(small_lbg)) == small_lbg
    lbg, _ = construct_lower_bound_graph(32, 4)
    assert parse_lbg(dump_lbg(lbg)) == lbg


def test_lbg_roundtrip_empty_samples():
    g = BipartiteGraph.from_edges(2, 2, [])
    lbg = LowerBoundGraph(g, (), frozenset(), frozenset())
    assert parse_lbg(dump_lbg(lbg)) == lbg


def test_bundled_fixture_matches_builder(small_lbg):
    from cliquelb import small_fixture_path
    assert parse_lbg(small_fixture_path().read_text()) == small_lbg
    assert is_bipartite(small_lbg.h_a()) == [0, 1, 0, 1]


class TestConstructionSummary:
    def test_needs_five_seeds(self):
        with pytest.raises(InvalidParameterError):
            construction_statistics(64, [1, 2, 3, 4])

    def test_needs_n16(self):
        with pytest.raises(InvalidParameterError):
            construction_statistics(8, list(range(5)))

    def test_summary_and_threads_agree(self):
        seq = construction_statistics(32, list(range(5)))
        par = construction_statistics(32, list(range(5)), threads=2)
        assert seq == par
        ks = [r.k_total for r in seq.runs]
        assert seq.summary["k_total"].min == min(ks)
        assert seq.summary["k_total"].mean == pytest.approx(np.mean(ks))
