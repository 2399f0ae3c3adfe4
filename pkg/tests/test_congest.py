import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from cliquelb.congest import (
    CongestNetwork,
    deserialize_neighbors,
    expected_rounds,
    id_width_for,
    measure_cut_traffic,
    measure_cut_traffic_by_direction,
    run_folklore_detection,
    serialize_neighbors,
)
from cliquelb.experiments import congest_sweep, random_graph, random_partition
from cliquelb.graph import BipartiteGraph, Graph, InvalidParameterError, contains_clique
from cliquelb.reduction import DisjInstance, PartitionedGraph, build_instance


@pytest.fixture
def small_pg(small_lbg):
    return build_instance(small_lbg, DisjInstance.from_strings("1001", "0111"), 4)


def test_id_width():
    assert [id_width_for(n) for n in (1, 2, 3, 4, 5, 8, 9, 256, 257)] == [1, 1, 2, 2, 3, 3, 4, 8, 9]


def test_network_validation():
    with pytest.raises(InvalidParameterError):
        CongestNetwork(Graph.complete(3), 0)
    with pytest.raises(InvalidParameterError):
        CongestNetwork(Graph.complete(5), 1, id_width=2)


def test_serialization_examples():
    assert serialize_neighbors([3, 1], 3) == "001011"
    assert deserialize_neighbors("001011", 2, 3) == (1, 3)


@settings(max_examples=100)
@given(st.sets(st.integers(0, 255), max_size=20))
def test_serialization_roundtrip(ids):
    bits = serialize_neighbors(ids, 8)
    assert len(bits) == 8 * len(ids)
    assert deserialize_neighbors(bits, len(ids), 8) == tuple(sorted(ids))


def test_k4_all_detect():
    net = CongestNetwork(Graph.complete(4), 64)
    trace = run_folklore_detection(net, 4)
    assert trace.detecting_nodes == [0, 1, 2, 3]
    assert trace.rounds_used == math.ceil(3 * net.id_width / 64) == 1


def test_bipartite_triangle_free(small_lbg):
    trace = run_folklore_detection(CongestNetwork(small_lbg.base.to_graph(), 2), 3)
    assert trace.detecting_nodes == []
    big = BipartiteGraph.from_matrix(np.ones((5, 6), dtype=bool)).to_graph()
    assert run_folklore_detection(CongestNetwork(big, 3), 3).detecting_nodes == []


def test_small_instance(small_pg):
    net = CongestNetwork(small_pg.graph, 4)
    assert net.id_width == 3
    trace = run_folklore_detection(net, 4)
    assert small_pg.graph.max_degree() == 5
    assert trace.rounds_used == math.ceil(5 * 3 / 4) == 4
    assert trace.detecting_nodes == [0, 3, 4, 7]


def test_small_cut_traffic(small_pg):
    trace = run_folklore_detection(CongestNetwork(small_pg.graph, 4), 4)
    by_dir = measure_cut_traffic_by_direction(trace, small_pg)
    r, cut, b = trace.rounds_used, len(small_pg.cut_edges), 4
    assert cut == 12
    # each direction of an edge carries at most b bits per round
    assert by_dir["AliceToBob"] <= r * cut * b and by_dir["BobToAlice"] <= r * cut * b
    assert measure_cut_traffic(trace, small_pg) == sum(by_dir.values()) <= 2 * r * cut * b


def test_ell_below_three():
    with pytest.raises(InvalidParameterError):
        run_folklore_detection(CongestNetwork(Graph.complete(3), 1), 2)


def test_max_n_cap():
    g = Graph(20, frozenset())
    with pytest.raises(InvalidParameterError):
        run_folklore_detection(CongestNetwork(g, 1), 3, max_n=10)
    assert run_folklore_detection(CongestNetwork(g, 1), 3, max_n=20).rounds_used == 0


def test_empty_traffic_cases(small_pg):
    g = Graph(4, frozenset())
    trace = run_folklore_detection(CongestNetwork(g, 2), 3)
    assert trace.per_round_messages == []
    assert measure_cut_traffic(trace, PartitionedGraph.from_partition(g, [0, 1])) == 0
    # nonempty traffic but no cut edges
    g2 = Graph.from_edges(4, [(0, 1), (2, 3)])
    trace2 = run_folklore_detection(CongestNetwork(g2, 1), 3)
    assert trace2.per_round_messages
    assert measure_cut_traffic(trace2, PartitionedGraph.from_partition(g2, [0, 1])) == 0


def test_topology_mismatch(small_pg):
    trace = run_folklore_detection(CongestNetwork(Graph.complete(4), 3), 3)
    with pytest.raises(InvalidParameterError):
        measure_cut_traffic(trace, small_pg)


def test_trace_invariants_on_sweep():
    for case in congest_sweep(n_random=15, n_planted=4, seed=2):
        net = CongestNetwork(case.graph, case.bandwidth)
        trace = run_folklore_detection(net, case.ell)
        assert all(m.bits <= case.bandwidth for m in trace.per_round_messages)
        last = max((m.round for m in trace.per_round_messages), default=-1)
        assert trace.rounds_used == last + 1
        assert trace.rounds_used == expected_rounds(case.graph, net.id_width, case.bandwidth)
        assert bool(trace.detecting_nodes) == contains_clique(case.graph, case.ell)
        if case.planted:
            assert set(case.planted) <= set(trace.detecting_nodes)
        pg = PartitionedGraph.from_partition(case.graph, case.side_a)
        by_dir = measure_cut_traffic_by_direction(trace, pg)
        bound = trace.rounds_used * len(pg.cut_edges) * case.bandwidth
        assert max(by_dir.values()) <= bound


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=12), st.integers(3, 5), st.integers(1, 12))
def test_detection_iff_clique(g, ell, b):
    trace = run_folklore_detection(CongestNetwork(g, b), ell)
    assert bool(trace.detecting_nodes) == contains_clique(g, ell)
    # every node that detects really sits in an ell-clique
    for v in trace.detecting_nodes:
        sub = list(g.neighbors(v))
        index = {u: i for i, u in enumerate(sub)}
        local = Graph.from_edges(len(sub), [(index[a], index[c]) for a, c in g.edges
                                            if a in index and c in index])
        assert contains_clique(local, ell - 1)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 20), st.floats(0, 1), st.integers(1, 9), st.integers(0, 2 ** 32))
def test_round_formula_property(n, q, b, seed):
    rng = np.random.Generator(np.random.PCG64(seed))
    g = random_graph(n, q, rng)
    net = CongestNetwork(g, b)
    trace = run_folklore_detection(net, 3)
    assert trace.rounds_used == max(math.ceil(g.degree(u) * net.id_width / b) for u in range(n))
    pg = PartitionedGraph.from_partition(g, random_partition(n, rng))
    by_dir = measure_cut_traffic_by_direction(trace, pg)
    assert max(by_dir.values()) <= trace.rounds_used * len(pg.cut_edges) * b
