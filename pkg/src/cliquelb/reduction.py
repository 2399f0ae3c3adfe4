"""Set-disjointness instances compiled into clique-detection networks.

Given a lower-bound graph H with designated K_{2,2} copies E_1..E_k, Alice adds
the A-pair of E_i whenever x_i = 1 and Bob adds the B-pair of E_i whenever
y_i = 1. The result contains K_4 iff some x_i = y_i = 1. For K_ell with
ell > 4, ell - 4 extra vertices forming a clique are joined to all of A and B.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .graph import Edge, Graph, InvalidParameterError, VertexSet, contains_clique
from .lbgraph import LowerBoundGraph

EXHAUSTIVE_MAX_K = 10


@dataclass(frozen=True)
class DisjInstance:
    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self):
        if len(self.x) != len(self.y) or not self.x:
            raise InvalidParameterError("x and y must have the same length k >= 1")
        if any(b not in (0, 1) for b in self.x + self.y):
            raise InvalidParameterError("bit vectors must be 0/1")

    @property
    def k(self) -> int:
        return len(self.x)

    @classmethod
    def from_strings(cls, x: str, y: str) -> DisjInstance:
        return cls(tuple(int(c) for c in x), tuple(int(c) for c in y))

    def bitstrings(self) -> tuple[str, str]:
        return "".join(map(str, self.x)), "".join(map(str, self.y))


def disj(inst: DisjInstance) -> bool:
    """True iff the two sets intersect (some x_i = y_i = 1)."""
    return any(a & b for a, b in zip(inst.x, inst.y))


def first_common_index(inst: DisjInstance) -> int | None:
    """1-based index of the first common element, if any."""
    for i, (a, b) in enumerate(zip(inst.x, inst.y), start=1):
        if a and b:
            return i
    return None


@dataclass(frozen=True)
class PartitionedGraph:
    graph: Graph
    side_a_vertices: VertexSet
    side_b_vertices: VertexSet
    cut_edges: frozenset[Edge]
    side_a_edges: frozenset[Edge]
    side_b_edges: frozenset[Edge]

    @classmethod
    def from_partition(cls, graph: Graph, side_a) -> PartitionedGraph:
        a = frozenset(side_a)
        if any(not 0 <= v < graph.n_vertices for v in a):
            raise InvalidParameterError("partition id out of range")
        b = tuple(v for v in range(graph.n_vertices) if v not in a)
        cut, ea, eb = set(), set(), set()
        for u, v in graph.edges:
            if (u in a) != (v in a):
                cut.add((u, v))
            elif u in a:
                ea.add((u, v))
            else:
                eb.add((u, v))
        return cls(graph, tuple(sorted(a)), b, frozenset(cut), frozenset(ea), frozenset(eb))

    @property
    def n(self) -> int:
        return self.graph.n_vertices

    def cut_degree(self, v: int) -> int:
        return sum(1 for e in self.cut_edges if v in e)


@dataclass
class Mismatch:
    x: str
    y: str
    disj_value: bool
    clique_found: bool
    common_index: int | None


@dataclass
class ReductionReport:
    instances_checked: int
    mismatches: list[Mismatch]
    cut_size: int
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = not self.mismatches

    def to_dict(self) -> dict:
        return {
            "instances_checked": self.instances_checked,
            "mismatches": [vars(m) for m in self.mismatches],
            "cut_size": self.cut_size,
            "passed": self.passed,
        }


def build_instance(lbg: LowerBoundGraph, inst: DisjInstance, ell: int) -> PartitionedGraph:
    if inst.k != lbg.k:
        raise InvalidParameterError(f"instance has k={inst.k}, graph has {lbg.k} designated sets")
    if ell < 4:
        raise InvalidParameterError("ell must be >= 4")
    n_a, n_b = lbg.base.n_a, lbg.base.n_b
    edges = {(a, n_a + b) for a, b in lbg.base.edges}
    for K, xi, yi in zip(lbg.designated_family, inst.x, inst.y):
        if xi:
            edges.add(K.a_pair)
        if yi:
            edges.add((n_a + K.b1, n_a + K.b2))
    core = n_a + n_b
    fresh = range(core, core + ell - 4)
    edges.update(itertools.combinations(fresh, 2))
    edges.update((v, f) for f in fresh for v in range(core))
    graph = Graph.from_edges(core + ell - 4, edges)
    return PartitionedGraph.from_partition(graph, itertools.chain(range(n_a), fresh))


def cut_size_for(lbg: LowerBoundGraph, ell: int) -> int:
    return len(lbg.base.edges) + max(ell - 4, 0) * lbg.base.n_b


def cut_traffic_bound(lbg: LowerBoundGraph, ell: int, rounds: int, bandwidth: int) -> int:
    """Bits two simulating players could exchange: rounds * |cut| * bandwidth."""
    if rounds < 0 or bandwidth < 0:
        raise InvalidParameterError("rounds and bandwidth must be non-negative")
    return rounds * cut_size_for(lbg, ell) * bandwidth


def _check_one(args: tuple[LowerBoundGraph, DisjInstance, int]) -> Mismatch | None:
    lbg, inst, ell = args
    expected = disj(inst)
    found = contains_clique(build_instance(lbg, inst, ell).graph, ell)
    if found == expected:
        return None
    x, y = inst.bitstrings()
    return Mismatch(x, y, expected, found, first_common_index(inst))


def all_instances(k: int):
    for xs in itertools.product((0, 1), repeat=k):
        for ys in itertools.product((0, 1), repeat=k):
            yield DisjInstance(xs, ys)


def sampled_instances(k: int, count: int, seed: int):
    rng = np.random.Generator(np.random.PCG64(seed))
    bits = rng.integers(0, 2, size=(count, 2, k))
    for row in bits.tolist():
        yield DisjInstance(tuple(row[0]), tuple(row[1]))


def check_reduction(
    lbg: LowerBoundGraph,
    ell: int,
    samples: int | None = None,
    seed: int = 0,
    threads: int = 1,
) -> ReductionReport:
    """Compare clique detection on every built network against DISJ.

    ``samples=None`` enumerates all 4^k input pairs (k <= 10); otherwise that
    many uniformly random pairs are drawn from ``seed``.
    """
    if ell < 4:
        raise InvalidParameterError("ell must be >= 4")
    if lbg.k < 1:
        raise InvalidParameterError("lower-bound graph has no designated sets")
    if samples is None:
        if lbg.k > EXHAUSTIVE_MAX_K:
            raise InvalidParameterError(f"exhaustive mode needs k <= {EXHAUSTIVE_MAX_K}; use sampling")
        instances = list(all_instances(lbg.k))
    else:
        instances = list(sampled_instances(lbg.k, samples, seed))
    jobs = [(lbg, inst, ell) for inst in instances]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_check_one, jobs, chunksize=16))
    else:
        results = [_check_one(j) for j in jobs]
    mismatches = [r for r in results if r is not None]
    return ReductionReport(len(instances), mismatches, cut_size_for(lbg, ell))
