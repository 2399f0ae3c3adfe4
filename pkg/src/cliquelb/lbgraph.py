"""Random construction and exhaustive verification of (k, m)-lower-bound graphs.

The construction samples a random bipartite graph with edge probability
``1/sqrt(n)``, then greedily peels a conflict-free family of K_{2,2} copies
out of it. The verifier checks the four defining conditions directly.
"""

from __future__ import annotations

import hashlib
import itertools
import math
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np

from .formats import parse_bipartite_lines
from .graph import (
    K22,
    BipartiteGraph,
    Edge,
    Graph,
    InvalidParameterError,
    common_neighbor_counts,
    enumerate_k22,
    is_bipartite,
)

PAIR_THRESHOLD = 6


@dataclass(frozen=True)
class LowerBoundGraph:
    base: BipartiteGraph
    designated_family: tuple[K22, ...]
    side_sample_a: frozenset[int]
    side_sample_b: frozenset[int]

    @property
    def k(self) -> int:
        return len(self.designated_family)

    @cached_property
    def h_a_edges(self) -> frozenset[Edge]:
        return frozenset(K.a_pair for K in self.designated_family)

    @cached_property
    def h_b_edges(self) -> frozenset[Edge]:
        return frozenset(K.b_pair for K in self.designated_family)

    def h_a(self) -> Graph:
        return Graph(self.base.n_a, self.h_a_edges)

    def h_b(self) -> Graph:
        return Graph(self.base.n_b, self.h_b_edges)


@dataclass
class VerificationReport:
    item1_edge_count: int
    m_bound: int
    item2_union_ok: bool
    item2_all_k22: bool
    item3_cross_pair_violations: list[tuple[int, int]]
    item4_ha_bipartite: bool
    item4_hb_bipartite: bool
    k_value: int
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = (
            self.item1_edge_count <= self.m_bound
            and self.item2_union_ok
            and self.item2_all_k22
            and not self.item3_cross_pair_violations
            and self.item4_ha_bipartite
            and self.item4_hb_bipartite
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["item3_cross_pair_violations"] = [list(p) for p in self.item3_cross_pair_violations]
        return d


@dataclass(frozen=True)
class ConstructionStats:
    n: int
    seed: int
    k_total: int
    pairs_over_threshold_a: int
    pairs_over_threshold_b: int
    h_size: int
    edge_count: int
    expected_k: float


@dataclass
class PeelLog:
    """Instrumentation filled in by :func:`peel_with_samples`."""

    fa_inserts: list[int] = field(default_factory=list)
    fb_inserts: list[int] = field(default_factory=list)
    considered: int = 0


def derive_seed(seed: int, tag: str) -> int:
    """Independent 64-bit stream seed from a user seed and a tag (BLAKE2b)."""
    digest = hashlib.blake2b(f"{int(seed)}:{tag}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def generate_random_bipartite(n: int, p: float, seed: int) -> BipartiteGraph:
    """G(n, n, p): each of the n^2 cross pairs kept independently with probability p.

    One uniform double per pair from a PCG64 stream, drawn in row-major (a, b) order.
    """
    if n < 2:
        raise InvalidParameterError("n must be >= 2")
    if not 0.0 <= p <= 1.0:
        raise InvalidParameterError("p must lie in [0, 1]")
    rng = np.random.Generator(np.random.PCG64(seed))
    return BipartiteGraph.from_matrix(rng.random((n, n)) < p)


def sample_sides(g: BipartiteGraph, seed: int) -> tuple[frozenset[int], frozenset[int]]:
    rng = np.random.Generator(np.random.PCG64(seed))
    in_a = rng.random(g.n_a) < 0.5
    in_b = rng.random(g.n_b) < 0.5
    return frozenset(np.flatnonzero(in_a).tolist()), frozenset(np.flatnonzero(in_b).tolist())


def _pair_index(family: list[K22]) -> tuple[dict[Edge, list[K22]], dict[Edge, list[K22]]]:
    by_a: dict[Edge, list[K22]] = defaultdict(list)
    by_b: dict[Edge, list[K22]] = defaultdict(list)
    for K in family:
        by_a[K.a_pair].append(K)
        by_b[K.b_pair].append(K)
    return by_a, by_b


def peel_with_samples(
    g: BipartiteGraph,
    side_a: frozenset[int],
    side_b: frozenset[int],
    family: list[K22] | None = None,
    log: PeelLog | None = None,
) -> LowerBoundGraph:
    """Greedy peeling over the K_{2,2} copies of ``g`` for fixed side samples."""
    if family is None:
        family = enumerate_k22(g)
    by_a, by_b = _pair_index(family)
    forbidden_a: set[Edge] = set()
    forbidden_b: set[Edge] = set()
    chosen: list[K22] = []
    for K in family:
        if log is not None:
            log.considered += 1
        same_a = by_a[K.a_pair]
        same_b = by_b[K.b_pair]
        if len(same_a) > PAIR_THRESHOLD or len(same_b) > PAIR_THRESHOLD:
            continue
        if ((K.a1 in side_a) + (K.a2 in side_a)) != 1:
            continue
        if ((K.b1 in side_b) + (K.b2 in side_b)) != 1:
            continue
        if K.a_pair in forbidden_a or K.b_pair in forbidden_b:
            continue
        chosen.append(K)
        forbidden_b.update(other.b_pair for other in same_a)
        forbidden_a.update(other.a_pair for other in same_b)
        if log is not None:
            log.fb_inserts.append(len(same_a))
            log.fa_inserts.append(len(same_b))

    edges = set()
    for K in chosen:
        edges.update(K.cross_edges())
    base = BipartiteGraph(g.n_a, g.n_b, frozenset(edges))
    return LowerBoundGraph(base, tuple(chosen), frozenset(side_a), frozenset(side_b))


def peel(g: BipartiteGraph, seed: int, log: PeelLog | None = None) -> LowerBoundGraph:
    side_a, side_b = sample_sides(g, seed)
    return peel_with_samples(g, side_a, side_b, log=log)


def construct_lower_bound_graph(n: int, seed: int) -> tuple[LowerBoundGraph, ConstructionStats]:
    if n < 4:
        raise InvalidParameterError("n must be >= 4")
    p = 1.0 / math.sqrt(n)
    g = generate_random_bipartite(n, p, derive_seed(seed, "edges"))
    family = enumerate_k22(g)
    side_a, side_b = sample_sides(g, derive_seed(seed, "sample"))
    lbg = peel_with_samples(g, side_a, side_b, family=family)

    co_a, co_b = common_neighbor_counts(g)
    # |K({x, y})| = C(codeg, 2) > 6  <=>  codeg >= 5
    over_a = int(np.count_nonzero(np.triu(co_a, k=1) >= 5))
    over_b = int(np.count_nonzero(np.triu(co_b, k=1) >= 5))
    stats = ConstructionStats(
        n=n,
        seed=seed,
        k_total=len(family),
        pairs_over_threshold_a=over_a,
        pairs_over_threshold_b=over_b,
        h_size=lbg.k,
        edge_count=len(lbg.base.edges),
        expected_k=math.comb(n, 2) ** 2 / n ** 2,
    )
    return lbg, stats


def item3_violations(lbg: LowerBoundGraph) -> list[tuple[int, int]]:
    """Ordered pairs (i, j), i != j, where A-pair of i and B-pair of j induce K_{2,2}."""
    m = lbg.base.matrix()
    by_b: dict[Edge, list[int]] = defaultdict(list)
    for j, K in enumerate(lbg.designated_family):
        by_b[K.b_pair].append(j)
    out = []
    for i, K in enumerate(lbg.designated_family):
        common = np.flatnonzero(m[K.a1] & m[K.a2]).tolist()
        for b_pair in itertools.combinations(common, 2):
            out.extend((i, j) for j in by_b.get(b_pair, ()) if j != i)
    return sorted(out)


def verify_lower_bound_graph(lbg: LowerBoundGraph, m_bound: int) -> VerificationReport:
    base = lbg.base
    union = set()
    all_k22 = True
    for K in lbg.designated_family:
        cross = K.cross_edges()
        union.update(cross)
        if K.a1 == K.a2 or K.b1 == K.b2 or not all(e in base.edges for e in cross):
            all_k22 = False
    return VerificationReport(
        item1_edge_count=len(base.edges),
        m_bound=m_bound,
        item2_union_ok=union == set(base.edges),
        item2_all_k22=all_k22,
        item3_cross_pair_violations=item3_violations(lbg),
        item4_ha_bipartite=is_bipartite(lbg.h_a()) is not None,
        item4_hb_bipartite=is_bipartite(lbg.h_b()) is not None,
        k_value=lbg.k,
    )


@dataclass(frozen=True)
class Summary:
    mean: float
    min: float
    max: float


@dataclass
class ConstructionSummary:
    n: int
    runs: list[ConstructionStats]
    summary: dict[str, Summary]


SUMMARY_FIELDS = ("k_total", "pairs_over_threshold_a", "pairs_over_threshold_b", "h_size", "edge_count")


def _stats_only(args: tuple[int, int]) -> ConstructionStats:
    return construct_lower_bound_graph(*args)[1]


def construction_statistics(n: int, seeds: list[int], threads: int = 1) -> ConstructionSummary:
    if n < 16:
        raise InvalidParameterError("n must be >= 16")
    if len(seeds) < 5:
        raise InvalidParameterError("need at least 5 seeds")
    jobs = [(n, s) for s in seeds]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            runs = list(pool.map(_stats_only, jobs))
    else:
        runs = [_stats_only(j) for j in jobs]
    summary = {}
    for name in SUMMARY_FIELDS:
        vals = [getattr(r, name) for r in runs]
        summary[name] = Summary(float(np.mean(vals)), min(vals), max(vals))
    return ConstructionSummary(n, runs, summary)


def loglog_slope(xs: list[float], ys: list[float]) -> float:
    """Least-squares slope of log(y) against log(x)."""
    return float(np.polyfit(np.log(xs), np.log(ys), 1)[0])


# -- text format -------------------------------------------------------------

def dump_lbg(lbg: LowerBoundGraph) -> str:
    base = lbg.base
    lines = [f"LBG {base.n_a} {lbg.k}", f"{base.n_a} {base.n_b} {len(base.edges)}"]
    lines += [f"{a} {b}" for a, b in base.sorted_edges()]
    lines += [" ".join(map(str, K)) for K in lbg.designated_family]
    lines.append(" ".join(map(str, sorted(lbg.side_sample_a))))
    lines.append(" ".join(map(str, sorted(lbg.side_sample_b))))
    return "\n".join(lines) + "\n"


def parse_lbg(text: str) -> LowerBoundGraph:
    rows = [line.split() for line in text.splitlines()]
    if not rows or len(rows[0]) != 3 or rows[0][0] != "LBG":
        raise InvalidParameterError("missing 'LBG n k' header")
    k = int(rows[0][2])
    base, used = parse_bipartite_lines(rows[1:])
    rest = rows[1 + used:]
    while len(rest) > k + 2 and not rest[-1]:
        rest.pop()
    if len(rest) != k + 2:
        raise InvalidParameterError(f"expected {k} designated sets plus two sample lines")
    family = []
    for r in rest[:k]:
        a1, a2, b1, b2 = map(int, r)
        family.append(K22(min(a1, a2), max(a1, a2), min(b1, b2), max(b1, b2)))
    side_a = frozenset(int(t) for t in rest[k])
    side_b = frozenset(int(t) for t in rest[k + 1])
    return LowerBoundGraph(base, tuple(family), side_a, side_b)


def read_lbg(path: str | Path) -> LowerBoundGraph:
    return parse_lbg(Path(path).read_text())


def write_lbg(lbg: LowerBoundGraph, path: str | Path) -> None:
    Path(path).write_text(dump_lbg(lbg))


def small_lower_bound_graph() -> LowerBoundGraph:
    """The 4-cycle example: a_i ~ b_{i-1}, b_i, b_{i+1} (indices mod 4), k=4, 12 edges."""
    n = 4
    edges = [(i, (i + d) % n) for i in range(n) for d in (-1, 0, 1)]
    family = []
    for i in range(n):
        j = (i + 1) % n
        family.append(K22(min(i, j), max(i, j), min(i, j), max(i, j)))
    return LowerBoundGraph(
        BipartiteGraph.from_edges(n, n, edges),
        tuple(family),
        frozenset({0, 2}),
        frozenset({0, 2}),
    )
