"""Seeded instance generators for the sweeps run by scripts/ and the acceptance suite."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .reduction import PartitionedGraph

SWEEP_SIZES = (8, 12, 16)
SWEEP_DENSITIES = (0.2, 0.5, 0.8)


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_graph(n: int, q: float, rng: np.random.Generator) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    keep = rng.random(len(pairs)) < q
    return Graph.from_edges(n, (e for e, k in zip(pairs, keep) if k))


def balanced_partition(n: int, rng: np.random.Generator) -> tuple[int, ...]:
    perm = rng.permutation(n)
    return tuple(sorted(perm[: n // 2].tolist()))


def random_partition(n: int, rng: np.random.Generator) -> tuple[int, ...]:
    side = rng.random(n) < 0.5
    return tuple(np.flatnonzero(side).tolist())


def protocol_sweep(count: int = 200, seed: int = 1) -> list[tuple[float, PartitionedGraph]]:
    """``count`` instances cycling over sizes and densities, balanced random partitions."""
    out = []
    for i in range(count):
        n = SWEEP_SIZES[i % len(SWEEP_SIZES)]
        q = SWEEP_DENSITIES[(i // len(SWEEP_SIZES)) % len(SWEEP_DENSITIES)]
        rng = _rng(seed * 1_000_003 + i)
        g = random_graph(n, q, rng)
        out.append((q, PartitionedGraph.from_partition(g, balanced_partition(n, rng))))
    return out


def large_cut_witness() -> PartitionedGraph:
    """K_16 split 8|8: |C| = 64 and 64^2 = 16^3."""
    return PartitionedGraph.from_partition(Graph.complete(16), range(8))


def plant_clique(g: Graph, size: int, rng: np.random.Generator) -> tuple[Graph, tuple[int, ...]]:
    members = tuple(sorted(rng.choice(g.n_vertices, size=size, replace=False).tolist()))
    return Graph.from_edges(g.n_vertices, set(g.edges) | set(itertools.combinations(members, 2))), members


@dataclass(frozen=True)
class CongestCase:
    graph: Graph
    ell: int
    bandwidth: int
    side_a: tuple[int, ...]
    planted: tuple[int, ...] = ()


def congest_sweep(n_random: int = 50, n_planted: int = 10, seed: int = 1) -> list[CongestCase]:
    """Random topologies (n <= 32) for ell in 3..5, plus sparse graphs with a planted K_4 or K_5."""
    cases = []
    for i in range(n_random):
        rng = _rng(seed * 7_000_003 + i)
        n = int(rng.integers(6, 33))
        q = float(rng.choice([0.1, 0.2, 0.35, 0.5, 0.7]))
        g = random_graph(n, q, rng)
        b = int(rng.choice([1, 3, 8, 16]))
        side_a = random_partition(n, rng)
        for ell in (3, 4, 5):
            cases.append(CongestCase(g, ell, b, side_a))
    for i in range(n_planted):
        for ell in (4, 5):
            rng = _rng(seed * 9_000_011 + 10 * i + ell)
            n = int(rng.integers(12, 33))
            g, members = plant_clique(random_graph(n, 0.08, rng), ell, rng)
            b = int(rng.choice([2, 5, 8]))
            cases.append(CongestCase(g, ell, b, random_partition(n, rng), members))
    return cases
