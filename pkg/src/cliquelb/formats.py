"""Plain-text readers and writers.

Graph::

    n m
    u v        (m lines, u < v)

Bipartite graph::

    nA nB m
    a b        (m lines)

Partition: a single line of the V_A ids.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .graph import BipartiteGraph, Graph, InvalidParameterError


def _tokens(text: str) -> Iterator[list[str]]:
    for line in text.splitlines():
        yield line.split()


def dump_graph(g: Graph) -> str:
    lines = [f"{g.n_vertices} {len(g.edges)}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    rows = [r for r in _tokens(text) if r]
    if not rows or len(rows[0]) != 2:
        raise InvalidParameterError("graph header must be 'n m'")
    n, m = map(int, rows[0])
    body = rows[1:]
    if len(body) != m:
        raise InvalidParameterError(f"expected {m} edges, found {len(body)}")
    return Graph.from_edges(n, ((int(u), int(v)) for u, v in body))


def dump_bipartite(g: BipartiteGraph) -> str:
    lines = [f"{g.n_a} {g.n_b} {len(g.edges)}"]
    lines += [f"{a} {b}" for a, b in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_bipartite_lines(rows: list[list[str]]) -> tuple[BipartiteGraph, int]:
    """Parse a bipartite block from pre-split rows; returns the graph and rows consumed."""
    if not rows or len(rows[0]) != 3:
        raise InvalidParameterError("bipartite header must be 'nA nB m'")
    n_a, n_b, m = map(int, rows[0])
    body = rows[1:1 + m]
    if len(body) != m or any(len(r) != 2 for r in body):
        raise InvalidParameterError("truncated bipartite edge list")
    return BipartiteGraph.from_edges(n_a, n_b, ((int(a), int(b)) for a, b in body)), 1 + m


def parse_bipartite(text: str) -> BipartiteGraph:
    rows = [r for r in _tokens(text) if r]
    g, used = parse_bipartite_lines(rows)
    if used != len(rows):
        raise InvalidParameterError("trailing data after bipartite edge list")
    return g


def dump_partition(side_a: tuple[int, ...]) -> str:
    return " ".join(map(str, side_a)) + "\n"


def parse_partition(text: str) -> tuple[int, ...]:
    return tuple(sorted(int(t) for t in text.split()))


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def read_partition(path: str | Path) -> tuple[int, ...]:
    return parse_partition(Path(path).read_text())
