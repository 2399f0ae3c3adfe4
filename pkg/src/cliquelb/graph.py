"""Graph representations and the exhaustive enumeration routines used as oracles.

Vertex ids are dense 0-based integers. A bipartite graph with sides A and B is
mapped onto a general graph by ``a_i -> i`` and ``b_j -> n_a + j``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

VertexSet = tuple[int, ...]
Edge = tuple[int, int]


class InvalidParameterError(ValueError):
    """Raised when an operation is called with arguments outside its domain."""


def _canonical(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n_vertices: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n_vertices < 0:
            raise InvalidParameterError("negative vertex count")
        for u, v in self.edges:
            if not (0 <= u < v < self.n_vertices):
                raise InvalidParameterError(f"bad edge {(u, v)} for n={self.n_vertices}")

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Iterable[tuple[int, int]]) -> Graph:
        canon = set()
        for u, v in edges:
            if u == v:
                raise InvalidParameterError(f"self-loop at {u}")
            canon.add(_canonical(int(u), int(v)))
        return cls(n_vertices, frozenset(canon))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls.from_edges(n, itertools.combinations(range(n), 2))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood of every vertex as an int bitmask."""
        m = [0] * self.n_vertices
        for u, v in self.edges:
            m[u] |= 1 << v
            m[v] |= 1 << u
        return tuple(m)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (self.masks[u] >> v) & 1 == 1

    def neighbors(self, v: int) -> VertexSet:
        return _bits(self.masks[v])

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def max_degree(self) -> int:
        return max((m.bit_count() for m in self.masks), default=0)

    def induced_edges(self, vertices: Iterable[int]) -> frozenset[Edge]:
        vs = set(vertices)
        return frozenset(e for e in self.edges if e[0] in vs and e[1] in vs)


@dataclass(frozen=True)
class BipartiteGraph:
    n_a: int
    n_b: int
    edges: frozenset[Edge]

    def __post_init__(self):
        for a, b in self.edges:
            if not (0 <= a < self.n_a and 0 <= b < self.n_b):
                raise InvalidParameterError(f"bad bipartite edge {(a, b)}")

    @classmethod
    def from_edges(cls, n_a: int, n_b: int, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
        return cls(n_a, n_b, frozenset((int(a), int(b)) for a, b in edges))

    @classmethod
    def from_matrix(cls, matrix: np.ndarray) -> BipartiteGraph:
        n_a, n_b = matrix.shape
        rows, cols = np.nonzero(matrix)
        return cls(n_a, n_b, frozenset(zip(rows.tolist(), cols.tolist())))

    def matrix(self) -> np.ndarray:
        """Boolean ``n_a x n_b`` biadjacency matrix."""
        m = np.zeros((self.n_a, self.n_b), dtype=bool)
        if self.edges:
            a, b = zip(*self.edges)
            m[list(a), list(b)] = True
        return m

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def b_id(self, b: int) -> int:
        return self.n_a + b

    def to_graph(self) -> Graph:
        return Graph(self.n_a + self.n_b,
                     frozenset((a, self.n_a + b) for a, b in self.edges))


class K22(NamedTuple):
    """A copy of K_{2,2} given by its A-pair and B-pair (bipartite indices)."""

    a1: int
    a2: int
    b1: int
    b2: int

    @property
    def a_pair(self) -> Edge:
        return (self.a1, self.a2)

    @property
    def b_pair(self) -> Edge:
        return (self.b1, self.b2)

    def cross_edges(self) -> list[Edge]:
        return [(self.a1, self.b1), (self.a1, self.b2), (self.a2, self.b1), (self.a2, self.b2)]

    def vertex_set(self, n_a: int) -> VertexSet:
        return (self.a1, self.a2, n_a + self.b1, n_a + self.b2)


def _bits(mask: int) -> VertexSet:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def common_neighbor_counts(g: BipartiteGraph) -> tuple[np.ndarray, np.ndarray]:
    """Co-degree matrices ``(A x A, B x B)`` of a bipartite graph."""
    m = g.matrix().astype(np.int64)
    return m @ m.T, m.T @ m


def enumerate_k22(g: BipartiteGraph) -> list[K22]:
    """All K_{2,2} copies, sorted by ``(a1, a2, b1, b2)`` with ``a1 < a2``, ``b1 < b2``."""
    m = g.matrix()
    if g.n_a < 2 or g.n_b < 2 or len(g.edges) < 4:
        return []
    co_a = m.astype(np.int64) @ m.T.astype(np.int64)
    co_a = np.triu(co_a, k=1)
    out: list[K22] = []
    rows, cols = np.nonzero(co_a >= 2)
    # np.nonzero walks row-major, so (a1, a2) pairs come out in lexicographic order
    for a1, a2 in zip(rows.tolist(), cols.tolist()):
        common = np.flatnonzero(m[a1] & m[a2]).tolist()
        for b1, b2 in itertools.combinations(common, 2):
            out.append(K22(a1, a2, b1, b2))
    return out


def enumerate_cliques(g: Graph, min_size: int = 1) -> list[VertexSet]:
    """Every clique of size at least ``min_size`` (maximal or not), each once.

    Depth-first extension in ascending vertex order over bitmask candidate
    sets, pruning branches whose clique plus remaining candidates cannot
    reach ``min_size``. Output is in lexicographic order.
    """
    if min_size < 1:
        raise InvalidParameterError("min_size must be >= 1")
    masks = g.masks
    out: list[VertexSet] = []
    clique: list[int] = []

    def extend(cand: int) -> None:
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            nxt = cand & masks[v]
            if len(clique) + 1 + nxt.bit_count() < min_size:
                continue
            clique.append(v)
            if len(clique) >= min_size:
                out.append(tuple(clique))
            extend(nxt)
            clique.pop()

    extend((1 << g.n_vertices) - 1)
    return out


def contains_clique(g: Graph, ell: int) -> bool:
    """Whether ``g`` has ``ell`` pairwise adjacent vertices."""
    if ell < 1:
        raise InvalidParameterError("ell must be >= 1")
    if ell == 1:
        return g.n_vertices > 0
    masks = list(g.masks)
    # peel vertices that cannot sit in an ell-clique (degree < ell - 1)
    alive = (1 << g.n_vertices) - 1
    changed = True
    while changed:
        changed = False
        for v in _bits(alive):
            if (masks[v] & alive).bit_count() < ell - 1:
                alive &= ~(1 << v)
                changed = True

    def search(cand: int, need: int) -> bool:
        if need == 0:
            return True
        while cand.bit_count() >= need:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if search(cand & masks[v], need - 1):
                return True
        return False

    return search(alive, ell)


def is_bipartite(g: Graph) -> list[int] | None:
    """A proper 2-colouring (side per vertex) or ``None`` if an odd cycle exists.

    BFS from the lowest uncoloured id in each component; that id gets side 0.
    """
    colour = [-1] * g.n_vertices
    for root in range(g.n_vertices):
        if colour[root] != -1:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in _bits(g.masks[u]):
                if colour[w] == -1:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    return colour
