"""Two-party clique listing in the vertex partition model.

Alice holds E_A and the cut C, Bob holds E_B and C. Cliques with at most one
vertex on the far side are listed locally for free. For the rest:

* ``|C|^2 >= n^3``: Alice ships the full adjacency matrix of G[V_A] to Bob.
* otherwise: for each A-vertex v with cut degree d_v, d_v^2 <= n, Bob ships
  the adjacency matrix of G_B[N(v) & V_B]; then Alice ships the adjacency
  matrix of G_A restricted to the remaining (high cut degree) A-vertices.

Every transmitted message is a literal bitstring and is charged at its length.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .graph import Edge, Graph, VertexSet, enumerate_cliques
from .reduction import PartitionedGraph


class Direction(str, enum.Enum):
    ALICE_TO_BOB = "AliceToBob"
    BOB_TO_ALICE = "BobToAlice"


class Case(str, enum.Enum):
    LARGE_CUT = "LargeCut"
    SMALL_CUT = "SmallCut"


@dataclass(frozen=True)
class Phase:
    label: str
    direction: Direction
    bits: int


@dataclass
class BitLedger:
    phases: list[Phase] = field(default_factory=list)

    @property
    def total_bits(self) -> int:
        return sum(p.bits for p in self.phases)

    def bits_for(self, label: str) -> int:
        return sum(p.bits for p in self.phases if p.label == label)

    def to_list(self) -> list[dict]:
        return [{"label": p.label, "direction": p.direction.value, "bits": p.bits} for p in self.phases]


class Channel:
    """In-memory duplex link; keeps the transcript and charges the ledger."""

    def __init__(self):
        self.ledger = BitLedger()
        self.transcript: list[tuple[str, Direction, str]] = []

    def send(self, label: str, direction: Direction, payload: str) -> str:
        assert set(payload) <= {"0", "1"}
        self.transcript.append((label, direction, payload))
        self.ledger.phases.append(Phase(label, direction, len(payload)))
        return payload


def encode_adjacency(s, g: Graph) -> str:
    """Row-major |s| x |s| adjacency matrix of g[s], vertices in ascending order."""
    vs = sorted(s)
    return "".join("1" if u != v and g.has_edge(u, v) else "0" for u in vs for v in vs)


def decode_adjacency(s, bits: str) -> set[Edge]:
    vs = sorted(s)
    k = len(vs)
    if len(bits) != k * k:
        raise ValueError(f"expected {k * k} bits, got {len(bits)}")
    return {
        (vs[i], vs[j])
        for i in range(k)
        for j in range(i + 1, k)
        if bits[i * k + j] == "1"
    }


def ceil_sqrt(n: int) -> int:
    r = math.isqrt(n)
    return r if r * r == n else r + 1


def protocol_budget(n: int, cut_size: int) -> int:
    return 2 * ceil_sqrt(n) * cut_size


class Player:
    """One endpoint: its own side's vertices and edges plus the shared cut."""

    def __init__(self, n: int, own: VertexSet, other: VertexSet,
                 own_edges: frozenset[Edge], cut: frozenset[Edge]):
        self.n = n
        self.own = own
        self.other = other
        self.cut = cut
        self.known: set[Edge] = set(own_edges) | set(cut)
        self.own_graph = Graph(n, frozenset(own_edges))

    def cut_degrees(self) -> dict[int, int]:
        deg = dict.fromkeys(range(self.n), 0)
        for u, v in self.cut:
            deg[u] += 1
            deg[v] += 1
        return deg

    def decide_case(self) -> Case:
        return Case.LARGE_CUT if len(self.cut) ** 2 >= self.n ** 3 else Case.SMALL_CUT

    def classify(self, side_a: VertexSet) -> tuple[VertexSet, VertexSet]:
        deg = self.cut_degrees()
        low = tuple(v for v in side_a if deg[v] ** 2 <= self.n)
        high = tuple(v for v in side_a if deg[v] ** 2 > self.n)
        return low, high

    def cut_neighbors(self, v: int) -> VertexSet:
        return tuple(sorted(u if w == v else w for u, w in self.cut if v in (u, w)))

    def knowledge(self) -> Graph:
        return Graph(self.n, frozenset(self.known))

    def local_cliques(self) -> list[VertexSet]:
        """Cliques with at most one vertex on the other side; needs only own edges and C."""
        other = set(self.other)
        return [c for c in enumerate_cliques(self.knowledge())
                if sum(v in other for v in c) <= 1]


@dataclass
class ProtocolResult:
    cliques: list[VertexSet]
    ledger: BitLedger
    case_taken: Case
    low_degree_set: VertexSet
    high_degree_set: VertexSet
    found_by: dict[str, list[VertexSet]]
    transcript: list[tuple[str, Direction, str]]


def classify_vertices(pg: PartitionedGraph) -> tuple[VertexSet, VertexSet]:
    """Split V_A by cut degree: ``d_v^2 <= n`` is low, the rest high."""
    deg = dict.fromkeys(pg.side_a_vertices, 0)
    for u, v in pg.cut_edges:
        for w in (u, v):
            if w in deg:
                deg[w] += 1
    low = tuple(v for v in pg.side_a_vertices if deg[v] ** 2 <= pg.n)
    high = tuple(v for v in pg.side_a_vertices if deg[v] ** 2 > pg.n)
    return low, high


def make_players(pg: PartitionedGraph) -> tuple[Player, Player]:
    alice = Player(pg.n, pg.side_a_vertices, pg.side_b_vertices, pg.side_a_edges, pg.cut_edges)
    bob = Player(pg.n, pg.side_b_vertices, pg.side_a_vertices, pg.side_b_edges, pg.cut_edges)
    return alice, bob


def run_protocol(pg: PartitionedGraph) -> ProtocolResult:
    alice, bob = make_players(pg)
    ch = Channel()
    side_a = pg.side_a_vertices

    case = alice.decide_case()
    assert case == bob.decide_case()
    low, high = alice.classify(side_a)
    assert (low, high) == bob.classify(side_a)

    found: dict[str, list[VertexSet]] = {}
    if case is Case.LARGE_CUT:
        msg = ch.send("full_side_a", Direction.ALICE_TO_BOB,
                      encode_adjacency(side_a, alice.own_graph))
        bob.known |= decode_adjacency(side_a, msg)
        found["full_side_a"] = enumerate_cliques(bob.knowledge())
    else:
        found["alice_local"] = alice.local_cliques()
        found["bob_local"] = bob.local_cliques()

        for v in low:
            nbrs = bob.cut_neighbors(v)
            msg = ch.send("low_degree_neighborhoods", Direction.BOB_TO_ALICE,
                          encode_adjacency(nbrs, bob.own_graph))
            alice.known |= decode_adjacency(alice.cut_neighbors(v), msg)
        low_set = set(low)
        found["low_degree_neighborhoods"] = [
            c for c in enumerate_cliques(alice.knowledge()) if low_set.intersection(c)
        ]

        msg = ch.send("high_degree_subgraph", Direction.ALICE_TO_BOB,
                      encode_adjacency(high, alice.own_graph))
        bob.known |= decode_adjacency(high, msg)
        a_set, high_set = set(side_a), set(high)
        found["high_degree_subgraph"] = [
            c for c in enumerate_cliques(bob.knowledge())
            if sum(v in a_set for v in c) >= 2 and all(v in high_set for v in c if v in a_set)
        ]

    cliques = sorted({c for lst in found.values() for c in lst})
    return ProtocolResult(cliques, ch.ledger, case, low, high, found, ch.transcript)


@dataclass
class ProtocolCheck:
    correct: bool
    within_budget: bool
    ledger: BitLedger
    budget: int


def verify_protocol(pg: PartitionedGraph, result: ProtocolResult | None = None) -> ProtocolCheck:
    if result is None:
        result = run_protocol(pg)
    oracle = set(enumerate_cliques(pg.graph, 1))
    correct = set(result.cliques) == oracle
    total = result.ledger.total_bits
    cut = len(pg.cut_edges)
    budget = protocol_budget(pg.n, cut)
    within = total <= budget if cut > 0 else total == 0
    return ProtocolCheck(correct, within, result.ledger, budget)
