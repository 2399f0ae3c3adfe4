"""Round-synchronous CONGEST_b simulation of neighbourhood-broadcast clique detection.

Every node serialises its sorted neighbour ids (``id_width`` bits each,
big-endian) and streams the string to every neighbour, ``b`` bits per round,
zero-padding the final chunk. Once all streams finish, each node knows the
subgraph induced on its closed neighbourhood and checks it for a K_ell
through itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graph import Edge, Graph, InvalidParameterError, contains_clique
from .reduction import PartitionedGraph

DEFAULT_MAX_N = 256


def id_width_for(n: int) -> int:
    return max(1, (n - 1).bit_length())


@dataclass(frozen=True)
class CongestNetwork:
    topology: Graph
    bandwidth_b: int
    id_width: int = 0

    def __post_init__(self):
        if self.bandwidth_b < 1:
            raise InvalidParameterError("bandwidth must be >= 1")
        if self.id_width == 0:
            object.__setattr__(self, "id_width", id_width_for(self.topology.n_vertices))
        if self.id_width < 1 or (1 << self.id_width) < self.topology.n_vertices:
            raise InvalidParameterError("id_width too small for the vertex ids")


@dataclass(frozen=True)
class Message:
    round: int
    sender: int
    receiver: int
    payload: str

    @property
    def bits(self) -> int:
        return len(self.payload)

    @property
    def edge(self) -> Edge:
        return (min(self.sender, self.receiver), max(self.sender, self.receiver))


@dataclass
class SimulationTrace:
    topology: Graph
    bandwidth_b: int
    rounds_used: int
    per_round_messages: list[Message]
    detections: dict[int, bool] = field(default_factory=dict)

    @property
    def detecting_nodes(self) -> list[int]:
        return [v for v, hit in sorted(self.detections.items()) if hit]


def serialize_neighbors(neighbors, id_width: int) -> str:
    return "".join(format(u, f"0{id_width}b") for u in sorted(neighbors))


def deserialize_neighbors(bits: str, count: int, id_width: int) -> tuple[int, ...]:
    return tuple(int(bits[i * id_width:(i + 1) * id_width], 2) for i in range(count))


class _Node:
    def __init__(self, vid: int, neighbors: tuple[int, ...], net: CongestNetwork):
        self.id = vid
        self.neighbors = neighbors
        self.stream = serialize_neighbors(neighbors, net.id_width)
        b = net.bandwidth_b
        n_chunks = math.ceil(len(self.stream) / b)
        padded = self.stream.ljust(n_chunks * b, "0")
        self.chunks = [padded[i * b:(i + 1) * b] for i in range(n_chunks)]
        self.inbox: dict[int, list[str]] = {u: [] for u in neighbors}

    def outgoing(self, rnd: int) -> list[tuple[int, str]]:
        if rnd >= len(self.chunks):
            return []
        return [(u, self.chunks[rnd]) for u in self.neighbors]


def run_folklore_detection(net: CongestNetwork, ell: int, max_n: int = DEFAULT_MAX_N) -> SimulationTrace:
    if ell < 3:
        raise InvalidParameterError("ell must be >= 3")
    g = net.topology
    if g.n_vertices > max_n:
        raise InvalidParameterError(f"topology has {g.n_vertices} nodes, cap is {max_n}")
    nodes = [_Node(v, g.neighbors(v), net) for v in range(g.n_vertices)]
    rounds_used = max((len(nd.chunks) for nd in nodes), default=0)

    messages: list[Message] = []
    for rnd in range(rounds_used):
        outbox = [(nd.id, u, chunk) for nd in nodes for u, chunk in nd.outgoing(rnd)]
        for sender, receiver, chunk in outbox:
            assert len(chunk) <= net.bandwidth_b
            messages.append(Message(rnd, sender, receiver, chunk))
            nodes[receiver].inbox[sender].append(chunk)

    detections = {}
    for nd in nodes:
        known = _decode_view(nd, net.id_width)
        detections[nd.id] = _in_clique(known, nd.id, ell)
    return SimulationTrace(g, net.bandwidth_b, rounds_used, messages, detections)


def _decode_list(bits: str, id_width: int) -> list[int]:
    # lists are strictly ascending, so zero padding ends the list
    ids = [int(bits[i:i + id_width], 2) for i in range(0, len(bits) - id_width + 1, id_width)]
    out: list[int] = []
    for w in ids:
        if out and w <= out[-1]:
            break
        out.append(w)
    return out


def _decode_view(nd: _Node, id_width: int) -> Graph:
    closed = set(nd.neighbors) | {nd.id}
    edges = {(nd.id, u) for u in nd.neighbors}
    for u, parts in nd.inbox.items():
        for w in _decode_list("".join(parts), id_width):
            if w in closed and w != u:
                edges.add((u, w))
    return Graph.from_edges(max(closed) + 1, edges)


def _in_clique(known: Graph, v: int, ell: int) -> bool:
    nbrs = known.neighbors(v)
    if len(nbrs) < ell - 1:
        return False
    index = {u: i for i, u in enumerate(nbrs)}
    sub = Graph.from_edges(len(nbrs), ((index[a], index[b]) for a, b in known.edges
                                       if a in index and b in index))
    return contains_clique(sub, ell - 1)


def measure_cut_traffic(trace: SimulationTrace, pg: PartitionedGraph) -> int:
    """Total bits, both directions, carried over cut edges."""
    return sum(measure_cut_traffic_by_direction(trace, pg).values())


def measure_cut_traffic_by_direction(trace: SimulationTrace, pg: PartitionedGraph) -> dict[str, int]:
    if trace.topology != pg.graph:
        raise InvalidParameterError("trace topology does not match the partitioned graph")
    side_a = set(pg.side_a_vertices)
    out = {"AliceToBob": 0, "BobToAlice": 0}
    for msg in trace.per_round_messages:
        if msg.edge in pg.cut_edges:
            key = "AliceToBob" if msg.sender in side_a else "BobToAlice"
            out[key] += msg.bits
    return out


def expected_rounds(g: Graph, id_width: int, bandwidth_b: int) -> int:
    return max((math.ceil(g.degree(u) * id_width / bandwidth_b) for u in range(g.n_vertices)),
               default=0)
