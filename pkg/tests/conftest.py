import itertools

import pytest
from hypothesis import strategies as st

from cliquelb.graph import BipartiteGraph, Graph
from cliquelb.lbgraph import small_lower_bound_graph

CRITERIA: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def record_criterion():
    def record(name: str, ok: bool, detail: str = "") -> None:
        CRITERIA[name] = (ok, detail)
    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(CRITERIA, key=lambda s: int(s.split()[1].rstrip("abc:"))):
        ok, detail = CRITERIA[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


@pytest.fixture
def small_lbg():
    return small_lower_bound_graph()


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def bipartite_graphs(draw, max_side=7):
    n_a = draw(st.integers(0, max_side))
    n_b = draw(st.integers(0, max_side))
    pairs = list(itertools.product(range(n_a), range(n_b)))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return BipartiteGraph.from_edges(n_a, n_b, chosen)
