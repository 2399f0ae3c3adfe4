"""Clique detection lower-bound constructions, reductions and protocols."""

from importlib import resources

from .graph import (
    K22,
    BipartiteGraph,
    Graph,
    InvalidParameterError,
    contains_clique,
    enumerate_cliques,
    enumerate_k22,
    is_bipartite,
)


def small_fixture_path():
    """Path to the bundled (4,12)-lower-bound graph file."""
    return resources.files(__package__) / "data" / "lb_4_12.lbg"


def schema_path(name: str):
    return resources.files(__package__) / "schemas" / f"{name}.schema.json"


__all__ = [
    "K22",
    "BipartiteGraph",
    "Graph",
    "InvalidParameterError",
    "contains_clique",
    "enumerate_cliques",
    "enumerate_k22",
    "is_bipartite",
    "small_fixture_path",
    "schema_path",
]
