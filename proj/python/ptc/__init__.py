"""Pendant Steiner tree packing and extremal search for small graphs."""

from ._ptc import (
    Graph,
    InputError,
    connectivity,
    decode_graph6,
    encode_graph6,
    extremal_lower_bound,
    f_min_edges,
    generate,
    is_connected,
    local_connectivity,
    min_degree,
    vertex_connectivity,
)


def tau(graph, k, **kwargs):
    return connectivity(graph, k, "tau", **kwargs)["value"]


def mu(graph, k, **kwargs):
    return connectivity(graph, k, "mu", **kwargs)["value"]


def kappa_k(graph, k, **kwargs):
    return connectivity(graph, k, "kappa", **kwargs)["value"]


__all__ = [
    "Graph",
    "InputError",
    "connectivity",
    "decode_graph6",
    "encode_graph6",
    "extremal_lower_bound",
    "f_min_edges",
    "generate",
    "is_connected",
    "kappa_k",
    "local_connectivity",
    "min_degree",
    "mu",
    "tau",
    "vertex_connectivity",
]
