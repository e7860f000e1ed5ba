"""Chordal bipartite recognition, induced-subgraph enumeration and
beta-acyclicity of hypergraphs."""

from ._core import (
    Graph,
    InputError,
    brute_enumerate,
    count,
    degeneracy,
    enumerate,
    find_cbeo,
    is_beta_acyclic,
    is_chordal_bipartite,
    weak_simplicial_vertices,
)

__all__ = [
    "Graph",
    "InputError",
    "brute_enumerate",
    "count",
    "degeneracy",
    "enumerate",
    "find_cbeo",
    "is_beta_acyclic",
    "is_chordal_bipartite",
    "weak_simplicial_vertices",
]
