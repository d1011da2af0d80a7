"""Exact tools for wheel saturation: W4-extremal families, subgraph tests, and
isomorph-free search for sat(n, H)."""

from .canon import canonical_form, canonical_graph, canonical_key, is_isomorphic
from .detect import C4, K4, W4, Target, parse_target
from .graph import Graph, empty, join_universal

__all__ = [
    "C4",
    "Graph",
    "K4",
    "Target",
    "W4",
    "canonical_form",
    "canonical_graph",
    "canonical_key",
    "empty",
    "is_isomorphic",
    "join_universal",
    "parse_target",
]
