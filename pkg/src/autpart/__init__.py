"""Automorphism groups of simple graphs by partition refinement and bouquet search."""
from .graph import Graph, GraphError, parse_graph, read_graph
from .group import Permutation, compose, cycle_form
from .partition import OrderedPartition, code, refine
from .search import SearchConfig, UnsupportedDecomposition, vseparn
from .heuristic import HeurConfig, heuraut
from .oracle import brute_force

__all__ = [
    "Graph", "GraphError", "parse_graph", "read_graph",
    "Permutation", "compose", "cycle_form",
    "OrderedPartition", "code", "refine",
    "SearchConfig", "UnsupportedDecomposition", "vseparn",
    "HeurConfig", "heuraut", "brute_force",
]
