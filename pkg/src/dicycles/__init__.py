"""Exact tools for vertex-disjoint cycles, girth and long paths in digraphs."""

from .digraph import (
    Digraph,
    DigraphBuilder,
    GirthCertificate,
    girth,
    min_outdegree,
    strong_connectivity,
)
from .packing import Packing, counting_bound, enumerate_cycles, max_disjoint_cycles
from .paths import PathCertificate, longest_path_exact

__version__ = "0.1.0"

__all__ = [
    "Digraph",
    "DigraphBuilder",
    "GirthCertificate",
    "Packing",
    "PathCertificate",
    "counting_bound",
    "enumerate_cycles",
    "girth",
    "longest_path_exact",
    "max_disjoint_cycles",
    "min_outdegree",
    "strong_connectivity",
]
