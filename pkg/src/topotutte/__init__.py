"""Topological Tutte polynomials of ribbon graphs."""

from .polynomial import Poly
from .ribbon import Edge, EdgeClass, RibbonGraph, RibbonGraphError, SubgraphMetrics, Vertex, metrics
from .fileformat import parse, serialize

__all__ = [
    "Edge",
    "EdgeClass",
    "Poly",
    "RibbonGraph",
    "RibbonGraphError",
    "SubgraphMetrics",
    "Vertex",
    "metrics",
    "parse",
    "serialize",
]
