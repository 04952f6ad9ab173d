"""Seeded random ribbon graphs, plane graphs and relative plane graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional

from .relative import RelativeGraph
from .ribbon import Edge, RibbonGraph, Vertex, metrics


@dataclass(frozen=True)
class CorpusConfig:
    size: int = 200
    max_edges: int = 10
    max_vertices: int = 4
    loop_prob: float = 0.3
    twist_prob: float = 0.3
    zero_prob: float = 0.4
    seed: int = 0


class _Builder:
    """Mutable rotation system used while growing a random graph."""

    def __init__(self, nv: int):
        self.rots: List[List[str]] = [[] for _ in range(nv)]
        self.edges: List[Edge] = []

    def add(self, rng: random.Random, u: int, v: int, twist: bool) -> None:
        i = len(self.edges) + 1
        ha, hb = f"h{i}a", f"h{i}b"
        self.rots[u].insert(rng.randint(0, len(self.rots[u])), ha)
        self.rots[v].insert(rng.randint(0, len(self.rots[v])), hb)
        self.edges.append(Edge(str(i), ha, hb, twist=twist))

    def pop(self) -> None:
        e = self.edges.pop()
        for rot in self.rots:
            for h in (e.half_a, e.half_b):
                if h in rot:
                    rot.remove(h)

    def build(self) -> RibbonGraph:
        verts = tuple(Vertex(f"v{j}", tuple(r)) for j, r in enumerate(self.rots))
        return RibbonGraph(verts, tuple(self.edges))


def random_ribbon_graph(rng: random.Random, cfg: CorpusConfig = CorpusConfig()) -> RibbonGraph:
    """Arbitrary ribbon graph: possibly disconnected, non-orientable, with loops."""
    nv = rng.randint(1, cfg.max_vertices)
    ne = rng.randint(0, cfg.max_edges)
    b = _Builder(nv)
    for _ in range(ne):
        u = rng.randrange(nv)
        v = u if rng.random() < cfg.loop_prob else rng.randrange(nv)
        b.add(rng, u, v, rng.random() < cfg.twist_prob)
    return b.build()


def random_plane_graph(
    rng: random.Random, max_edges: int = 10, max_vertices: int = 5, loop_prob: float = 0.15
) -> RibbonGraph:
    """Connected genus-0 graph grown from a random tree by planarity-preserving insertions."""
    nv = rng.randint(1, max_vertices)
    b = _Builder(nv)
    for j in range(1, nv):
        b.add(rng, rng.randrange(j), j, False)
    target = rng.randint(nv - 1, max(nv - 1, max_edges))
    attempts = 0
    while len(b.edges) < target and attempts < 50 * max_edges:
        attempts += 1
        u = rng.randrange(nv)
        v = u if rng.random() < loop_prob else rng.randrange(nv)
        b.add(rng, u, v, False)
        if metrics(b.build()).s != 0:
            b.pop()
    return b.build()


def random_relative_graph(
    rng: random.Random, max_edges: int = 10, zero_prob: float = 0.4, max_vertices: int = 5
) -> RelativeGraph:
    g = random_plane_graph(rng, max_edges, max_vertices)
    H = [e.id for e in g.edges if rng.random() < zero_prob]
    return RelativeGraph.from_graph(g, H)


def ribbon_corpus(cfg: CorpusConfig = CorpusConfig()) -> List[RibbonGraph]:
    rng = random.Random(cfg.seed)
    return [random_ribbon_graph(rng, cfg) for _ in range(cfg.size)]


def plane_corpus(size: int = 200, max_edges: int = 10, seed: int = 0) -> List[RibbonGraph]:
    rng = random.Random(seed)
    return [random_plane_graph(rng, max_edges) for _ in range(size)]


def relative_corpus(size: int = 100, max_edges: int = 10, seed: int = 0, zero_prob: Optional[float] = None) -> List[RelativeGraph]:
    rng = random.Random(seed)
    out = []
    for _ in range(size):
        zp = rng.uniform(0.1, 0.7) if zero_prob is None else zero_prob
        out.append(random_relative_graph(rng, max_edges, zp))
    return out
