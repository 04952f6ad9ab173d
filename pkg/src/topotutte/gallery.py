"""Small named ribbon graphs with known polynomials.

Some of these were only available as drawings; the encodings below were
recovered by the searches in ``scripts/`` and are pinned by the values they
reproduce (see the tests).
"""

from __future__ import annotations

from typing import Dict

from .fileformat import parse
from .relative import RelativeGraph
from .ribbon import RibbonGraph

SOURCES: Dict[str, str] = {
    # two vertices joined by three edges, same rotation at both ends: a torus
    "torus_theta": """\
vertex u: a1 b1 c1
vertex v: a2 b2 c2
edge a: a1 a2
edge b: b1 b2
edge c: c1 c2
""",
    # one vertex, a parallel and a meridian loop on the torus
    "torus_bouquet": """\
vertex v: a1 b1 a2 b2
edge a: a1 a2
edge b: b1 b2
""",
    # twisted loop interlaced with one of two parallel edges
    "mobius_pair": """\
vertex u: 1a 2a 1b 3a
vertex v: 2b 3b
edge 1: 1a 1b twist
edge 2: 2a 2b
edge 3: 3a 3b
""",
    "mobius_pair_arrows": """\
vertex u: 1a 2a 1b 3a
vertex v: 2b 3b
edge 1: 1a 1b twist
edge 2: 2a 2b
edge 3: 3a 3b
arrow v:u:2 +
arrow v:v:1 +
arrow e:1:0 +
arrow e:1:1 +
arrow e:2:0 +
arrow e:2:1 +
arrow e:3:0 +
arrow e:3:1 +
""",
    # non-orientable, four edges; quasi-trees {2}, {3}, {2,3}, {2,3,4}
    "nonorientable_four": """\
vertex u: 2a 3a 1a 1b
vertex v: 2b 4a 3b 4b
edge 1: 1a 1b
edge 2: 2a 2b
edge 3: 3a 3b twist
edge 4: 4a 4b
""",
    # plane triangle of 0-edges with two regular edges doubling two sides
    "relative_triangle": """\
vertex p: h2 h5 r1 r4
vertex q: h5' h3 r1'
vertex r: h2' r4' h3'
edge r1: r1 r1'
edge h2: h2 h2' zero
edge h3: h3 h3' zero
edge r4: r4' r4
edge h5: h5' h5 zero
""",
    "single_vertex": "vertex v:\n",
    "plane_triangle": """\
vertex p: a1 c2
vertex q: b1 a2
vertex r: c1 b2
edge a: a1 a2
edge b: b1 b2
edge c: c1 c2
""",
}


def load(name: str) -> RibbonGraph:
    try:
        return parse(SOURCES[name])
    except KeyError:
        raise KeyError(f"unknown gallery graph {name!r}; have {sorted(SOURCES)}") from None


def relative(name: str = "relative_triangle") -> RelativeGraph:
    return RelativeGraph(load(name))


def names():
    return sorted(SOURCES)
