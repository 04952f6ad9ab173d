"""Ribbon graphs as combinatorial maps with twists.

A ribbon graph is stored the way it is written down: each vertex carries a
cyclic (counterclockwise) rotation of half-edge names and each edge joins two
half-edges, optionally with a half twist.

All topology is computed on *corners*.  The attachment segment of a
half-edge has two endpoints: side 0 comes first when walking
counterclockwise around its vertex, side 1 second.  Edge ``i`` therefore
owns four corners ``4*i + 2*end + side``.  Three fixed-point-free
involutions act on corners:

``marker``  joins the two endpoints of one attachment segment,
``long``    joins corners along a long side of the edge ribbon,
``gap``     joins corners along a free arc of a vertex boundary.

An untwisted ribbon joins ``(a, 1)`` to ``(b, 0)`` and ``(a, 0)`` to
``(b, 1)``; a twisted one joins equal sides.  Vertex boundaries are the orbits
of ``<marker, gap>``, the surface boundary is ``<long, gap>``, and the partial
dual with respect to ``A`` swaps ``marker`` and ``long`` on the edges of ``A``.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

Weight = Union[int, Fraction, str]

# ('v', vertex name, gap index) or ('e', edge id, side)
Arc = Tuple[str, str, int]


class RibbonGraphError(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    id: str
    half_a: str
    half_b: str
    twist: bool = False
    x: Weight = 1
    y: Weight = 1
    sign: Optional[str] = None
    zero: bool = False
    phantom: bool = False


@dataclass(frozen=True)
class Vertex:
    name: str
    rotation: Tuple[str, ...] = ()


@dataclass(frozen=True)
class SubgraphMetrics:
    v: int
    e: int
    k: int
    r: int
    n: int
    bc: int
    s: int
    orientable: bool

    def tuple(self):
        return (self.v, self.e, self.k, self.r, self.n, self.bc, self.s, self.orientable)


class EdgeClass(enum.Enum):
    BRIDGE = "bridge"
    ORDINARY = "ordinary"
    TRIVIAL_ORIENTABLE_LOOP = "trivial_orientable_loop"
    NONTRIVIAL_ORIENTABLE_LOOP = "nontrivial_orientable_loop"
    NONORIENTABLE_LOOP = "nonorientable_loop"


class _Corners:
    """Corner involutions and lookup tables for one ribbon graph."""

    def __init__(self, g: "RibbonGraph"):
        n = len(g.edges)
        self.n = n
        self.nv = len(g.vertices)
        loc: Dict[str, Tuple[int, int]] = {}
        for i, e in enumerate(g.edges):
            loc[e.half_a] = (i, 0)
            loc[e.half_b] = (i, 1)
        self.loc = loc
        self.end_vertex = [[0, 0] for _ in range(n)]
        gap = [0] * (4 * n)
        # gap step out of a corner: (vertex index, gap index, +1 if counterclockwise)
        gap_info: List[Tuple[int, int, int]] = [(0, 0, 0)] * (4 * n)
        self.isolated = []
        for vi, vert in enumerate(g.vertices):
            rot = vert.rotation
            d = len(rot)
            if d == 0:
                self.isolated.append(vi)
            for t, h in enumerate(rot):
                i, j = loc[h]
                self.end_vertex[i][j] = vi
                i2, j2 = loc[rot[(t + 1) % d]]
                c1 = 4 * i + 2 * j + 1
                c0 = 4 * i2 + 2 * j2
                gap[c1] = c0
                gap[c0] = c1
                gap_info[c1] = (vi, t, 1)
                gap_info[c0] = (vi, t, -1)
        self.gap = gap
        self.gap_info = gap_info
        lon = [0] * (4 * n)
        for i, e in enumerate(g.edges):
            for j in (0, 1):
                for s in (0, 1):
                    c = 4 * i + 2 * j + s
                    lon[c] = 4 * i + 2 * (1 - j) + (s if e.twist else 1 - s)
        self.long = lon
        self.twist = [e.twist for e in g.edges]

    def bc(self, mask: int) -> int:
        """Boundary components of the spanning subgraph with edge set ``mask``."""
        n4 = 4 * self.n
        seen = bytearray(n4)
        gap, lon = self.gap, self.long
        count = len(self.isolated)
        for c in range(n4):
            if seen[c]:
                continue
            count += 1
            p = c
            while True:
                seen[p] = 1
                q = lon[p] if (mask >> (p >> 2)) & 1 else p ^ 1
                seen[q] = 1
                p = gap[q]
                if p == c:
                    break
        return count

    def boundary_cycles(self, mask: int) -> List[List[Tuple[int, int]]]:
        """Boundary components as lists of (corner, next corner) edge-steps.

        Each cycle alternates an edge-step (``long`` for edges in the mask,
        ``marker`` otherwise) with a gap step; only the edge-steps are
        listed.  Isolated vertices are omitted.
        """
        n4 = 4 * self.n
        seen = bytearray(n4)
        gap, lon = self.gap, self.long
        cycles = []
        for c in range(n4):
            if seen[c]:
                continue
            steps = []
            p = c
            while True:
                seen[p] = 1
                q = lon[p] if (mask >> (p >> 2)) & 1 else p ^ 1
                seen[q] = 1
                steps.append((p, q))
                p = gap[q]
                if p == c:
                    break
            cycles.append(steps)
        return cycles

    def components(self, mask: int) -> Tuple[int, List[int]]:
        parent = list(range(self.nv))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        k = self.nv
        ev = self.end_vertex
        for i in range(self.n):
            if (mask >> i) & 1:
                ra, rb = find(ev[i][0]), find(ev[i][1])
                if ra != rb:
                    parent[ra] = rb
                    k -= 1
        return k, [find(a) for a in range(self.nv)]

    def k(self, mask: int) -> int:
        return self.components(mask)[0]

    def orientable(self, mask: int) -> bool:
        # 2-colour vertices: colour(u) ^ colour(v) == twist(e)
        adj: List[List[Tuple[int, int]]] = [[] for _ in range(self.nv)]
        for i in range(self.n):
            if (mask >> i) & 1:
                a, b = self.end_vertex[i]
                t = 1 if self.twist[i] else 0
                if a == b:
                    if t:
                        return False
                    continue
                adj[a].append((b, t))
                adj[b].append((a, t))
        colour = [-1] * self.nv
        for s in range(self.nv):
            if colour[s] >= 0:
                continue
            colour[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w, t in adj[u]:
                    want = colour[u] ^ t
                    if colour[w] < 0:
                        colour[w] = want
                        stack.append(w)
                    elif colour[w] != want:
                        return False
        return True

    @cached_property
    def face_of(self) -> List[int]:
        """Boundary component (face) index of each corner for the full edge set."""
        full = (1 << self.n) - 1
        face = [0] * (4 * self.n)
        for idx, cyc in enumerate(self.boundary_cycles(full)):
            for p, q in cyc:
                face[p] = idx
                face[q] = idx
        return face

    @cached_property
    def num_faces(self) -> int:
        return self.bc((1 << self.n) - 1)

    def dual_components(self, mask: int) -> int:
        """Components of the dual spanning subgraph with edges *outside* ``mask``.

        Dual vertices are the faces of the whole graph (isolated vertices
        count as their own faces).
        """
        nf = self.num_faces
        parent = list(range(nf))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        k = nf
        face = self.face_of
        for i in range(self.n):
            if not (mask >> i) & 1:
                ra, rb = find(face[4 * i]), find(face[4 * i + 1])
                if ra != rb:
                    parent[ra] = rb
                    k -= 1
        return k


@dataclass(frozen=True)
class RibbonGraph:
    """Immutable ribbon graph.

    ``arrows`` is a tuple of ``(arc, directions)`` pairs; see
    :mod:`topotutte.expansions` for the arrow polynomial.
    """

    vertices: Tuple[Vertex, ...]
    edges: Tuple[Edge, ...] = ()
    arrows: Tuple[Tuple[Arc, Tuple[int, ...]], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        object.__setattr__(self, "arrows", tuple((tuple(a), tuple(d)) for a, d in self.arrows))
        if not self.vertices:
            raise RibbonGraphError("a ribbon graph needs at least one vertex")
        names = [v.name for v in self.vertices]
        if len(set(names)) != len(names):
            raise RibbonGraphError("duplicate vertex name")
        ids = [e.id for e in self.edges]
        if len(set(ids)) != len(ids):
            raise RibbonGraphError("duplicate edge id")
        in_rot: Dict[str, str] = {}
        for v in self.vertices:
            for h in v.rotation:
                if h in in_rot:
                    raise RibbonGraphError(f"half-edge {h} appears twice in rotations")
                in_rot[h] = v.name
        in_edge: Dict[str, str] = {}
        for e in self.edges:
            if e.half_a == e.half_b:
                raise RibbonGraphError(f"edge {e.id} uses half-edge {e.half_a} twice")
            for h in (e.half_a, e.half_b):
                if h in in_edge:
                    raise RibbonGraphError(f"half-edge {h} belongs to two edges")
                in_edge[h] = e.id
            if e.sign not in (None, "+", "-"):
                raise RibbonGraphError(f"edge {e.id}: bad sign {e.sign!r}")
        if set(in_rot) != set(in_edge):
            missing = sorted(set(in_rot) ^ set(in_edge))
            raise RibbonGraphError(f"dangling half-edge(s): {', '.join(missing)}")
        vdeg = {v.name: len(v.rotation) for v in self.vertices}
        eids = set(ids)
        for arc, dirs in self.arrows:
            kind, name, idx = arc
            if kind == "v":
                if name not in vdeg or not 0 <= idx < max(vdeg[name], 1):
                    raise RibbonGraphError(f"arrow on missing arc {arc}")
            elif kind == "e":
                if name not in eids or idx not in (0, 1):
                    raise RibbonGraphError(f"arrow on missing arc {arc}")
            else:
                raise RibbonGraphError(f"bad arc kind {kind!r}")
            if any(d not in (1, -1) for d in dirs):
                raise RibbonGraphError("arrow directions must be +1 or -1")

    # -- basic lookups ------------------------------------------------------

    @cached_property
    def corners(self) -> _Corners:
        return _Corners(self)

    @cached_property
    def edge_index(self) -> Dict[str, int]:
        return {e.id: i for i, e in enumerate(self.edges)}

    @cached_property
    def vertex_index(self) -> Dict[str, int]:
        return {v.name: i for i, v in enumerate(self.vertices)}

    @property
    def edge_ids(self) -> Tuple[str, ...]:
        return tuple(e.id for e in self.edges)

    def edge(self, eid: str) -> Edge:
        try:
            return self.edges[self.edge_index[eid]]
        except KeyError:
            raise RibbonGraphError(f"unknown edge {eid!r}") from None

    def endpoints(self, eid: str) -> Tuple[str, str]:
        i = self.edge_index[eid]
        a, b = self.corners.end_vertex[i]
        return self.vertices[a].name, self.vertices[b].name

    def is_loop(self, eid: str) -> bool:
        a, b = self.endpoints(eid)
        return a == b

    def mask(self, F: Iterable[str]) -> int:
        m = 0
        for eid in F:
            if eid not in self.edge_index:
                raise RibbonGraphError(f"unknown edge {eid!r}")
            m |= 1 << self.edge_index[eid]
        return m

    def subset(self, mask: int) -> FrozenSet[str]:
        return frozenset(e.id for i, e in enumerate(self.edges) if (mask >> i) & 1)

    @property
    def live_mask(self) -> int:
        """Mask of non-phantom edges."""
        return sum(1 << i for i, e in enumerate(self.edges) if not e.phantom)

    @property
    def has_phantoms(self) -> bool:
        return any(e.phantom for e in self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        from .fileformat import serialize

        return serialize(self)


# -- metrics ------------------------------------------------------------------


def metrics_mask(g: RibbonGraph, mask: int) -> SubgraphMetrics:
    c = g.corners
    v = c.nv
    e = bin(mask).count("1")
    k = c.k(mask)
    bc = c.bc(mask)
    r = v - k
    n = e - r
    s = k + n - bc
    return SubgraphMetrics(v, e, k, r, n, bc, s, c.orientable(mask))


def metrics(g: RibbonGraph, F: Optional[Iterable[str]] = None) -> SubgraphMetrics:
    """Metrics of the spanning subgraph with edge set ``F`` (default: all edges)."""
    mask = (1 << len(g.edges)) - 1 if F is None else g.mask(F)
    return metrics_mask(g, mask)


def euler_characteristic(g: RibbonGraph) -> int:
    """Euler characteristic of the closed surface obtained by capping the boundary."""
    m = metrics(g)
    return m.v - m.e + m.bc


# -- surgery ------------------------------------------------------------------


def delete(g: RibbonGraph, eid: str) -> RibbonGraph:
    """Remove an edge and its half-edges.  Arrows are dropped."""
    return delete_edges(g, [eid])


def delete_edges(g: RibbonGraph, eids: Iterable[str]) -> RibbonGraph:
    gone = set(eids)
    for eid in gone:
        g.edge(eid)
    halves = set()
    for e in g.edges:
        if e.id in gone:
            halves.update((e.half_a, e.half_b))
    verts = tuple(Vertex(v.name, tuple(h for h in v.rotation if h not in halves)) for v in g.vertices)
    return RibbonGraph(verts, tuple(e for e in g.edges if e.id not in gone))


def spanning_subgraph(g: RibbonGraph, F: Iterable[str]) -> RibbonGraph:
    keep = set(F)
    return delete_edges(g, [e.id for e in g.edges if e.id not in keep])


def contract(g: RibbonGraph, eid: str) -> RibbonGraph:
    """Contraction as partial dual followed by deletion: ``G/e = G^{e} - e``."""
    return delete(partial_dual(g, [eid]), eid)


def set_phantom(g: RibbonGraph, eids: Iterable[str], phantom: bool = True) -> RibbonGraph:
    targets = set(eids)
    for eid in targets:
        g.edge(eid)
    return RibbonGraph(g.vertices, tuple(replace(e, phantom=phantom) if e.id in targets else e for e in g.edges), g.arrows)


def _fresh_names(taken: set, prefix: str = "v") -> Iterator[str]:
    i = 0
    while True:
        name = f"{prefix}{i}"
        i += 1
        if name not in taken:
            yield name


def partial_dual(g: RibbonGraph, A: Iterable[str]) -> RibbonGraph:
    """Partial dual ``G^A``.  Edge ids are preserved; arrows are dropped.

    Vertices whose half-edge set is unchanged keep their names.
    """
    amask = g.mask(A)
    if amask == 0:
        return RibbonGraph(g.vertices, g.edges)
    c = g.corners
    n = c.n

    def sigma(p: int) -> int:
        return c.long[p] if (amask >> (p >> 2)) & 1 else p ^ 1

    def new_long(p: int) -> int:
        return p ^ 1 if (amask >> (p >> 2)) & 1 else c.long[p]

    def half_name(p: int) -> str:
        i = p >> 2
        e = g.edges[i]
        if (amask >> i) & 1:
            # long side through (a,1) takes half_a, the other half_b
            q = p if (p & 2) == 0 else c.long[p]
            return e.half_a if q & 1 else e.half_b
        return e.half_a if (p & 2) == 0 else e.half_b

    seen = bytearray(4 * n)
    rotations: List[List[str]] = []
    first_corner: Dict[str, int] = {}
    for s in range(4 * n):
        if seen[s]:
            continue
        rot = []
        p = s
        while True:
            q = sigma(p)
            seen[p] = seen[q] = 1
            h = half_name(p)
            rot.append(h)
            first_corner[h] = p
            p = c.gap[q]
            if p == s:
                break
        rotations.append(rot)

    edges = []
    for i, e in enumerate(g.edges):
        pa = first_corner[e.half_a]
        pb = first_corner[e.half_b]
        untwisted = new_long(sigma(pa)) == pb
        edges.append(replace(e, twist=not untwisted))

    old_sets = {frozenset(v.rotation): v.name for v in g.vertices if v.rotation}
    taken = {v.name for v in g.vertices}
    fresh = _fresh_names(taken)
    verts = [v for v in g.vertices if not v.rotation]
    for rot in rotations:
        name = old_sets.get(frozenset(rot))
        verts.append(Vertex(name if name is not None else next(fresh), tuple(rot)))
    order = {v.name: i for i, v in enumerate(g.vertices)}
    verts.sort(key=lambda v: (order.get(v.name, len(order)), v.name))
    return normalize_orientation(RibbonGraph(tuple(verts), tuple(edges)))


def geometric_dual(g: RibbonGraph) -> RibbonGraph:
    """Poincare dual; edge ids are preserved under ``e <-> e*``."""
    if g.has_phantoms:
        raise RibbonGraphError("geometric dual of a graph with phantom edges")
    if not g.edges:
        return RibbonGraph(g.vertices, ())
    return partial_dual(g, g.edge_ids)


def flip_vertex(g: RibbonGraph, name: str) -> RibbonGraph:
    """Re-present a vertex with the opposite orientation (same ribbon graph)."""
    vi = g.vertex_index[name]
    verts = list(g.vertices)
    verts[vi] = Vertex(name, tuple(reversed(g.vertices[vi].rotation)))
    edges = []
    for e in g.edges:
        a, b = g.endpoints(e.id)
        if (a == name) != (b == name):
            e = replace(e, twist=not e.twist)
        edges.append(e)
    return RibbonGraph(tuple(verts), tuple(edges))


def normalize_orientation(g: RibbonGraph) -> RibbonGraph:
    """Flip vertices so that a spanning forest carries no twists.

    Orientable components end up twist-free.  Arrows are dropped.
    """
    c = g.corners
    adj: List[List[Tuple[int, int]]] = [[] for _ in range(c.nv)]
    for i, e in enumerate(g.edges):
        a, b = c.end_vertex[i]
        if a != b:
            adj[a].append((b, i))
            adj[b].append((a, i))
    flip = [-1] * c.nv
    for s in range(c.nv):
        if flip[s] >= 0:
            continue
        flip[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w, i in adj[u]:
                if flip[w] < 0:
                    flip[w] = flip[u] ^ (1 if g.edges[i].twist else 0)
                    queue.append(w)
    if not any(flip):
        return RibbonGraph(g.vertices, g.edges)
    verts = tuple(Vertex(v.name, tuple(reversed(v.rotation))) if flip[vi] else v for vi, v in enumerate(g.vertices))
    edges = []
    for i, e in enumerate(g.edges):
        a, b = c.end_vertex[i]
        if flip[a] != flip[b]:
            e = replace(e, twist=not e.twist)
        edges.append(e)
    return RibbonGraph(verts, tuple(edges))


# -- classification -----------------------------------------------------------


def is_bridge(g: RibbonGraph, eid: str) -> bool:
    full = (1 << len(g.edges)) - 1
    i = g.edge_index[eid]
    return g.corners.k(full & ~(1 << i)) > g.corners.k(full)


def classify_edge(g: RibbonGraph, eid: str) -> EdgeClass:
    e = g.edge(eid)
    a, b = g.endpoints(eid)
    if a != b:
        return EdgeClass.BRIDGE if is_bridge(g, eid) else EdgeClass.ORDINARY
    if e.twist:
        return EdgeClass.NONORIENTABLE_LOOP
    # cut the vertex disc along the chord joining the two ends of the loop
    vert = g.vertices[g.vertex_index[a]]
    rot = vert.rotation
    pa, pb = rot.index(e.half_a), rot.index(e.half_b)
    d = len(rot)
    side1 = [rot[(pa + t) % d] for t in range(1, (pb - pa) % d)]
    side2 = [rot[(pb + t) % d] for t in range(1, (pa - pb) % d)]
    taken = {v.name for v in g.vertices}
    n1, n2 = (nm for nm, _ in zip(_fresh_names(taken, "cut"), range(2)))
    verts = [v for v in g.vertices if v.name != a] + [Vertex(n1, tuple(side1)), Vertex(n2, tuple(side2))]
    cut = RibbonGraph(tuple(verts), tuple(x for x in g.edges if x.id != eid))
    return EdgeClass.TRIVIAL_ORIENTABLE_LOOP if metrics(cut).k > metrics(g).k else EdgeClass.NONTRIVIAL_ORIENTABLE_LOOP


def is_separable_loop(g: RibbonGraph, eid: str) -> bool:
    """Loop whose dual edge is a bridge, i.e. a loop curve separating the surface."""
    if not g.is_loop(eid):
        return False
    c = g.corners
    i = g.edge_index[eid]
    return c.dual_components(1 << i) > c.dual_components(0)


# -- components and unions ------------------------------------------------------


def connected_components(g: RibbonGraph) -> List[RibbonGraph]:
    c = g.corners
    full = (1 << c.n) - 1
    _, root = c.components(full)
    groups: Dict[int, List[int]] = {}
    for vi, r in enumerate(root):
        groups.setdefault(r, []).append(vi)
    out = []
    for r in sorted(groups, key=lambda r: groups[r][0]):
        vs = set(groups[r])
        verts = tuple(g.vertices[vi] for vi in groups[r])
        names = {v.name for v in verts}
        edges = tuple(e for i, e in enumerate(g.edges) if c.end_vertex[i][0] in vs)
        eids = {e.id for e in edges}
        arrows = tuple(
            (arc, d) for arc, d in g.arrows if (arc[0] == "v" and arc[1] in names) or (arc[0] == "e" and arc[1] in eids)
        )
        out.append(RibbonGraph(verts, edges, arrows))
    return out


def disjoint_union(g1: RibbonGraph, g2: RibbonGraph, prefixes=("L.", "R.")) -> RibbonGraph:
    def tag(g: RibbonGraph, p: str):
        verts = tuple(Vertex(p + v.name, tuple(p + h for h in v.rotation)) for v in g.vertices)
        edges = tuple(replace(e, id=p + e.id, half_a=p + e.half_a, half_b=p + e.half_b) for e in g.edges)
        arrows = tuple(((arc[0], p + arc[1], arc[2]), d) for arc, d in g.arrows)
        return verts, edges, arrows

    v1, e1, a1 = tag(g1, prefixes[0])
    v2, e2, a2 = tag(g2, prefixes[1])
    return RibbonGraph(v1 + v2, e1 + e2, a1 + a2)


# -- canonical form -----------------------------------------------------------


def _edge_attrs(e: Edge, labelled: bool):
    attrs = (str(e.x), str(e.y), e.sign or "", e.zero, e.phantom)
    return (e.id,) + attrs if labelled else attrs


def canonical_form(g: RibbonGraph, labelled: bool = False) -> tuple:
    """Relabelling-invariant encoding of the corner structure.

    Two ribbon graphs have equal forms iff they are isomorphic (vertex
    re-orientations included).  With ``labelled=True`` the isomorphism must
    also preserve edge ids.
    """
    c = g.corners
    n4 = 4 * c.n
    ops = (c.gap, None, c.long)

    def apply(k: int, p: int) -> int:
        return p ^ 1 if k == 1 else ops[k][p]

    comp = [-1] * n4
    comps: List[List[int]] = []
    for s in range(n4):
        if comp[s] >= 0:
            continue
        members = []
        comp[s] = len(comps)
        stack = [s]
        while stack:
            p = stack.pop()
            members.append(p)
            for k in range(3):
                q = apply(k, p)
                if comp[q] < 0:
                    comp[q] = comp[s]
                    stack.append(q)
        comps.append(members)

    def encode(start: int) -> tuple:
        label = {start: 0}
        order = [start]
        head = 0
        while head < len(order):
            p = order[head]
            head += 1
            for k in range(3):
                q = apply(k, p)
                if q not in label:
                    label[q] = len(order)
                    order.append(q)
        return tuple(
            (label[apply(0, p)], label[p ^ 1], label[c.long[p]]) + _edge_attrs(g.edges[p >> 2], labelled) for p in order
        )

    codes = [min(encode(s) for s in members) for members in comps]
    return (len(c.isolated), tuple(sorted(codes)))


def isomorphic(g1: RibbonGraph, g2: RibbonGraph, labelled: bool = False) -> bool:
    return canonical_form(g1, labelled) == canonical_form(g2, labelled)
