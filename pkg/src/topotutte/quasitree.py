"""Spanning quasi-trees, their chord diagrams, and the quasi-tree expansion
of the Krushkal polynomial.

A quasi-tree ``Q`` is a spanning subgraph with one boundary component.
Walking that boundary passes every edge twice (along both long sides if
``e`` is in ``Q``, across both attachment segments otherwise), which gives a
chord diagram on the circle.  Given a total order on the edges, a chord is
*live* if it is smaller than every chord crossing it, and *orientable* if the
two passes induce the same orientation on the edge rectangle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .polynomial import Poly
from .ribbon import RibbonGraph, RibbonGraphError, connected_components, geometric_dual, metrics_mask, partial_dual
from .tutte import AbstractGraph, rank_generating


@dataclass(frozen=True)
class ChordFlags:
    internal: bool
    live: bool
    orientable: bool


@dataclass(frozen=True)
class ChordDiagram:
    """Cyclic sequence of chord ends (edge ids) plus per-chord flags."""

    sequence: Tuple[str, ...]
    flags: Dict[str, ChordFlags]
    order: Tuple[str, ...]

    def crossing(self, e: str, f: str) -> bool:
        return crosses(self.sequence, e, f)

    def live_edges(self) -> List[str]:
        return [e for e in self.order if self.flags[e].live]


@dataclass(frozen=True)
class ButlerTerm:
    quasi_tree: frozenset
    diagram: ChordDiagram
    F: frozenset
    gamma: AbstractGraph
    s_F: int
    dual_F: frozenset
    dual_gamma: AbstractGraph
    s_dual_F: int
    contribution: Poly


def quasi_trees(g: RibbonGraph) -> List[frozenset]:
    """All spanning quasi-trees, ascending by size then lexicographically in edge order."""
    if g.has_phantoms:
        raise RibbonGraphError("quasi-trees need a cellular graph")
    c = g.corners
    n = c.n
    masks = [m for m in range(1 << n) if c.bc(m) == 1]
    masks.sort(key=lambda m: (bin(m).count("1"), [i for i in range(n) if (m >> i) & 1]))
    return [g.subset(m) for m in masks]


def crosses(seq: Sequence[str], e: str, f: str) -> bool:
    """Whether chords ``e`` and ``f`` interleave on the circle."""
    if e == f:
        return False
    ends = [x for x in seq if x in (e, f)]
    # interleaved iff the pattern is e f e f up to rotation
    return ends[0] != ends[1] and ends[1] != ends[2]


def _default_order(g: RibbonGraph, order: Optional[Sequence[str]]) -> Tuple[str, ...]:
    if order is None:
        return g.edge_ids
    order = tuple(order)
    if sorted(order) != sorted(g.edge_ids):
        raise RibbonGraphError("order must be a permutation of the edge ids")
    return order


def _rectangle_successor(g: RibbonGraph, i: int) -> Dict[int, int]:
    """Next corner around the boundary of edge rectangle ``i``, in one fixed direction."""
    c = g.corners
    a0 = 4 * i
    cyc = [a0, a0 + 1, c.long[a0 + 1], c.long[a0 + 1] ^ 1]
    return {cyc[t]: cyc[(t + 1) % 4] for t in range(4)}


def chord_diagram(g: RibbonGraph, Q, order: Optional[Sequence[str]] = None) -> ChordDiagram:
    """Chord diagram of quasi-tree ``Q`` read off its boundary walk."""
    order = _default_order(g, order)
    mask = g.mask(Q)
    c = g.corners
    cycles = c.boundary_cycles(mask)
    if len(cycles) + len(c.isolated) != 1:
        raise RibbonGraphError(f"{sorted(Q)} is not a quasi-tree")
    if not cycles:
        return ChordDiagram((), {}, order)
    seq = []
    agree: Dict[str, List[bool]] = {}
    succ = {i: _rectangle_successor(g, i) for i in range(c.n)}
    for p, q in cycles[0]:
        i = p >> 2
        eid = g.edges[i].id
        seq.append(eid)
        agree.setdefault(eid, []).append(succ[i][p] == q)
    rank = {e: r for r, e in enumerate(order)}
    flags = {}
    for e in g.edge_ids:
        crossing = [f for f in g.edge_ids if crosses(seq, e, f)]
        live = all(rank[e] < rank[f] for f in crossing)
        a1, a2 = agree[e]
        flags[e] = ChordFlags(internal=(mask >> g.edge_index[e]) & 1 == 1, live=live, orientable=a1 == a2)
    return ChordDiagram(tuple(seq), flags, order)


def chord_diagram_via_partial_dual(g: RibbonGraph, Q, order: Optional[Sequence[str]] = None) -> ChordDiagram:
    """The same diagram computed as the one-vertex partial dual ``G^Q``.

    The rotation of that vertex is the chord sequence and its twisted loops
    are the non-orientable chords.
    """
    order = _default_order(g, order)
    pd = partial_dual(g, Q)
    if len(pd.vertices) != 1:
        raise RibbonGraphError(f"{sorted(Q)} is not a quasi-tree")
    owner = {}
    for e in g.edges:
        owner[e.half_a] = e.id
        owner[e.half_b] = e.id
    seq = tuple(owner[h] for h in pd.vertices[0].rotation)
    rank = {e: r for r, e in enumerate(order)}
    inside = set(Q)
    flags = {}
    for e in pd.edges:
        crossing = [f for f in g.edge_ids if crosses(seq, e.id, f)]
        flags[e.id] = ChordFlags(
            internal=e.id in inside, live=all(rank[e.id] < rank[f] for f in crossing), orientable=not e.twist
        )
    return ChordDiagram(seq, flags, order)


def same_cyclic_sequence(s1: Sequence[str], s2: Sequence[str]) -> bool:
    """Equality up to rotation and reversal."""
    if len(s1) != len(s2):
        return False
    if not s1:
        return True
    t1 = tuple(s1)
    for cand in (tuple(s2), tuple(reversed(s2))):
        doubled = cand + cand
        if any(doubled[i : i + len(t1)] == t1 for i in range(len(t1))):
            return True
    return False


def dual_quasitree(g: RibbonGraph, Q) -> Tuple[RibbonGraph, frozenset]:
    """``(G*, Q*)`` with ``Q*`` the duals of the edges outside ``Q``."""
    inside = set(Q)
    return geometric_dual(g), frozenset(e for e in g.edge_ids if e not in inside)


def _gamma(g: RibbonGraph, F_mask: int, extra: Sequence[str]) -> AbstractGraph:
    """Abstract graph on the components of ``F`` whose edges are ``extra``."""
    c = g.corners
    k, root = c.components(F_mask)
    label = {}
    for r in root:
        label.setdefault(r, len(label))
    edges = []
    for eid in extra:
        a, b = c.end_vertex[g.edge_index[eid]]
        edges.append((label[root[a]], label[root[b]]))
    return AbstractGraph(k, tuple(edges), tuple(extra))


def _side(g: RibbonGraph, Q, diagram: ChordDiagram, x: str, a: str):
    ilo = [e for e in g.edge_ids if diagram.flags[e].internal and diagram.flags[e].live and diagram.flags[e].orientable]
    F = frozenset(Q) - set(ilo)
    fmask = g.mask(F)
    gamma = _gamma(g, fmask, ilo)
    s = metrics_mask(g, fmask).s
    term = Poly.var(a, Fraction(s, 2)) * rank_generating(gamma, x, a)
    return F, gamma, s, term


def butler_terms(
    g: RibbonGraph, order: Optional[Sequence[str]] = None, names=("X", "Y", "A", "B")
) -> List[ButlerTerm]:
    """One term per quasi-tree of a connected cellular graph."""
    X, Y, A, B = names
    if g.corners.k((1 << len(g.edges)) - 1) != 1:
        raise RibbonGraphError("butler_terms needs a connected graph")
    order = _default_order(g, order)
    dual = geometric_dual(g)
    out = []
    for Q in quasi_trees(g):
        cd = chord_diagram(g, Q, order)
        F, gamma, s, t1 = _side(g, Q, cd, X, A)
        Qs = frozenset(e for e in g.edge_ids if e not in Q)
        cds = chord_diagram(dual, Qs, order)
        Fs, gammas, ss, t2 = _side(dual, Qs, cds, Y, B)
        contribution = t1 * t2
        out.append(ButlerTerm(Q, cd, F, gamma, s, Fs, gammas, ss, contribution))
    return out


def krushkal_via_quasitrees(
    g: RibbonGraph, order: Optional[Sequence[str]] = None, names=("X", "Y", "A", "B")
) -> Poly:
    """Krushkal polynomial as a sum over quasi-trees, multiplied over components."""
    if g.has_phantoms:
        raise RibbonGraphError("quasi-tree expansion needs a cellular graph")
    order = _default_order(g, order)
    total = Poly.const(1)
    for comp in connected_components(g):
        sub_order = [e for e in order if e in comp.edge_index]
        part = Poly()
        for t in butler_terms(comp, sub_order, names):
            part = part + t.contribution
        total = total * part
    return total
