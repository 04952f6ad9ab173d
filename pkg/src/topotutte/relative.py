"""Relative plane graphs: medial circles, the relative Tutte polynomial,
relative duality, and the passage to ribbon graphs.

A relative plane graph is a genus-0 ribbon graph some of whose edges are
flagged ``zero`` (the set ``H``); the other edges are *regular* and carry
weights ``(x_e, y_e)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .expansions import bollobas_riordan, check_size, edge_weights
from .polynomial import Monomial, Poly, evaluate, mono_from_dict, mono_mul
from .ribbon import (
    Edge,
    RibbonGraph,
    RibbonGraphError,
    Vertex,
    delete_edges,
    geometric_dual,
    metrics,
    normalize_orientation,
)
from .tutte import AbstractGraph, is_power_of_two, tutte

# (vertex name, gap index, +1 if counterclockwise)
MedialArc = Tuple[str, int, int]


@dataclass(frozen=True)
class RelativeGraph:
    """Plane ribbon graph whose ``zero`` edges form ``H``."""

    graph: RibbonGraph

    def __post_init__(self):
        m = metrics(self.graph)
        if m.s != 0 or not m.orientable:
            raise RibbonGraphError("a relative graph must be plane (s = 0, orientable)")
        if self.graph.has_phantoms:
            raise RibbonGraphError("relative graphs cannot carry phantom edges")
        object.__setattr__(self, "graph", normalize_orientation(self.graph))

    @classmethod
    def from_graph(cls, g: RibbonGraph, H: Iterable[str]) -> "RelativeGraph":
        zero = set(H)
        for eid in zero:
            g.edge(eid)
        return cls(RibbonGraph(g.vertices, tuple(replace(e, zero=e.id in zero) for e in g.edges)))

    @property
    def H(self) -> frozenset:
        return frozenset(e.id for e in self.graph.edges if e.zero)

    @property
    def regular(self) -> Tuple[str, ...]:
        return tuple(e.id for e in self.graph.edges if not e.zero)


# -- medial circles -------------------------------------------------------------


def medial_circles(g: RibbonGraph) -> List[List[MedialArc]]:
    """Straight-ahead circles of the medial graph.

    A circle runs along a free arc of a vertex to the next edge, crosses
    that edge to the diagonally opposite corner and continues.  Every vertex
    without edges contributes one free circle.
    """
    c = g.corners
    seen = bytearray(4 * c.n)
    circles = []
    for s in range(4 * c.n):
        if seen[s]:
            continue
        circle = []
        p = s
        while True:
            q = c.gap[p]
            seen[p] = seen[q] = 1
            vi, t, d = c.gap_info[p]
            circle.append((g.vertices[vi].name, t, d))
            # diagonal corner across the edge of q
            p = c.long[q] ^ 1
            if p == s:
                break
        circles.append(circle)
    for vi in c.isolated:
        circles.append([(g.vertices[vi].name, 0, 1)])
    return circles


def delta_medial(g: RibbonGraph) -> int:
    return len(medial_circles(g))


def delta_tutte(g: AbstractGraph, memo: Optional[dict] = None) -> int:
    """``log2|T(g; -1, -1)| + k(g)`` (one circle per component of an edgeless part)."""
    t = abs(evaluate(tutte(g, memo=memo), {"x": -1, "y": -1}))
    if not is_power_of_two(t):
        raise ArithmeticError(f"|T(-1,-1)| = {t} is not a power of two")
    return t.bit_length() - 1 + g.k()


# -- relative Tutte polynomial --------------------------------------------------


def h_sub_f(rel: RelativeGraph, F: Iterable[str]) -> AbstractGraph:
    """``H_F``: contract the edges of ``F`` inside ``F u H`` (loops of ``F`` are deleted)."""
    g = rel.graph
    c = g.corners
    fmask = g.mask(F)
    if any(g.edges[i].zero for i in range(c.n) if (fmask >> i) & 1):
        raise RibbonGraphError("F must consist of regular edges")
    _, root = c.components(fmask)
    label: Dict[int, int] = {}
    for r in root:
        label.setdefault(r, len(label))
    edges = []
    ids = []
    for i, e in enumerate(g.edges):
        if e.zero:
            a, b = c.end_vertex[i]
            edges.append((label[root[a]], label[root[b]]))
            ids.append(e.id)
    return AbstractGraph(len(label), tuple(edges), tuple(ids))


def psi(h: AbstractGraph, names=("d", "w"), memo: Optional[dict] = None) -> Poly:
    """``d^(delta - k) w^(v - k)``."""
    d, w = names
    k = h.k()
    return Poly.monomial(1, {d: delta_tutte(h, memo) - k, w: h.num_vertices - k})


def relative_tutte(
    rel: RelativeGraph,
    symbolic: bool = False,
    names=("X", "Y", "d", "w"),
    force: bool = False,
) -> Poly:
    """``T_{C,H}(X, Y, psi)`` summed over subsets of regular edges."""
    X, Y, d, w = names
    g = rel.graph
    check_size(g, force)
    c = g.corners
    n, v = c.n, c.nv
    ws = edge_weights(g, symbolic=symbolic)
    hmask = sum(1 << i for i, e in enumerate(g.edges) if e.zero)
    regular = [i for i in range(n) if not (hmask >> i) & 1]
    kC = c.k((1 << n) - 1)
    memo: dict = {}
    psi_cache: Dict[tuple, Monomial] = {}
    acc: Dict[Monomial, Fraction] = {}
    for bits in range(1 << len(regular)):
        fmask = 0
        for j, i in enumerate(regular):
            if (bits >> j) & 1:
                fmask |= 1 << i
        kFH = c.k(fmask | hmask)
        kF = c.k(fmask)
        nF = bin(fmask).count("1") - v + kF
        h = h_sub_f(rel, g.subset(fmask))
        key = (h.num_vertices, tuple(sorted(tuple(sorted(e)) for e in h.edges)))
        if key not in psi_cache:
            ((m, _),) = psi(h, (d, w), memo).terms()
            psi_cache[key] = m
        coeff = Fraction(1)
        mono = mono_mul(mono_from_dict({X: 2 * (kFH - kC), Y: 2 * nF}), psi_cache[key])
        for i in regular:
            cf, wm = ws[i][0] if (fmask >> i) & 1 else ws[i][1]
            coeff *= cf
            mono = mono_mul(mono, wm)
        acc[mono] = acc.get(mono, 0) + coeff
    return Poly(acc)


def relative_dual(rel: RelativeGraph) -> RelativeGraph:
    """Plane dual with zero flags carried along ``e <-> e*`` and weights swapped."""
    dual = geometric_dual(rel.graph)
    edges = tuple(e if e.zero else replace(e, x=e.y, y=e.x) for e in dual.edges)
    return RelativeGraph(RibbonGraph(dual.vertices, edges))


def duality_exponents(rel: RelativeGraph) -> Tuple[Fraction, Fraction]:
    """``(a(C, H), b(C))``."""
    m = metrics(rel.graph)
    return Fraction(len(rel.regular) - m.v, 2) + m.k, Fraction(m.v, 2)


# -- relative plane graph -> ribbon graph -----------------------------------------


def to_ribbon(rel: RelativeGraph) -> RibbonGraph:
    """Ribbon graph whose vertices are the medial circles of ``(V, H)``.

    Each regular half-edge sits in a free arc of the ``H``-rotation at its
    vertex; the circle through that arc lists the half-edges in the order
    it meets them.  A ribbon is twisted when exactly one of its two ends is
    met against the counterclockwise orientation of its original vertex.
    """
    g = rel.graph
    regular = set(rel.regular)
    hg = delete_edges(g, regular)
    # regular half-edges in each H-gap, counterclockwise
    slots: Dict[Tuple[str, int], List[str]] = {}
    free: Dict[str, List[str]] = {}
    half_is_regular = {}
    for e in g.edges:
        half_is_regular[e.half_a] = half_is_regular[e.half_b] = e.id in regular
    for v in g.vertices:
        rot = v.rotation
        hpos = [t for t, h in enumerate(rot) if not half_is_regular[h]]
        if not hpos:
            free[v.name] = list(rot)
            continue
        d = len(rot)
        start = hpos[0]
        gap = -1
        for off in range(d):
            h = rot[(start + off) % d]
            if not half_is_regular[h]:
                gap += 1
            else:
                slots.setdefault((v.name, gap), []).append(h)
    verts: List[Vertex] = []
    aligned: Dict[str, bool] = {}
    taken = set()
    counter = 0

    def fresh() -> str:
        nonlocal counter
        while f"c{counter}" in taken:
            counter += 1
        name = f"c{counter}"
        taken.add(name)
        return name

    for circle in medial_circles(hg):
        rot: List[str] = []
        for vname, t, d in circle:
            if vname in free:
                halves = free[vname]
                rot += halves
                aligned.update((h, True) for h in halves)
                continue
            halves = slots.get((vname, t), [])
            rot += halves if d > 0 else list(reversed(halves))
            aligned.update((h, d > 0) for h in halves)
        verts.append(Vertex(fresh(), tuple(rot)))
    edges = tuple(
        Edge(e.id, e.half_a, e.half_b, twist=aligned[e.half_a] != aligned[e.half_b], x=e.x, y=e.y)
        for e in g.edges
        if e.id in regular
    )
    return RibbonGraph(tuple(verts), edges)


# -- verification ---------------------------------------------------------------------


def random_rational(rng: random.Random, lo: int = 1, hi: int = 97) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(lo, hi))


def _weight_symbols(polys: Sequence[Poly], reserved: Iterable[str]) -> List[str]:
    names = set()
    for p in polys:
        names.update(p.variables())
    return sorted(names - set(reserved))


@dataclass
class PointCheck:
    point: Dict[str, Fraction]
    lhs: Fraction
    rhs: Fraction

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class IdentityReport:
    name: str
    checks: List[PointCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def first_failure(self) -> Optional[PointCheck]:
        return next((c for c in self.checks if not c.ok), None)

    def summary(self) -> str:
        bad = self.first_failure
        if bad is None:
            return f"{self.name}: ok ({len(self.checks)} points)"
        pt = ", ".join(f"{k}={v}" for k, v in bad.point.items())
        return f"{self.name}: FAILED at {pt}: lhs={bad.lhs} rhs={bad.rhs}"


def buch_exponents(rel: RelativeGraph, G: RibbonGraph) -> Tuple[Fraction, Fraction]:
    """``(alpha, beta)`` for the relative Tutte / Bollobas-Riordan identity."""
    mc, mg = metrics(rel.graph), metrics(G)
    beta = -Fraction(mg.v - mc.v, 2)
    return mc.k - mg.k - beta, beta


def verify_buch(rel: RelativeGraph, points: int = 20, seed: int = 0) -> IdentityReport:
    """Check ``X^a Y^b T_{C,H} = BR_G(X, Y, 1/sqrt(XY))`` with ``w = sqrt(X/Y)``, ``d = sqrt(XY)``."""
    rng = random.Random(seed)
    G = to_ribbon(rel)
    T = relative_tutte(rel)
    BR = bollobas_riordan(G)
    alpha, beta = buch_exponents(rel, G)
    lhs_poly = Poly.monomial(1, {"X": alpha, "Y": beta}) * T
    extra = _weight_symbols([T, BR], ["X", "Y", "Z", "d", "w"])
    report = IdentityReport("relative Tutte vs Bollobas-Riordan")
    for _ in range(points):
        p, q = random_rational(rng), random_rational(rng)
        pt = {"X": p * p, "Y": q * q, "d": p * q, "w": p / q, "Z": 1 / (p * q)}
        pt.update({s: random_rational(rng) for s in extra})
        roots = {"X": p, "Y": q}
        lhs = evaluate(lhs_poly, pt, roots)
        rhs = evaluate(BR, pt, roots)
        report.checks.append(PointCheck({"X": pt["X"], "Y": pt["Y"], **{s: pt[s] for s in extra}}, lhs, rhs))
    return report


def verify_relative_duality(rel: RelativeGraph, points: int = 20, seed: int = 0) -> IdentityReport:
    """``X^a Y^b T_{C,H}(X,Y) = Y^a* X^b* T_{C*,H*}(Y,X)`` with ``w = sqrt(X/Y)``, ``d = sqrt(XY)``.

    The substitution is applied to each polynomial in its own arguments, so
    the right-hand side uses ``w = sqrt(Y/X)``; ``d`` is symmetric.
    """
    rng = random.Random(seed)
    dual = relative_dual(rel)
    T = relative_tutte(rel)
    Td = relative_tutte(dual)
    a, b = duality_exponents(rel)
    ad, bd = duality_exponents(dual)
    extra = _weight_symbols([T, Td], ["X", "Y", "d", "w"])
    report = IdentityReport("relative duality")
    for _ in range(points):
        p, q = random_rational(rng), random_rational(rng)
        X, Y = p * p, q * q
        wts = {s: random_rational(rng) for s in extra}
        lhs_pt = {"X": X, "Y": Y, "d": p * q, "w": p / q, **wts}
        rhs_pt = {"X": Y, "Y": X, "d": p * q, "w": q / p, **wts}
        lhs = evaluate(Poly.monomial(1, {"X": a, "Y": b}) * T, lhs_pt, {"X": p, "Y": q})
        # T_{C*,H*} is evaluated at (Y, X); its prefactor is in the original X, Y
        pref = evaluate(Poly.monomial(1, {"Y": ad, "X": bd}), {"X": X, "Y": Y}, {"X": p, "Y": q})
        rhs = pref * evaluate(Td, rhs_pt)
        report.checks.append(PointCheck({"X": X, "Y": Y, **wts}, lhs, rhs))
    return report
