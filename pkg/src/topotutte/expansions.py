"""Spanning-subgraph expansions of the topological Tutte polynomials.

Every polynomial here is a sum over edge subsets ``F``; the subset loop runs
over bitmasks and reads ``k(F)`` and ``bc(F)`` off the corner structure of
:mod:`topotutte.ribbon`.

A graph embedded non-cellularly in a surface is encoded as a cellular
*parent* ribbon graph whose extra edges are flagged ``phantom``; the
Krushkal polynomial then sums over subsets of the non-phantom edges while
the complement ``Sigma \\ F`` is read from the dual of the whole parent.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple, Union

from .polynomial import Monomial, Poly, k_var, mono_from_dict, mono_mul
from .ribbon import RibbonGraph, RibbonGraphError, geometric_dual, metrics, set_phantom
from .tutte import cycle_matroid, dual_matroid, from_ribbon, perspective_tutte

MAX_EDGES = 24

WeightSpec = Union[int, Fraction, str, Poly]


class TooManyEdges(RibbonGraphError):
    pass


def check_size(g: RibbonGraph, force: bool = False, cap: int = MAX_EDGES) -> None:
    if len(g.edges) > cap and not force:
        raise TooManyEdges(f"{len(g.edges)} edges exceeds the enumeration cap of {cap} (use force)")


def _as_term(w: WeightSpec) -> Tuple[Fraction, Monomial]:
    p = Poly.coerce(w)
    if not p.is_monomial():
        raise ValueError(f"edge weight must be a monomial, got {p}")
    ((m, c),) = p.terms()
    return Fraction(c), m


def edge_weights(
    g: RibbonGraph,
    weights: Optional[Mapping[str, Tuple[WeightSpec, WeightSpec]]] = None,
    symbolic: bool = False,
) -> List[Tuple[Tuple[Fraction, Monomial], Tuple[Fraction, Monomial]]]:
    """Per-edge ``(x_e, y_e)`` as (coefficient, monomial) pairs.

    Precedence: explicit ``weights`` entry, then ``symbolic`` names
    ``x_<id>``/``y_<id>``, then the weights stored on the edge.
    """
    out = []
    for e in g.edges:
        if weights and e.id in weights:
            wx, wy = weights[e.id]
        elif symbolic:
            wx, wy = f"x_{e.id}", f"y_{e.id}"
        else:
            wx, wy = e.x, e.y
        out.append((_as_term(wx), _as_term(wy)))
    return out


def _weight_product(ws, mask: int, edges: Sequence[int]) -> Tuple[Fraction, Monomial]:
    coeff = Fraction(1)
    mono: Monomial = ()
    for i in edges:
        c, m = ws[i][0] if (mask >> i) & 1 else ws[i][1]
        coeff *= c
        if m:
            mono = mono_mul(mono, m)
    return coeff, mono


def _submasks(full: int):
    sub = full
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & full


def _unit(ws) -> bool:
    return all(w == ((1, ()), (1, ())) for w in ws)


# -- Bollobas-Riordan ---------------------------------------------------------


def bollobas_riordan(
    g: RibbonGraph,
    weights: Optional[Mapping[str, Tuple[WeightSpec, WeightSpec]]] = None,
    symbolic: bool = False,
    names: Tuple[str, str, str] = ("X", "Y", "Z"),
    force: bool = False,
) -> Poly:
    """Doubly weighted Bollobas-Riordan polynomial ``BR_G(X, Y, Z)``."""
    if g.has_phantoms:
        raise RibbonGraphError("BR polynomial needs a cellular graph (phantom edges present)")
    check_size(g, force)
    c = g.corners
    n, v = c.n, c.nv
    X, Y, Z = names
    kG = c.k((1 << n) - 1)
    ws = edge_weights(g, weights, symbolic)
    unit = _unit(ws)
    idx = range(n)
    acc: Dict[Monomial, Fraction] = {}
    for mask in range(1 << n):
        kF = c.k(mask)
        bc = c.bc(mask)
        nF = bin(mask).count("1") - v + kF
        mono = mono_from_dict({X: 2 * (kF - kG), Y: 2 * nF, Z: 2 * (kF - bc + nF)})
        coeff = Fraction(1)
        if not unit:
            coeff, wm = _weight_product(ws, mask, idx)
            mono = mono_mul(mono, wm)
        acc[mono] = acc.get(mono, 0) + coeff
    return Poly(acc)


def signed_weights(g: RibbonGraph, names: Tuple[str, str] = ("X", "Y")) -> Dict[str, Tuple[Poly, Poly]]:
    """Weights ``x_- = (X/Y)^(1/2)``, ``y_- = (Y/X)^(1/2)``; positive edges get 1."""
    X, Y = names
    half = Fraction(1, 2)
    neg = (Poly.monomial(1, {X: half, Y: -half}), Poly.monomial(1, {X: -half, Y: half}))
    out = {}
    for e in g.edges:
        if e.sign is None:
            raise RibbonGraphError(f"edge {e.id} carries no sign")
        out[e.id] = neg if e.sign == "-" else (Poly.const(1), Poly.const(1))
    return out


def signed_br(g: RibbonGraph, force: bool = False) -> Poly:
    """Signed Bollobas-Riordan polynomial (half-integer exponents in X, Y)."""
    return bollobas_riordan(g, weights=signed_weights(g), force=force)


def godsil_royle(g: RibbonGraph, alpha: WeightSpec = "alpha", beta: WeightSpec = "beta", force: bool = False) -> Poly:
    """Signed Tutte polynomial ``R(alpha, beta, x, y)`` via BR with ``Z := 1``.

    Positive edges carry ``(x_e, y_e) = (beta, alpha)``, negative ones
    ``(alpha, beta)``.
    """
    weights = {}
    for e in g.edges:
        if e.sign is None:
            raise RibbonGraphError(f"edge {e.id} carries no sign")
        weights[e.id] = (beta, alpha) if e.sign == "+" else (alpha, beta)
    br = bollobas_riordan(g, weights=weights, names=("x", "y", "Z"), force=force)
    return br.substitute_monomial({"Z": 1})


def dichromatic_br(
    g: RibbonGraph,
    a: str = "a",
    b: Union[str, Mapping[str, WeightSpec], None] = None,
    c: str = "c",
    force: bool = False,
) -> Poly:
    """``Z_G(a, b, c) = sum_F a^k(F) (prod_{e in F} b_e) c^bc(F)``.

    ``b`` may be a single variable name shared by all edges, a mapping
    edge id -> weight, or ``None`` for per-edge variables ``b_<id>``.
    """
    check_size(g, force)
    cs = g.corners
    n = cs.n
    if b is None:
        bw = [_as_term(f"b_{e.id}") for e in g.edges]
    elif isinstance(b, str):
        bw = [_as_term(b)] * n
    else:
        bw = [_as_term(b.get(e.id, 1)) for e in g.edges]
    ws = [(w, (Fraction(1), ())) for w in bw]
    acc: Dict[Monomial, Fraction] = {}
    for mask in range(1 << n):
        coeff, wm = _weight_product(ws, mask, range(n))
        mono = mono_mul(mono_from_dict({a: 2 * cs.k(mask), c: 2 * cs.bc(mask)}), wm)
        acc[mono] = acc.get(mono, 0) + coeff
    return Poly(acc)


# -- arrows -------------------------------------------------------------------


def arrow_reduce(word: Sequence[int]) -> Fraction:
    """Half the length of a cyclic +/- word after cancelling equal neighbours.

    Cancellation is leftmost-first; the outcome does not depend on the order
    (see :func:`arrow_reduction_outcomes`).
    """
    w = list(word)
    while len(w) >= 2:
        L = len(w)
        for i in range(L):
            if w[i] == w[(i + 1) % L]:
                if i + 1 < L:
                    del w[i : i + 2]
                else:
                    w = w[1:-1]
                break
        else:
            break
    return Fraction(len(w), 2)


def arrow_reduction_outcomes(word: Sequence[int]) -> Set[int]:
    """Lengths of all irreducible words reachable by any cancellation order."""
    seen: Dict[Tuple[int, ...], Set[int]] = {}

    def canon(w: Tuple[int, ...]) -> Tuple[int, ...]:
        if not w:
            return w
        return min(w[i:] + w[:i] for i in range(len(w)))

    def rec(w: Tuple[int, ...]) -> Set[int]:
        w = canon(w)
        if w in seen:
            return seen[w]
        L = len(w)
        out: Set[int] = set()
        if L >= 2:
            for i in range(L):
                j = (i + 1) % L
                if w[i] == w[j]:
                    if j:
                        nxt = w[:i] + w[i + 2 :]
                    else:
                        nxt = w[1:-1]
                    out |= rec(nxt)
        if not out:
            out = {L}
        seen[w] = out
        return out

    return rec(tuple(word))


def _arrow_lookup(g: RibbonGraph) -> Dict[Tuple[str, str, int], Tuple[int, ...]]:
    table: Dict[Tuple[str, str, int], List[int]] = {}
    for arc, dirs in g.arrows:
        table.setdefault(tuple(arc), []).extend(dirs)
    return {k: tuple(v) for k, v in table.items()}


def _traverse(arrows: Tuple[int, ...], direction: int) -> List[int]:
    if direction > 0:
        return list(arrows)
    return [-d for d in reversed(arrows)]


def boundary_arc_walks(g: RibbonGraph, mask: int) -> List[List[Tuple[Tuple[str, str, int], int]]]:
    """Each boundary component of ``F`` as the arcs it passes, with traversal direction.

    Long sides of edges outside ``F`` are not on the boundary; vertex arcs
    always are.  Isolated vertices give a single arc ``('v', name, 0)``.
    """
    c = g.corners
    walks = []
    for cyc in c.boundary_cycles(mask):
        walk = []
        for p, q in cyc:
            i = p >> 2
            if (mask >> i) & 1:
                # long side of edge i, oriented from end a to end b
                if (p & 2) == 0:
                    a_corner, direction = p, 1
                else:
                    a_corner, direction = q, -1
                walk.append((("e", g.edges[i].id, a_corner & 1), direction))
            vi, t, direction = c.gap_info[q]
            walk.append((("v", g.vertices[vi].name, t), direction))
        walks.append(walk)
    for vi in c.isolated:
        walks.append([(("v", g.vertices[vi].name, 0), 1)])
    return walks


def boundary_arrow_words(g: RibbonGraph, mask: int) -> List[List[int]]:
    """Arrow words (relative to traversal) of each boundary component of ``F``.

    Arrows on the long sides of edges outside ``F`` are discarded; arrows on
    vertex arcs are always read.
    """
    table = _arrow_lookup(g)
    words = []
    for walk in boundary_arc_walks(g, mask):
        word: List[int] = []
        for arc, direction in walk:
            word += _traverse(table.get(arc, ()), direction)
        words.append(word)
    return words


def arrow_br(
    g: RibbonGraph,
    weights: Optional[Mapping[str, Tuple[WeightSpec, WeightSpec]]] = None,
    symbolic: bool = False,
    force: bool = False,
) -> Poly:
    """Arrow Bollobas-Riordan polynomial with variables ``K[c]`` (``K[0] = 1``)."""
    if g.has_phantoms:
        raise RibbonGraphError("arrow BR polynomial needs a cellular graph")
    check_size(g, force)
    c = g.corners
    n, v = c.n, c.nv
    kG = c.k((1 << n) - 1)
    ws = edge_weights(g, weights, symbolic)
    acc: Dict[Monomial, Fraction] = {}
    for mask in range(1 << n):
        kF = c.k(mask)
        bc = c.bc(mask)
        nF = bin(mask).count("1") - v + kF
        exps = {"X": 2 * (kF - kG), "Y": 2 * nF, "Z": 2 * (kF - bc + nF)}
        for word in boundary_arrow_words(g, mask):
            cval = arrow_reduce(word)
            if cval:
                name = k_var(cval)
                exps[name] = exps.get(name, 0) + 2
        coeff, wm = _weight_product(ws, mask, range(n))
        mono = mono_mul(mono_from_dict(exps), wm)
        acc[mono] = acc.get(mono, 0) + coeff
    return Poly(acc)


# -- Krushkal -----------------------------------------------------------------


def embedded_pair(parent: RibbonGraph, live: Iterable[str]) -> RibbonGraph:
    """Graph made of the ``live`` edges, embedded in the surface of ``parent``."""
    keep = set(live)
    return set_phantom(set_phantom(parent, [e.id for e in parent.edges], False), [e.id for e in parent.edges if e.id not in keep])


def krushkal_terms(g: RibbonGraph, force: bool = False):
    """Yield ``(F, k(F), kappa(F), s(F), s_perp(F))`` for every subset of live edges."""
    check_size(g, force)
    c = g.corners
    n, v = c.n, c.nv
    live = g.live_mask
    k_sigma = c.dual_components(0)
    v_dual = c.num_faces
    for mask in _submasks(live):
        kF = c.k(mask)
        bc = c.bc(mask)
        size = bin(mask).count("1")
        s = kF + (size - v + kF) - bc
        kd = c.dual_components(mask)
        nd = (n - size) - v_dual + kd
        s_perp = kd + nd - bc
        yield mask, kF, kd - k_sigma, s, s_perp


def krushkal(g: RibbonGraph, names=("X", "Y", "A", "B"), force: bool = False) -> Poly:
    """Krushkal polynomial ``K_{G, Sigma}(X, Y, A, B)``; phantom edges are not summed over."""
    X, Y, A, B = names
    kG = g.corners.k(g.live_mask)
    acc: Dict[Monomial, int] = {}
    for _, kF, kappa, s, sp in krushkal_terms(g, force):
        mono = mono_from_dict({X: 2 * (kF - kG), Y: 2 * kappa, A: s, B: sp})
        acc[mono] = acc.get(mono, 0) + 1
    return Poly(acc)


# -- Las Vergnas --------------------------------------------------------------


def las_vergnas_matroids(g: RibbonGraph):
    """``(M, M')`` = (bond matroid of ``G*``, cycle matroid of ``G``) on the edge ids."""
    if g.has_phantoms:
        raise RibbonGraphError("Las Vergnas polynomial needs a cellular graph")
    dual = geometric_dual(g)
    M = dual_matroid(cycle_matroid(from_ribbon(dual)))
    Mp = cycle_matroid(from_ribbon(g))
    return M, Mp


def las_vergnas(g: RibbonGraph, names=("x", "y", "z"), force: bool = False) -> Poly:
    check_size(g, force)
    M, Mp = las_vergnas_matroids(g)
    return perspective_tutte(M, Mp, *names)


def genus_defect(g: RibbonGraph) -> int:
    """``s(G)`` of the whole graph (live and phantom edges)."""
    return metrics(g).s
