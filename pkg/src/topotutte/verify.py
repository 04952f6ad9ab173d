"""Identity harness: recurrences, specializations, dualities, quasi-trees, relative graphs.

Every suite takes a graph and a :class:`VerifyConfig` and returns a list of
:class:`Outcome`.  Symbolic identities are compared exactly; the others are
compared at seeded random rational points.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional

from .expansions import bollobas_riordan, krushkal, las_vergnas, las_vergnas_matroids
from .polynomial import Poly, evaluate
from .quasitree import krushkal_via_quasitrees
from .relative import (
    IdentityReport,
    PointCheck,
    RelativeGraph,
    random_rational,
    relative_dual,
    relative_tutte,
    verify_buch,
    verify_relative_duality,
)
from .ribbon import (
    EdgeClass,
    RibbonGraph,
    RibbonGraphError,
    classify_edge,
    connected_components,
    contract,
    delete,
    geometric_dual,
    isomorphic,
    is_separable_loop,
    metrics,
    set_phantom,
)
from .tutte import from_ribbon, tutte


@dataclass(frozen=True)
class VerifyConfig:
    points: int = 20
    seed: int = 0
    orders: int = 3
    force: bool = False


@dataclass
class Outcome:
    suite: str
    identity: str
    ok: bool
    detail: str = ""
    skipped: bool = False

    def line(self) -> str:
        tag = "skip" if self.skipped else ("ok" if self.ok else "FAIL")
        return f"[{tag}] {self.suite}: {self.identity}" + (f" ({self.detail})" if self.detail and self.ok else "")


def _dump(g: RibbonGraph) -> str:
    return str(g).rstrip("\n")


def _exact(suite: str, identity: str, lhs: Poly, rhs: Poly, g: RibbonGraph, where: str = "") -> Outcome:
    if lhs == rhs:
        return Outcome(suite, identity, True)
    msg = f"{where}lhs = {lhs}\nrhs = {rhs}\ngraph:\n{_dump(g)}"
    return Outcome(suite, identity, False, msg)


def _from_report(suite: str, rep: IdentityReport, g: RibbonGraph) -> Outcome:
    if rep.passed:
        return Outcome(suite, rep.name, True, f"{len(rep.checks)} points")
    return Outcome(suite, rep.name, False, f"{rep.summary()}\ngraph:\n{_dump(g)}")


def _skip(suite: str, identity: str, why: str) -> Outcome:
    return Outcome(suite, identity, True, why, skipped=True)


# -- edge classes -------------------------------------------------------------


SEPARABLE_LOOP = "separable_loop"


def edge_classes(g: RibbonGraph, eid: str) -> List[str]:
    """All recurrence classes of an edge; a loop may also be separable."""
    out = [classify_edge(g, eid).value]
    if is_separable_loop(g, eid):
        out.append(SEPARABLE_LOOP)
    return out


def edge_class_counts(graphs: Iterable[RibbonGraph]) -> Counter:
    counts: Counter = Counter()
    for g in graphs:
        for e in g.edges:
            counts.update(edge_classes(g, e.id))
    return counts


# -- recurrences --------------------------------------------------------------


def br_recurrence(g: RibbonGraph, cfg: VerifyConfig = VerifyConfig()) -> List[Outcome]:
    """Contraction-deletion for BR on each edge, with symbolic edge weights."""
    suite = "br-rec"
    if g.has_phantoms:
        return [_skip(suite, "BR recurrence", "graph has phantom edges")]
    X, Y, Z = Poly.var("X"), Poly.var("Y"), Poly.var("Z")
    br = bollobas_riordan(g, symbolic=True, force=cfg.force)
    out = []
    for e in g.edges:
        cls = classify_edge(g, e.id)
        label = f"edge {e.id} ({cls.value})"
        if cls == EdgeClass.NONTRIVIAL_ORIENTABLE_LOOP:
            out.append(_skip(suite, label, "no recurrence for this class"))
            continue
        x, y = Poly.var(f"x_{e.id}"), Poly.var(f"y_{e.id}")
        c = bollobas_riordan(contract(g, e.id), symbolic=True, force=cfg.force)
        d = bollobas_riordan(delete(g, e.id), symbolic=True, force=cfg.force)
        if cls == EdgeClass.ORDINARY:
            rhs = x * c + y * d
        elif cls == EdgeClass.BRIDGE:
            rhs = x * c + y * X * d
        elif cls == EdgeClass.TRIVIAL_ORIENTABLE_LOOP:
            rhs = x * Y * c + y * d
        else:
            rhs = x * Y * Z * c + y * d
        out.append(_exact(suite, label, br, rhs, g, f"edge {e.id}\n"))
    comps = connected_components(g)
    if len(comps) > 1:
        prod = Poly.const(1)
        for h in comps:
            prod = prod * bollobas_riordan(h, symbolic=True, force=cfg.force)
        out.append(_exact(suite, "BR multiplicative over components", br, prod, g))
    return out


def _live_bridge(g: RibbonGraph, eid: str) -> bool:
    c, live = g.corners, g.live_mask
    return c.k(live & ~(1 << g.edge_index[eid])) > c.k(live)


def krushkal_recurrence(g: RibbonGraph, cfg: VerifyConfig = VerifyConfig()) -> List[Outcome]:
    """Contraction-deletion for K on each live edge; deletion keeps the edge as a phantom."""
    suite = "krushkal-rec"
    X, Y = Poly.var("X"), Poly.var("Y")
    K = krushkal(g, force=cfg.force)
    out = []
    for e in g.edges:
        if e.phantom:
            continue
        if g.is_loop(e.id):
            if not is_separable_loop(g, e.id):
                out.append(_skip(suite, f"edge {e.id} (non-separable loop)", "no recurrence for this class"))
                continue
            label = f"edge {e.id} ({SEPARABLE_LOOP})"
            rhs = (1 + Y) * krushkal(set_phantom(g, [e.id]), force=cfg.force)
        elif _live_bridge(g, e.id):
            label = f"edge {e.id} (bridge)"
            rhs = (1 + X) * krushkal(contract(g, e.id), force=cfg.force)
        else:
            label = f"edge {e.id} (ordinary)"
            rhs = krushkal(contract(g, e.id), force=cfg.force) + krushkal(set_phantom(g, [e.id]), force=cfg.force)
        out.append(_exact(suite, label, K, rhs, g, f"edge {e.id}\n"))
    return out


# -- specializations ----------------------------------------------------------


def _points(cfg: VerifyConfig, salt: int):
    return random.Random(cfg.seed * 1_000_003 + salt)


def _half_power(base: Fraction, root: Fraction, s: int) -> Fraction:
    """``base^(s/2)`` given ``root^2 == base``."""
    return root**s


def specializations(g: RibbonGraph, cfg: VerifyConfig = VerifyConfig()) -> List[Outcome]:
    """BR, Tutte, Krushkal and Las Vergnas specializations."""
    suite = "specializations"
    if g.has_phantoms:
        return [_skip(suite, "specializations", "graph has phantom edges")]
    br = bollobas_riordan(g, force=cfg.force)
    K = krushkal(g, force=cfg.force)
    T = tutte(from_ribbon(g))
    s = metrics(g).s
    out = []

    # BR = Y^(s/2) K(X, Y, Y Z^2, 1/Y), exactly
    Yv = Poly.var("Y")
    sub = K.substitute_monomial({"A": Yv * Poly.var("Z") ** 2, "B": Yv.inverse()})
    out.append(_exact(suite, "BR = Y^(s/2) K(X, Y, Y Z^2, 1/Y)", br, Poly.var("Y", Fraction(s, 2)) * sub, g))

    rng = _points(cfg, 1)
    checks: Dict[str, IdentityReport] = {
        "tutte_br": IdentityReport("BR(x-1, y-1, 1) = T(x, y)"),
        "tutte_k": IdentityReport("T = (y-1)^(s/2) K(x-1, y-1, y-1, 1/(y-1))"),
    }
    for _ in range(cfg.points):
        x = random_rational(rng) + 1
        q = random_rational(rng)
        y = 1 + q * q
        t = evaluate(T, {"x": x, "y": y})
        lhs = evaluate(br, {"X": x - 1, "Y": y - 1, "Z": 1})
        checks["tutte_br"].checks.append(_pc({"x": x, "y": y}, lhs, t))
        k = evaluate(K, {"X": x - 1, "Y": y - 1, "A": y - 1, "B": 1 / (y - 1)}, {"A": q, "B": 1 / q})
        checks["tutte_k"].checks.append(_pc({"x": x, "y": y}, t, _half_power(y - 1, q, s) * k))
    out += [_from_report(suite, r, g) for r in checks.values()]
    out += las_vergnas_checks(g, cfg, K=K, T=T)
    return out


def _pc(point, lhs, rhs) -> PointCheck:
    return PointCheck({k: Fraction(v) for k, v in point.items()}, Fraction(lhs), Fraction(rhs))


def las_vergnas_checks(
    g: RibbonGraph, cfg: VerifyConfig = VerifyConfig(), K: Optional[Poly] = None, T: Optional[Poly] = None
) -> List[Outcome]:
    """``LV = z^(s/2) K(x-1, y-1, 1/z, z)`` and recovery of ``T`` at ``z = 1/(y-1)``."""
    suite = "specializations"
    K = krushkal(g, force=cfg.force) if K is None else K
    T = tutte(from_ribbon(g)) if T is None else T
    LV = las_vergnas(g, force=cfg.force)
    s = metrics(g).s
    M, Mp = las_vergnas_matroids(g)
    shift = M.rank_mask(M.full) - Mp.rank_mask(Mp.full)
    rng = _points(cfg, 2)
    via_k = IdentityReport("LV(x, y, z) = z^(s/2) K(x-1, y-1, 1/z, z)")
    recover = IdentityReport("T(x, y) = (y-1)^(r(M)-r(M')) LV(x, y, 1/(y-1))")
    for _ in range(cfg.points):
        x, y = random_rational(rng) + 1, random_rational(rng) + 1
        q = random_rational(rng)
        z = q * q
        lv = evaluate(LV, {"x": x, "y": y, "z": z})
        k = evaluate(K, {"X": x - 1, "Y": y - 1, "A": 1 / z, "B": z}, {"A": 1 / q, "B": q})
        via_k.checks.append(_pc({"x": x, "y": y, "z": z}, lv, _half_power(z, q, s) * k))
        t = evaluate(T, {"x": x, "y": y})
        lv_t = evaluate(LV, {"x": x, "y": y, "z": 1 / (y - 1)})
        recover.checks.append(_pc({"x": x, "y": y}, t, (y - 1) ** shift * lv_t))
    return [_from_report(suite, via_k, g), _from_report(suite, recover, g)]


# -- dualities ----------------------------------------------------------------


def as_relative(g: RibbonGraph) -> Optional[RelativeGraph]:
    """The graph as a relative plane graph, or None when it is not one."""
    try:
        return RelativeGraph(g)
    except RibbonGraphError:
        return None


def duality(g: RibbonGraph, cfg: VerifyConfig = VerifyConfig()) -> List[Outcome]:
    suite = "duality"
    if g.has_phantoms:
        return [_skip(suite, "duality", "graph has phantom edges")]
    gd = geometric_dual(g)
    out = [
        _exact(
            suite,
            "K_G(X, Y, A, B) = K_G*(Y, X, B, A)",
            krushkal(g, force=cfg.force),
            krushkal(gd, names=("Y", "X", "B", "A"), force=cfg.force),
            g,
        )
    ]
    m, md = metrics(g), metrics(gd)
    same = (m.e, m.k, m.s, m.orientable) == (md.e, md.k, md.s, md.orientable) and (m.v, m.bc) == (md.bc, md.v)
    out.append(Outcome(suite, "dual swaps v and bc, keeps e, k, s", same, "" if same else f"{m} vs {md}\n{_dump(g)}"))
    back = isomorphic(geometric_dual(gd), g)
    out.append(Outcome(suite, "G** is isomorphic to G", back, "" if back else _dump(g)))
    rel = as_relative(g)
    if rel is None:
        out.append(_skip(suite, "relative duality", "not a plane orientable graph"))
        return out
    out.append(_from_report(suite, verify_relative_duality(rel, cfg.points, cfg.seed), g))
    twice = relative_dual(relative_dual(rel))
    ok = relative_tutte(twice, symbolic=True) == relative_tutte(rel, symbolic=True) and isomorphic(
        twice.graph, rel.graph, labelled=True
    )
    out.append(Outcome(suite, "relative dual is an involution", ok, "" if ok else _dump(g)))
    return out


# -- quasi-trees and relative graphs -------------------------------------------


def butler(g: RibbonGraph, cfg: VerifyConfig = VerifyConfig()) -> List[Outcome]:
    """Quasi-tree expansion against the subset expansion under several edge orders."""
    suite = "butler"
    if g.has_phantoms:
        return [_skip(suite, "quasi-tree expansion", "graph has phantom edges")]
    K = krushkal(g, force=cfg.force)
    rng = _points(cfg, 3)
    ids = list(g.edge_ids)
    orders = [tuple(ids)]
    for _ in range(max(cfg.orders - 1, 0)):
        perm = ids[:]
        rng.shuffle(perm)
        orders.append(tuple(perm))
    out = []
    for order in orders:
        got = krushkal_via_quasitrees(g, order=order)
        out.append(_exact(suite, f"quasi-tree expansion, order {' '.join(order)}", got, K, g))
    return out


def buch(g: RibbonGraph, cfg: VerifyConfig = VerifyConfig()) -> List[Outcome]:
    suite = "buch"
    rel = as_relative(g)
    if rel is None:
        return [_skip(suite, "relative Tutte vs Bollobas-Riordan", "not a plane orientable graph")]
    return [_from_report(suite, verify_buch(rel, cfg.points, cfg.seed), g)]


SUITES: Dict[str, Callable[[RibbonGraph, VerifyConfig], List[Outcome]]] = {
    "br-rec": br_recurrence,
    "krushkal-rec": krushkal_recurrence,
    "specializations": specializations,
    "duality": duality,
    "butler": butler,
    "buch": buch,
}


def run_suite(name: str, g: RibbonGraph, cfg: VerifyConfig = VerifyConfig()) -> List[Outcome]:
    if name == "all":
        return [o for fn in SUITES.values() for o in fn(g, cfg)]
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}") from None
    return fn(g, cfg)
