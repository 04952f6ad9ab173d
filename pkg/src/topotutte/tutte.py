"""Classical Tutte and dichromatic polynomials, rank oracles, matroid perspectives."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple, Union

from .polynomial import Poly, mono_from_dict

Edge = Tuple[int, int]


@dataclass(frozen=True)
class AbstractGraph:
    """Multigraph on vertices ``0..num_vertices-1``; loops and multi-edges allowed."""

    num_vertices: int
    edges: Tuple[Edge, ...] = ()
    labels: Optional[Tuple[Hashable, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        for u, v in self.edges:
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise ValueError(f"edge ({u}, {v}) out of range for {self.num_vertices} vertices")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != len(self.edges):
                raise ValueError("one label per edge required")

    @property
    def ground(self) -> Tuple[Hashable, ...]:
        return self.labels if self.labels is not None else tuple(range(len(self.edges)))

    def components(self, mask: Optional[int] = None) -> Tuple[int, List[int]]:
        parent = list(range(self.num_vertices))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        k = self.num_vertices
        for i, (u, v) in enumerate(self.edges):
            if mask is not None and not (mask >> i) & 1:
                continue
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                k -= 1
        return k, [find(a) for a in range(self.num_vertices)]

    def k(self, mask: Optional[int] = None) -> int:
        return self.components(mask)[0]


def from_ribbon(g) -> AbstractGraph:
    """Core graph of a ribbon graph, labelled by edge id."""
    idx = g.vertex_index
    edges = tuple(tuple(idx[x] for x in g.endpoints(e.id)) for e in g.edges)
    return AbstractGraph(len(g.vertices), edges, g.edge_ids)


def triangle() -> AbstractGraph:
    return AbstractGraph(3, ((0, 1), (1, 2), (2, 0)))


# -- deletion-contraction --------------------------------------------------


def _canonical(n: int, edges: Sequence[Edge]) -> Tuple[int, Tuple[Edge, ...]]:
    """Deterministic relabelling used as a memo key (not a full isomorphism test)."""
    deg = [0] * n
    nbrs: List[List[int]] = [[] for _ in range(n)]
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        nbrs[u].append(v)
        nbrs[v].append(u)
    used = [a for a in range(n) if deg[a]]
    used.sort(key=lambda a: (deg[a], sorted(deg[b] for b in nbrs[a]), a))
    relabel = {a: i for i, a in enumerate(used)}
    es = tuple(sorted(tuple(sorted((relabel[u], relabel[v]))) for u, v in edges))
    return len(used), es


def _is_bridge(n: int, edges: Sequence[Edge], j: int) -> bool:
    u, v = edges[j]
    adj: Dict[int, List[int]] = {}
    for i, (a, b) in enumerate(edges):
        if i == j:
            continue
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen = {u}
    stack = [u]
    while stack:
        a = stack.pop()
        if a == v:
            return False
        for b in adj.get(a, ()):
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return True


def tutte(g: AbstractGraph, x: str = "x", y: str = "y", memo: Optional[dict] = None) -> Poly:
    """Tutte polynomial by memoised deletion-contraction."""
    X, Y = Poly.var(x), Poly.var(y)
    memo = {} if memo is None else memo

    def rec(n: int, edges: Tuple[Edge, ...]) -> Poly:
        if not edges:
            return Poly.const(1)
        key = _canonical(n, edges)
        if key in memo:
            return memo[key]
        n, edges = key
        # loops first: each contributes a factor y
        loops = sum(1 for u, v in edges if u == v)
        if loops:
            rest = tuple(e for e in edges if e[0] != e[1])
            out = rec(n, rest) * (Y**loops)
        else:
            j = len(edges) - 1
            u, v = edges[j]
            rest = edges[:j]
            contracted = tuple((u if a == v else a, u if b == v else b) for a, b in rest)
            if _is_bridge(n, edges, j):
                out = X * rec(n, contracted)
            else:
                out = rec(n, rest) + rec(n, contracted)
        memo[key] = out
        return out

    return rec(g.num_vertices, g.edges)


def _subset_rank_counts(g: AbstractGraph) -> Counter:
    """Counter of (r(E) - r(F), n(F)) over all edge subsets F."""
    n_e = len(g.edges)
    kE = g.k()
    counts: Counter = Counter()
    for mask in range(1 << n_e):
        kF = g.k(mask)
        size = bin(mask).count("1")
        rF = g.num_vertices - kF
        counts[(kF - kE, size - rF)] += 1
    return counts


def _shifted_power(var: str, e: int) -> Poly:
    """(var - 1)^e expanded."""
    return Poly({mono_from_dict({var: 2 * i}) if i else (): comb(e, i) * (-1) ** (e - i) for i in range(e + 1)})


def tutte_rank_sum(g: AbstractGraph, x: str = "x", y: str = "y") -> Poly:
    """Tutte polynomial from the rank-nullity subset expansion (independent oracle)."""
    total = Poly()
    for (a, b), c in _subset_rank_counts(g).items():
        total = total + _shifted_power(x, a) * _shifted_power(y, b) * c
    return total


def rank_generating(g: AbstractGraph, x: str = "X", y: str = "Y") -> Poly:
    """``sum_F x^(r(E)-r(F)) y^(n(F))``, i.e. ``T(g; x+1, y+1)``."""
    return Poly(
        {mono_from_dict({x: 2 * a, y: 2 * b}): c for (a, b), c in _subset_rank_counts(g).items()}
    )


def dichromatic(g: AbstractGraph, a: str = "a", b: str = "b", multivariable: bool = False) -> Poly:
    """``sum_F a^k(F) b^|F|``; with ``multivariable`` each edge gets its own ``b_<label>``."""
    acc: Dict = {}
    names = [f"{b}_{lab}" for lab in g.ground]
    for mask in range(1 << len(g.edges)):
        exps = {a: 2 * g.k(mask)}
        if multivariable:
            for i, nm in enumerate(names):
                if (mask >> i) & 1:
                    exps[nm] = exps.get(nm, 0) + 2
        else:
            exps[b] = 2 * bin(mask).count("1")
        m = mono_from_dict(exps)
        acc[m] = acc.get(m, 0) + 1
    return Poly(acc)


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def tutte_at_minus_one(g: AbstractGraph) -> int:
    return tutte(g).evaluate({"x": -1, "y": -1})


def delta(g: AbstractGraph) -> int:
    """Number of medial circles from ``|T(g; -1, -1)|``.

    For a connected graph this is ``log2|T(-1,-1)| + 1``; in general each
    component contributes its own circles, so the count is
    ``log2|T(-1,-1)| + k(g)``.
    """
    t = abs(tutte_at_minus_one(g))
    if not is_power_of_two(t):
        raise ArithmeticError(f"|T(-1,-1)| = {t} is not a power of two")
    return t.bit_length() - 1 + g.k()


# -- rank oracles ------------------------------------------------------------


@dataclass(frozen=True)
class RankOracle:
    """Rank function on subsets of an ordered ground set, evaluated on bitmasks."""

    ground: Tuple[Hashable, ...]
    rank_mask: Callable[[int], int] = field(compare=False)

    def mask(self, F: Union[int, Iterable[Hashable]]) -> int:
        if isinstance(F, int):
            return F
        pos = {x: i for i, x in enumerate(self.ground)}
        m = 0
        for x in F:
            if x not in pos:
                raise KeyError(f"{x!r} not in ground set")
            m |= 1 << pos[x]
        return m

    def __call__(self, F: Union[int, Iterable[Hashable]]) -> int:
        return self.rank_mask(self.mask(F))

    @property
    def full(self) -> int:
        return (1 << len(self.ground)) - 1

    def rank(self) -> int:
        return self.rank_mask(self.full)


def cycle_rank(g: AbstractGraph, F: Union[int, Iterable[Hashable], None] = None) -> int:
    oracle = cycle_matroid(g)
    return oracle(oracle.full if F is None else F)


def cycle_matroid(g: AbstractGraph) -> RankOracle:
    return RankOracle(g.ground, lambda m: g.num_vertices - g.k(m))


def dual_matroid(base: RankOracle) -> RankOracle:
    full = base.full
    rE = base.rank_mask(full)
    return RankOracle(base.ground, lambda m: bin(m).count("1") + base.rank_mask(full & ~m) - rE)


def dual_rank(base: RankOracle, F: Union[int, Iterable[Hashable]]) -> int:
    return dual_matroid(base)(F)


def relabel(oracle: RankOracle, ground: Sequence[Hashable]) -> RankOracle:
    """Same rank function read against a permuted ground set."""
    pos = {x: i for i, x in enumerate(oracle.ground)}
    perm = [pos[x] for x in ground]

    def r(m: int) -> int:
        mm = 0
        for i, p in enumerate(perm):
            if (m >> i) & 1:
                mm |= 1 << p
        return oracle.rank_mask(mm)

    return RankOracle(tuple(ground), r)


def perspective_tutte(M: RankOracle, Mp: RankOracle, x: str = "x", y: str = "y", z: str = "z") -> Poly:
    """Three-variable Tutte polynomial of a perspective ``M -> Mp``.

    Raises ``ValueError`` when some subset has ``r_M(F) < r_Mp(F)`` or a
    negative ``z`` exponent (not a perspective).
    """
    if tuple(M.ground) != tuple(Mp.ground):
        Mp = relabel(Mp, M.ground)
    full = M.full
    rME, rPE = M.rank_mask(full), Mp.rank_mask(full)
    counts: Counter = Counter()
    for m in range(full + 1):
        rM, rP = M.rank_mask(m), Mp.rank_mask(m)
        zexp = (rME - rM) - (rPE - rP)
        if rM < rP or zexp < 0:
            raise ValueError(f"not a perspective: subset mask {m} has r_M={rM}, r_M'={rP}")
        counts[(rPE - rP, bin(m).count("1") - rM, zexp)] += 1
    total = Poly()
    for (a, b, c), cnt in counts.items():
        total = total + _shifted_power(x, a) * _shifted_power(y, b) * Poly.var(z, c) * cnt
    return total
