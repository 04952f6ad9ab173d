"""Search for the four-edge non-orientable example used by the quasi-tree tests.

Only its pictures are available, so we enumerate two-vertex ribbon graphs
with edges 2, 3 joining the vertices and edges 1, 4 placed anywhere, and keep
those whose quasi-trees, chord flags, per-quasi-tree Butler data and Krushkal
polynomial all match the published tables.

    python3 scripts/search_nonorientable_example.py [--all]
"""

import argparse
import itertools

from topotutte.expansions import krushkal
from topotutte.polynomial import Poly
from topotutte.quasitree import butler_terms, chord_diagram, quasi_trees
from topotutte.ribbon import Edge, RibbonGraph, Vertex, canonical_form

TARGET = Poly.parse("(X+1)*(Y+1)*B + (Y+1)*B + (Y+1)*A^(1/2)*B^(1/2) + (X+A+2)*(Y+1)")
QTREES = [{"2"}, {"3"}, {"2", "3"}, {"2", "3", "4"}]
# per quasi-tree: (s(F(Q)), T_Q, s(F(Q*)), T_Q*)
TABLE = [
    (0, "X + 1", 2, "Y + 1"),
    (0, "1", 2, "Y + 1"),
    (1, "1", 1, "Y + 1"),
    (0, "X + A + 2", 0, "Y + 1"),
]


def cyclic_orders(items):
    items = list(items)
    if len(items) <= 1:
        yield tuple(items)
        return
    first = items[0]
    for perm in itertools.permutations(items[1:]):
        yield (first,) + perm


def candidates():
    for end1, end4 in itertools.product(["uu", "vv", "uv"], repeat=2):
        halves = {"u": ["2a", "3a"], "v": ["2b", "3b"]}
        halves[end1[0]].append("1a")
        halves[end1[1]].append("1b")
        halves[end4[0]].append("4a")
        halves[end4[1]].append("4b")
        for ru in cyclic_orders(halves["u"]):
            for rv in cyclic_orders(halves["v"]):
                for tw in itertools.product([False, True], repeat=4):
                    edges = tuple(Edge(str(i), f"{i}a", f"{i}b", twist=t) for i, t in zip(range(1, 5), tw))
                    yield RibbonGraph((Vertex("u", ru), Vertex("v", rv)), edges)


def matches(g: RibbonGraph) -> bool:
    if [set(q) for q in quasi_trees(g)] != QTREES:
        return False
    if krushkal(g) != TARGET:
        return False
    f234 = chord_diagram(g, {"2", "3", "4"}).flags
    if not (f234["1"].live and not f234["1"].internal and f234["2"].live and f234["3"].live and not f234["4"].live):
        return False
    f23 = chord_diagram(g, {"2", "3"}).flags
    if [f23[e].orientable for e in "1234"] != [True, False, False, False]:
        return False
    for Q in QTREES:
        if not chord_diagram(g, Q).flags["1"].live:
            return False
    for term, (s, tq, ss, tqs) in zip(butler_terms(g), TABLE):
        from topotutte.tutte import rank_generating

        if term.s_F != s or term.s_dual_F != ss:
            return False
        if rank_generating(term.gamma, "X", "A") != Poly.parse(tq):
            return False
        if rank_generating(term.dual_gamma, "Y", "B") != Poly.parse(tqs):
            return False
    return True


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--all", action="store_true", help="list every match, not just the first")
    args = ap.parse_args()
    seen = {}
    for g in candidates():
        if matches(g):
            key = canonical_form(g, labelled=True)
            if key not in seen:
                seen[key] = g
                if not args.all:
                    break
    print(f"{len(seen)} matching graph(s) up to labelled isomorphism")
    for g in seen.values():
        print(g)


if __name__ == "__main__":
    main()
