"""Search for an arrow structure reproducing the published arrow-BR example.

The example graph has two vertices, a twisted loop e1 and two parallel
edges e2, e3; its arrow placement is only drawn.  We try every rotation of
that shape that reproduces the subset table and every placement of up to
``--max-arrows`` single arrows on distinct arcs, keeping placements whose
per-subset K-monomials match the table.

    python3 scripts/search_arrow_example.py [--max-arrows 8] [--all]
"""

import argparse
import itertools

from topotutte.expansions import arrow_br, arrow_reduce, bollobas_riordan, boundary_arc_walks
from topotutte.polynomial import Poly, k_var
from topotutte.ribbon import Edge, RibbonGraph, Vertex, metrics

BR_TARGET = Poly.parse("Y + 2 + X + Y^2*Z^2 + 2*Y*Z + X*Y*Z")
ARROW_TARGET = Poly.parse(
    "y_1*x_2*x_3*Y*K[1]^2 + y_1*y_2*x_3*K[1] + y_1*x_2*y_3*K[1] + y_1*y_2*y_3*X*K[1/2]^2"
    " + x_1*x_2*x_3*Y^2*Z^2*K[1] + x_1*y_2*x_3*Y*Z*K[1] + x_1*x_2*y_3*Y*Z + x_1*y_2*y_3*X*Y*Z*K[1/2]^2"
)
# subset -> ((k, r, n, bc), K-monomial)
TABLE = {
    frozenset({"2", "3"}): ((1, 1, 1, 2), "K[1]^2"),
    frozenset({"3"}): ((1, 1, 0, 1), "K[1]"),
    frozenset({"2"}): ((1, 1, 0, 1), "K[1]"),
    frozenset(): ((2, 0, 0, 2), "K[1/2]^2"),
    frozenset({"1", "2", "3"}): ((1, 1, 2, 1), "K[1]"),
    frozenset({"1", "3"}): ((1, 1, 1, 1), "K[1]"),
    frozenset({"1", "2"}): ((1, 1, 1, 1), "1"),
    frozenset({"1"}): ((2, 0, 1, 2), "K[1/2]^2"),
}


def shapes():
    for rest in itertools.permutations(["1b", "2a", "3a"]):
        rot_u = ("1a",) + rest
        edges = (Edge("1", "1a", "1b", twist=True), Edge("2", "2a", "2b"), Edge("3", "3a", "3b"))
        for rot_v in (("2b", "3b"),):
            g = RibbonGraph((Vertex("u", rot_u), Vertex("v", rot_v)), edges)
            if bollobas_riordan(g) != BR_TARGET:
                continue
            ok = all(
                (lambda m: (m.k, m.r, m.n, m.bc))(metrics(g, F)) == row for F, (row, _) in TABLE.items()
            )
            if ok:
                yield g


def arcs(g: RibbonGraph):
    out = []
    for v in g.vertices:
        out += [("v", v.name, t) for t in range(max(len(v.rotation), 1))]
    for e in g.edges:
        out += [("e", e.id, 0), ("e", e.id, 1)]
    return out


def _word(walk, table):
    word = []
    for arc, d in walk:
        seq = table.get(arc, ())
        word += list(seq) if d > 0 else [-x for x in reversed(seq)]
    return word


def search(g: RibbonGraph, max_arrows: int, find_all: bool):
    arc_list = arcs(g)
    walks = {F: boundary_arc_walks(g, g.mask(F)) for F in TABLE}
    want = {F: Poly.parse(m) for F, (_, m) in TABLE.items()}
    found = []
    for count in range(max_arrows + 1):
        for chosen in itertools.combinations(arc_list, count):
            for dirs in itertools.product((1, -1), repeat=count):
                table = {arc: (d,) for arc, d in zip(chosen, dirs)}
                good = True
                for F, ws in walks.items():
                    mono = Poly.const(1)
                    for walk in ws:
                        c = arrow_reduce(_word(walk, table))
                        if c:
                            mono = mono * Poly.var(k_var(c))
                    if mono != want[F]:
                        good = False
                        break
                if good:
                    found.append(table)
                    if not find_all:
                        return found
    return found


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-arrows", type=int, default=8)
    ap.add_argument("--all", action="store_true")
    args = ap.parse_args()
    for g in shapes():
        print("shape:", " | ".join(f"{v.name}: {' '.join(v.rotation)}" for v in g.vertices))
        for table in search(g, args.max_arrows, args.all):
            arrowed = RibbonGraph(g.vertices, g.edges, tuple((arc, d) for arc, d in table.items()))
            ok = arrow_br(arrowed, symbolic=True) == ARROW_TARGET
            print("  arrows:", {f"{a[0]}:{a[1]}:{a[2]}": "+" if d[0] > 0 else "-" for a, d in table.items()}, "full match" if ok else "table only")
            if not args.all and ok:
                print(arrowed)
                return


if __name__ == "__main__":
    main()
