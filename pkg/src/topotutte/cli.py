"""Command line driver.

    topotutte br data/torus_theta.rg
    topotutte verify --suite all data/torus_bouquet.rg

Exit codes: 0 success, 1 a verified identity failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from .expansions import arrow_br, bollobas_riordan, dichromatic_br, godsil_royle, krushkal, las_vergnas, signed_br
from .fileformat import parse, serialize
from .quasitree import butler_terms
from .relative import RelativeGraph, relative_tutte, to_ribbon
from .ribbon import RibbonGraph, RibbonGraphError, geometric_dual, metrics, partial_dual
from .verify import SUITES, VerifyConfig, edge_classes, run_suite


class UsageError(Exception):
    pass


def _read(path: str) -> RibbonGraph:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text)


def _weight(tok: str):
    try:
        return Fraction(tok)
    except ValueError:
        return tok


def _id_list(text: str) -> List[str]:
    return [t for t in text.replace(",", " ").split() if t]


def cmd_info(g: RibbonGraph, args) -> int:
    m = metrics(g)
    for key in ("v", "e", "k", "r", "n", "bc", "s"):
        print(f"{key}: {getattr(m, key)}")
    print(f"orientable: {'yes' if m.orientable else 'no'}")
    if g.has_phantoms:
        print("phantom edges: " + " ".join(e.id for e in g.edges if e.phantom))
    else:
        for e in g.edges:
            print(f"edge {e.id}: {' '.join(edge_classes(g, e.id))}")
    return 0


def cmd_br(g: RibbonGraph, args) -> int:
    if args.signed:
        p = signed_br(g, force=args.force)
    elif args.godsil_royle:
        a, b = (_weight(t) for t in args.godsil_royle)
        p = godsil_royle(g, a, b, force=args.force)
    elif args.dichromatic:
        p = dichromatic_br(g, b="b", force=args.force)
    elif args.arrow:
        p = arrow_br(g, symbolic=args.symbolic, force=args.force)
    else:
        p = bollobas_riordan(g, symbolic=args.symbolic, force=args.force)
    print(p)
    return 0


def cmd_krushkal(g: RibbonGraph, args) -> int:
    print(krushkal(g, force=args.force))
    return 0


def cmd_lv(g: RibbonGraph, args) -> int:
    print(las_vergnas(g, force=args.force))
    return 0


def cmd_reltutte(g: RibbonGraph, args) -> int:
    print(relative_tutte(RelativeGraph(g), symbolic=args.symbolic, force=args.force))
    return 0


def _flags(f) -> str:
    s = ("i" if f.internal else "") + ("l" if f.live else "") + ("" if f.orientable else "n")
    return s or "-"


def cmd_quasitrees(g: RibbonGraph, args) -> int:
    order = _id_list(args.order) if args.order else None
    if order is not None and sorted(order) != sorted(g.edge_ids):
        raise UsageError("--order must list every edge exactly once")
    for t in butler_terms(g, order):
        q = ",".join(e for e in t.diagram.order if e in t.quasi_tree)
        flags = " ".join(f"{e}:{_flags(t.diagram.flags[e])}" for e in t.diagram.order)
        print(f"{{{q}}}  {flags}  {t.contribution}")
    return 0


def cmd_dual(g: RibbonGraph, args) -> int:
    sys.stdout.write(serialize(geometric_dual(g)))
    return 0


def cmd_partial_dual(g: RibbonGraph, args) -> int:
    sys.stdout.write(serialize(partial_dual(g, _id_list(args.edges))))
    return 0


def cmd_convert(g: RibbonGraph, args) -> int:
    sys.stdout.write(serialize(to_ribbon(RelativeGraph(g))))
    return 0


def cmd_verify(g: RibbonGraph, args) -> int:
    cfg = VerifyConfig(points=args.points, seed=args.seed, force=args.force)
    outcomes = run_suite(args.suite, g, cfg)
    failed = [o for o in outcomes if not o.ok]
    for o in outcomes:
        print(o.line())
    for o in failed:
        print(f"\ncounterexample for {o.suite}: {o.identity}")
        print(o.detail)
    skipped = sum(o.skipped for o in outcomes)
    print(f"\n{len(outcomes) - len(failed) - skipped} passed, {skipped} skipped, {len(failed)} failed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="topotutte", description="Topological Tutte polynomials of ribbon graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="ribbon graph file, or - for stdin")
        p.add_argument("--force", action="store_true", help="allow more than 24 edges")
        p.set_defaults(fn=fn)
        return p

    add("info", cmd_info, "metrics and edge classes")
    p = add("br", cmd_br, "Bollobas-Riordan polynomial")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--signed", action="store_true")
    mode.add_argument("--godsil-royle", nargs=2, metavar=("A", "B"))
    mode.add_argument("--dichromatic", action="store_true")
    mode.add_argument("--arrow", action="store_true")
    p.add_argument("--symbolic", action="store_true", help="edge weights x_<id>, y_<id>")
    add("krushkal", cmd_krushkal, "Krushkal polynomial")
    add("lv", cmd_lv, "Las Vergnas polynomial")
    p = add("reltutte", cmd_reltutte, "relative Tutte polynomial of a plane graph with zero edges")
    p.add_argument("--symbolic", action="store_true", help="edge weights x_<id>, y_<id>")
    p = add("quasitrees", cmd_quasitrees, "quasi-trees with chord flags and contributions")
    p.add_argument("--order", help="edge order, comma or space separated")
    add("dual", cmd_dual, "geometric dual")
    p = add("partial-dual", cmd_partial_dual, "partial dual")
    p.add_argument("-e", dest="edges", required=True, help="edge ids, comma separated")
    p = add("convert", cmd_convert, "relative plane graph to ribbon graph")
    p.add_argument("--relative-to-ribbon", action="store_true", required=True)
    p = add("verify", cmd_verify, "check identities")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.add_argument("--points", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        g = _read(args.file)
        return args.fn(g, args)
    except (UsageError, RibbonGraphError, ValueError) as exc:
        print(f"topotutte {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
