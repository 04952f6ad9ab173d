"""Plain-text ribbon graph files (``.rg``).

::

    # torus with two vertices
    vertex u: a1 b1 c1
    vertex v: a2 b2 c2
    edge a: a1 a2
    edge b: b1 b2 twist x=1/2 sign=-
    arrow v:u:0 + -
    arrow e:a:1 +

Rotations are counterclockwise.  ``arrow`` lines list the directions placed
on one boundary arc, in arc order: ``v:<vertex>:<gap>`` is the free arc after
the ``gap``-th half-edge of the rotation (``+`` = counterclockwise),
``e:<edge>:<side>`` a long side of an edge ribbon (``+`` = from the first
half-edge towards the second).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, List, Tuple, Union

from .ribbon import Edge, RibbonGraph, RibbonGraphError, Vertex

_NAME = re.compile(r"[^\s:#]+")
_RATIONAL = re.compile(r"-?\d+(/\d+)?")
_SYMBOL = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class ParseError(RibbonGraphError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


def _tokens(text: str) -> List[Tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", text)]


def _weight(tok: str, line: int, col: int) -> Union[int, Fraction, str]:
    if _RATIONAL.fullmatch(tok):
        try:
            q = Fraction(tok)
        except ZeroDivisionError:
            raise ParseError(f"malformed rational {tok!r}", line, col) from None
        return int(q) if q.denominator == 1 else q
    if _SYMBOL.fullmatch(tok):
        return tok
    raise ParseError(f"malformed rational {tok!r}", line, col)


def _header(toks, kind: str, line: int) -> Tuple[str, list]:
    """Split ``<kind> <name>: rest`` (the colon may be attached or separate)."""
    if len(toks) < 2:
        raise ParseError(f"{kind} needs a name", line, toks[0][1] + len(kind))
    name, col = toks[1]
    rest = toks[2:]
    if name.endswith(":"):
        name = name[:-1]
    elif rest and rest[0][0] == ":":
        rest = rest[1:]
    elif rest and rest[0][0].startswith(":"):
        rest = [(rest[0][0][1:], rest[0][1] + 1)] + rest[1:]
    else:
        raise ParseError("expected ':' after name", line, col + len(name))
    if not _NAME.fullmatch(name):
        raise ParseError(f"bad name {name!r}", line, col)
    return name, rest


def parse(text: str) -> RibbonGraph:
    vertices: List[Vertex] = []
    edges: List[Edge] = []
    arrows: List[Tuple[Tuple[str, str, int], Tuple[int, ...]]] = []
    owner: Dict[str, str] = {}
    owner_pos: Dict[str, Tuple[int, int]] = {}
    used: Dict[str, str] = {}
    arrow_pos: List[Tuple[int, int]] = []
    edge_pos: Dict[str, Tuple[int, int]] = {}
    for ln, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        toks = _tokens(body)
        if not toks:
            continue
        kw, kcol = toks[0]
        if kw == "vertex":
            name, rest = _header(toks, kw, ln)
            rot = []
            for h, col in rest:
                if not _NAME.fullmatch(h):
                    raise ParseError(f"bad half-edge name {h!r}", ln, col)
                if h in owner:
                    raise ParseError(f"duplicate half-edge {h!r} (already at vertex {owner[h]})", ln, col)
                owner[h] = name
                owner_pos[h] = (ln, col)
                rot.append(h)
            if any(v.name == name for v in vertices):
                raise ParseError(f"duplicate vertex {name!r}", ln, toks[1][1])
            vertices.append(Vertex(name, tuple(rot)))
        elif kw == "edge":
            name, rest = _header(toks, kw, ln)
            if len(rest) < 2:
                raise ParseError("edge needs two half-edges", ln, len(body.rstrip()) + 1)
            (ha, ca), (hb, cb) = rest[0], rest[1]
            if ha == hb:
                raise ParseError(f"edge {name!r} uses half-edge {ha!r} twice", ln, cb)
            for h, col in ((ha, ca), (hb, cb)):
                if h in used:
                    raise ParseError(f"duplicate half-edge {h!r} (already in edge {used[h]})", ln, col)
                used[h] = name
            attrs: Dict[str, object] = {}
            for tok, col in rest[2:]:
                if tok in ("twist", "zero", "phantom"):
                    attrs[tok] = True
                elif tok.startswith(("x=", "y=")):
                    attrs[tok[0]] = _weight(tok[2:], ln, col + 2)
                elif tok in ("sign=+", "sign=-"):
                    attrs["sign"] = tok[-1]
                else:
                    raise ParseError(f"unknown edge attribute {tok!r}", ln, col)
            if name in edge_pos:
                raise ParseError(f"duplicate edge {name!r}", ln, toks[1][1])
            edge_pos[name] = (ln, toks[1][1])
            edges.append(Edge(name, ha, hb, **attrs))
        elif kw == "arrow":
            if len(toks) < 3:
                raise ParseError("arrow needs an arc and at least one direction", ln, kcol)
            spec, scol = toks[1]
            parts = spec.split(":")
            if len(parts) != 3 or parts[0] not in ("v", "e") or not parts[2].isdigit():
                raise ParseError(f"bad arc {spec!r}", ln, scol)
            dirs = []
            for tok, col in toks[2:]:
                for off, ch in enumerate(tok):
                    if ch not in "+-":
                        raise ParseError(f"bad arrow direction {ch!r}", ln, col + off)
                    dirs.append(1 if ch == "+" else -1)
            arrows.append(((parts[0], parts[1], int(parts[2])), tuple(dirs)))
            arrow_pos.append((ln, scol))
        else:
            raise ParseError(f"unknown keyword {kw!r}", ln, kcol)
    for h, v in owner.items():
        if h not in used:
            raise ParseError(f"dangling half-edge {h!r} at vertex {v!r}", *owner_pos[h])
    for h, e in used.items():
        if h not in owner:
            ln, col = edge_pos[e]
            raise ParseError(f"dangling half-edge {h!r} of edge {e!r}", ln, col)
    vdeg = {v.name: len(v.rotation) for v in vertices}
    for (arc, _), (ln, col) in zip(arrows, arrow_pos):
        kind, name, idx = arc
        ok = (kind == "v" and name in vdeg and idx < max(vdeg[name], 1)) or (
            kind == "e" and name in edge_pos and idx in (0, 1)
        )
        if not ok:
            raise ParseError(f"arrow on missing arc {kind}:{name}:{idx}", ln, col)
    if not vertices:
        raise ParseError("no vertices", 1, 1)
    return RibbonGraph(tuple(vertices), tuple(edges), tuple(arrows))


def _fmt_weight(w) -> str:
    return str(w)


def serialize(g: RibbonGraph) -> str:
    lines = []
    for v in g.vertices:
        lines.append(" ".join([f"vertex {v.name}:"] + list(v.rotation)))
    for e in g.edges:
        parts = [f"edge {e.id}:", e.half_a, e.half_b]
        if e.twist:
            parts.append("twist")
        if e.x != 1:
            parts.append(f"x={_fmt_weight(e.x)}")
        if e.y != 1:
            parts.append(f"y={_fmt_weight(e.y)}")
        if e.sign:
            parts.append(f"sign={e.sign}")
        if e.zero:
            parts.append("zero")
        if e.phantom:
            parts.append("phantom")
        lines.append(" ".join(parts))
    for (kind, name, idx), dirs in g.arrows:
        lines.append(f"arrow {kind}:{name}:{idx} " + " ".join("+" if d > 0 else "-" for d in dirs))
    return "\n".join(lines) + "\n"


def load(path) -> RibbonGraph:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def dump(g: RibbonGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(g))
