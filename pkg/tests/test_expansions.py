import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import small_ribbon_graphs
from topotutte import gallery
from topotutte.expansions import (
    MAX_EDGES,
    TooManyEdges,
    arrow_br,
    arrow_reduce,
    arrow_reduction_outcomes,
    bollobas_riordan,
    boundary_arrow_words,
    dichromatic_br,
    godsil_royle,
    krushkal,
    krushkal_terms,
    las_vergnas,
    signed_br,
)
from topotutte.fileformat import parse
from topotutte.polynomial import Poly, evaluate
from topotutte.ribbon import Edge, RibbonGraph, Vertex, geometric_dual, metrics
from topotutte.tutte import dichromatic, from_ribbon, tutte

P = Poly.parse


def test_torus_theta_krushkal_table():
    g = gallery.load("torus_theta")
    # (k, kappa, s, s_perp) per subset, in edge order a, b, c
    want = {
        "": (2, 0, 0, 2), "a": (1, 0, 0, 2), "b": (1, 0, 0, 2), "ab": (1, 0, 0, 0),
        "c": (1, 0, 0, 2), "ac": (1, 0, 0, 0), "bc": (1, 0, 0, 0), "abc": (1, 0, 2, 0),
    }
    got = {"".join(sorted(g.subset(m))): (k, kappa, s, sp) for m, k, kappa, s, sp in krushkal_terms(g)}
    assert got == want


def test_golden_polynomials():
    assert bollobas_riordan(gallery.load("torus_theta")) == P("3*Y + 3 + X + Y^2*Z^2")
    assert krushkal(gallery.load("torus_theta")) == P("3 + 3*B + X*B + A")
    assert las_vergnas(gallery.load("torus_theta")) == P("3*z + 3*z^2 + (x-1)*z^2 + 1")
    assert bollobas_riordan(gallery.load("mobius_pair")) == P("Y + 2 + X + Y^2*Z^2 + 2*Y*Z + X*Y*Z")


def test_size_cap():
    n = MAX_EDGES + 1
    rot = tuple(h for i in range(n) for h in (f"h{i}a", f"h{i}b"))
    g = RibbonGraph((Vertex("v", rot),), tuple(Edge(str(i), f"h{i}a", f"h{i}b") for i in range(n)))
    with pytest.raises(TooManyEdges):
        bollobas_riordan(g)
    with pytest.raises(TooManyEdges):
        krushkal(g)


@settings(max_examples=50, deadline=None)
@given(small_ribbon_graphs())
def test_br_tutte_at_z_one(g):
    # BR(x-1, y-1, 1) is the Tutte polynomial of the underlying graph
    T = tutte(from_ribbon(g))
    br = bollobas_riordan(g).substitute_monomial({"Z": 1})
    for x, y in [(2, 3), (Fraction(1, 2), 5), (-1, -1)]:
        if x == 1 or y == 1:
            continue
        assert evaluate(br, {"X": x - 1, "Y": y - 1}) == evaluate(T, {"x": x, "y": y})


@settings(max_examples=50, deadline=None)
@given(small_ribbon_graphs())
def test_krushkal_duality(g):
    assert krushkal(g) == krushkal(geometric_dual(g), names=("Y", "X", "B", "A"))


@settings(max_examples=40, deadline=None)
@given(small_ribbon_graphs())
def test_dichromatic_relation(g):
    # Z(a, b, c) = (ac)^k BR(ac, c, 1/c) with x_e = b, y_e = 1
    Z = dichromatic_br(g, b="b")
    br = bollobas_riordan(g, weights={e.id: ("b", 1) for e in g.edges})
    k = metrics(g).k
    for a, b, c in [(Fraction(2), 3, Fraction(5)), (Fraction(1, 3), 7, Fraction(2, 5))]:
        rhs = (a * c) ** k * evaluate(br, {"X": a * c, "Y": c, "Z": 1 / c, "b": b})
        assert evaluate(Z, {"a": a, "b": b, "c": c}) == rhs
    # at c = 1 it is the graph dichromatic polynomial
    assert Z.substitute_monomial({"c": 1}) == dichromatic(from_ribbon(g))


def _signed(g, signs):
    edges = tuple(Edge(e.id, e.half_a, e.half_b, twist=e.twist, sign=s) for e, s in zip(g.edges, signs))
    return RibbonGraph(g.vertices, edges)


@settings(max_examples=30, deadline=None)
@given(small_ribbon_graphs(), st.data())
def test_signed_and_godsil_royle(g, data):
    signs = data.draw(st.lists(st.sampled_from("+-"), min_size=len(g.edges), max_size=len(g.edges)))
    h = _signed(g, signs)
    if all(s == "+" for s in signs):
        assert signed_br(h) == bollobas_riordan(g)
    # with alpha = beta = 1 the signed Tutte polynomial is BR at Z = 1
    assert godsil_royle(h, 1, 1) == bollobas_riordan(g, names=("x", "y", "Z")).substitute_monomial({"Z": 1})


def test_signed_half_exponents():
    g = parse("vertex u: a1 b1\nvertex v: a2 b2\nedge a: a1 a2 sign=-\nedge b: b1 b2 sign=+\n")
    p = signed_br(g)
    assert any(d % 2 for m, _ in p.terms() for _, d in m)


@pytest.mark.parametrize("length", range(0, 11))
def test_arrow_reduction_is_confluent(length):
    for w in itertools.product((1, -1), repeat=length):
        assert arrow_reduction_outcomes(w) == {int(2 * arrow_reduce(w))}


def test_arrow_reduce_values():
    assert arrow_reduce([]) == 0
    assert arrow_reduce([1, 1]) == 0
    assert arrow_reduce([1, -1]) == 1
    assert arrow_reduce([1, -1, 1]) == Fraction(1, 2)
    # the wrap-around pair cancels
    assert arrow_reduce([1, -1, -1, 1]) == 0


def test_arrow_example():
    target = P(
        "y_1*x_2*x_3*Y*K[1]^2 + y_1*y_2*x_3*K[1] + y_1*x_2*y_3*K[1] + y_1*y_2*y_3*X*K[1/2]^2"
        " + x_1*x_2*x_3*Y^2*Z^2*K[1] + x_1*y_2*x_3*Y*Z*K[1] + x_1*x_2*y_3*Y*Z + x_1*y_2*y_3*X*Y*Z*K[1/2]^2"
    )
    assert arrow_br(gallery.load("mobius_pair_arrows"), symbolic=True) == target


@settings(max_examples=40, deadline=None)
@given(small_ribbon_graphs())
def test_arrow_free_is_br(g):
    assert arrow_br(g, symbolic=True) == bollobas_riordan(g, symbolic=True)
    for m in range(1 << len(g.edges)):
        assert len(boundary_arrow_words(g, m)) == metrics(g, g.subset(m)).bc


@settings(max_examples=40, deadline=None)
@given(small_ribbon_graphs())
def test_las_vergnas_at_z_one(g):
    # LV(x, y, 1) = T_M(x, y); its constant part over subsets must count all 2^e subsets at x = y = 2, z = 1
    assert evaluate(las_vergnas(g), {"x": 2, "y": 2, "z": 1}) == 2 ** len(g.edges)
