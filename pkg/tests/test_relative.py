import random

import pytest
from hypothesis import given, settings, strategies as st

from topotutte import gallery
from topotutte.corpus import random_plane_graph, random_relative_graph
from topotutte.expansions import bollobas_riordan
from topotutte.polynomial import Poly
from topotutte.relative import (
    RelativeGraph,
    delta_medial,
    delta_tutte,
    h_sub_f,
    psi,
    relative_dual,
    relative_tutte,
    to_ribbon,
    verify_buch,
    verify_relative_duality,
)
from topotutte.ribbon import RibbonGraphError, isomorphic, metrics
from topotutte.tutte import AbstractGraph, from_ribbon, rank_generating

seeds = st.integers(0, 2**32 - 1)


def test_rejects_non_plane():
    with pytest.raises(RibbonGraphError):
        RelativeGraph(gallery.load("torus_theta"))


def test_psi():
    # circles: |T(-1,-1)| is 1 for a bridge and for a loop, 2 for a digon
    assert psi(AbstractGraph(2, ((0, 1),))) == Poly.var("w")
    assert psi(AbstractGraph(1, ((0, 0),))) == Poly.const(1)
    assert psi(AbstractGraph(2, ((0, 1), (0, 1)))) == Poly.parse("d*w")
    assert psi(AbstractGraph(3, ())) == Poly.const(1)


def test_worked_instance():
    rel = gallery.relative("relative_triangle")
    G = to_ribbon(rel)
    assert isomorphic(G, gallery.load("torus_bouquet"))
    assert verify_buch(rel).passed


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_medial_circles_match_tutte(seed):
    g = random_plane_graph(random.Random(seed), 8)
    assert delta_medial(g) == delta_tutte(from_ribbon(g))


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_empty_h_is_rank_generating(seed):
    g = random_plane_graph(random.Random(seed), 8)
    rel = RelativeGraph.from_graph(g, [])
    assert relative_tutte(rel) == rank_generating(from_ribbon(g))


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_all_zero_edges_give_psi(seed):
    g = random_plane_graph(random.Random(seed), 8)
    rel = RelativeGraph.from_graph(g, g.edge_ids)
    assert relative_tutte(rel) == psi(from_ribbon(g))
    assert h_sub_f(rel, []).num_vertices == metrics(g).v


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_conversion_and_identities(seed):
    rel = random_relative_graph(random.Random(seed), 8)
    G = to_ribbon(rel)
    # one vertex per medial circle of the zero-edge subgraph
    assert metrics(G).v == delta_tutte(h_sub_f(rel, []))
    assert len(G.edges) == len(rel.regular)
    assert verify_buch(rel, points=5, seed=seed).passed
    assert verify_relative_duality(rel, points=5, seed=seed).passed


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_relative_dual_involution(seed):
    rel = random_relative_graph(random.Random(seed), 8)
    twice = relative_dual(relative_dual(rel))
    assert isomorphic(twice.graph, rel.graph, labelled=True)
    assert relative_tutte(twice, symbolic=True) == relative_tutte(rel, symbolic=True)
    assert relative_dual(rel).H == rel.H


def test_buch_on_weighted_instance():
    rel = gallery.relative("relative_triangle")
    assert verify_buch(rel, points=10, seed=3).passed
    assert bollobas_riordan(to_ribbon(rel)) == bollobas_riordan(gallery.load("torus_bouquet"))
