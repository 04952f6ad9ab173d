from hypothesis import given, settings

from conftest import small_ribbon_graphs
from topotutte.polynomial import Poly
from topotutte.tutte import (
    AbstractGraph,
    cycle_matroid,
    dual_matroid,
    from_ribbon,
    perspective_tutte,
    rank_generating,
    triangle,
    tutte,
    tutte_rank_sum,
)


def test_triangle():
    assert tutte(triangle()) == Poly.parse("x + x^2 + y")
    assert tutte_rank_sum(triangle()) == tutte(triangle())


def test_small_graphs():
    # two vertices, two parallel edges; a single loop; an isolated vertex
    assert tutte(AbstractGraph(2, ((0, 1), (0, 1)))) == Poly.parse("x + y")
    assert tutte(AbstractGraph(1, ((0, 0),))) == Poly.parse("y")
    assert tutte(AbstractGraph(1, ())) == Poly.const(1)


@settings(max_examples=60, deadline=None)
@given(small_ribbon_graphs())
def test_deletion_contraction_matches_rank_sum(g):
    a = from_ribbon(g)
    assert tutte(a) == tutte_rank_sum(a)
    R = rank_generating(a, "x", "y")
    for x, y in [(2, 3), (-2, 5)]:
        assert R.evaluate({"x": x, "y": y}) == tutte(a).evaluate({"x": x + 1, "y": y + 1})


@settings(max_examples=40, deadline=None)
@given(small_ribbon_graphs())
def test_perspective_of_a_matroid_with_itself(g):
    # the trivial perspective M -> M has no z terms and is T(M)
    M = cycle_matroid(from_ribbon(g))
    assert perspective_tutte(M, M) == tutte(from_ribbon(g))
    D = dual_matroid(M)
    assert D.rank_mask(D.full) == len(g.edges) - M.rank_mask(M.full)
