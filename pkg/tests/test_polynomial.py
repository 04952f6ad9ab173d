from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from topotutte.polynomial import EvaluationError, Poly, evaluate, k_var, rational_sqrt

NAMES = ["X", "Y", "Z", "A", "B"]


@st.composite
def polys(draw, max_terms=5):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exps = {v: Fraction(draw(st.integers(-4, 6)), 2) for v in draw(st.sets(st.sampled_from(NAMES), max_size=3))}
        coeff = Fraction(draw(st.integers(-9, 9)), draw(st.integers(1, 4)))
        terms[tuple(sorted(exps.items()))] = coeff
    out = Poly()
    for exps, c in terms.items():
        out = out + Poly.monomial(c, dict(exps))
    return out


def test_canonical_text():
    X, Y, Z = Poly.var("X"), Poly.var("Y"), Poly.var("Z")
    assert str(X + 3 * Y + Y**2 * Z**2 + 3) == "X + 3*Y + Y^2*Z^2 + 3"
    assert str(Poly.var("A", Fraction(1, 2)) * Poly.var("B", Fraction(3, 2))) == "A^(1/2)*B^(3/2)"
    assert str(Poly()) == "0"
    assert str(-X + Fraction(1, 2)) == "-X + 1/2"


@given(polys())
def test_text_round_trip(p):
    assert Poly.parse(str(p)) == p


@given(polys(), polys(), polys())
def test_ring_laws(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p
    assert p - p == Poly()


@given(polys(max_terms=1))
def test_monomial_inverse(p):
    if p.is_zero():
        return
    assert p * p.inverse() == Poly.const(1)


def test_parse_forms():
    assert Poly.parse("(x-1)*z^2") == Poly.var("x") * Poly.var("z") ** 2 - Poly.var("z") ** 2
    assert Poly.parse("K[1/2]^2 + 2*K[1]") == Poly.var(k_var(Fraction(1, 2))) ** 2 + 2 * Poly.var("K[1]")
    assert Poly.parse("Y^-1") == Poly.var("Y").inverse()
    assert Poly.parse("3/4*A^(1/2)") == Poly.monomial(Fraction(3, 4), {"A": Fraction(1, 2)})
    with pytest.raises(ValueError):
        Poly.parse("(X+1)^(1/2)")


def test_evaluate_half_powers():
    p = Poly.var("A", Fraction(1, 2)) * Poly.var("B", Fraction(-1, 2))
    assert evaluate(p, {"A": 4, "B": 9}) == Fraction(2, 3)
    # roots may be supplied for non-square values, and must square correctly
    assert evaluate(Poly.var("A", Fraction(1, 2)), {"A": 4}, {"A": -2}) == -2
    with pytest.raises(EvaluationError):
        evaluate(p, {"A": 2, "B": 1})
    with pytest.raises(EvaluationError):
        evaluate(p, {"A": 4, "B": 9}, {"A": 3})
    with pytest.raises(EvaluationError):
        evaluate(Poly.var("X"), {})


def test_substitute_monomial():
    K = Poly.parse("A + B*X + 3*B + 3")
    Y, Z = Poly.var("Y"), Poly.var("Z")
    assert K.substitute_monomial({"A": Y * Z**2, "B": Y.inverse()}) == Poly.parse("Y*Z^2 + X*Y^-1 + 3*Y^-1 + 3")
    half = Poly.var("A", Fraction(1, 2)).substitute_monomial({"A": 4 * Y**2})
    assert half == 2 * Y


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(2) is None
    assert rational_sqrt(-1) is None


def test_floats_rejected():
    with pytest.raises(EvaluationError):
        evaluate(Poly.var("X"), {"X": 0.5})
