from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pointres.poly import (
    MonomialOrder, PolySyntaxError, Polynomial, Ring, format_poly, monomial_compare,
    monomials_up_to, parse_poly, weighted_degree,
)

R3 = Ring.make(("x", "y", "z"), weights=(3, 2, 1))
RT = Ring.make(("x", "y"), params=("t",), weights=(7, 3))
LEX = Ring.make(("x", "y"), order="lex")

exps3 = st.tuples(*[st.integers(0, 4)] * 3)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@st.composite
def polys(draw, ring=R3):
    n = ring.nvars
    terms = draw(st.dictionaries(st.tuples(*[st.integers(0, 4)] * n), rationals, max_size=5))
    return Polynomial(ring, {e: ring.field(c) for e, c in terms.items()})


@st.composite
def param_polys(draw):
    K = RT.field
    t = K.gen("t")
    terms = {}
    for e in draw(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), max_size=4)):
        a, b, k = draw(rationals), draw(rationals), draw(st.integers(0, 3))
        c = K(a) * t ** k + K(b)
        d = draw(st.integers(0, 2))
        if d:
            c = c * K.inv(t ** d + K(1))
        terms[e] = c
    return Polynomial(RT, terms)


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + R3.zero() == a and a * R3.one() == a
    assert not (a - a)


@given(polys(), st.integers(0, 3))
def test_power_matches_repeated_product(a, k):
    expect = R3.one()
    for _ in range(k):
        expect = expect * a
    assert a ** k == expect


@given(polys())
def test_parse_format_round_trip(p):
    assert R3.parse(format_poly(p)) == p
    assert format_poly(R3.parse(format_poly(p))) == format_poly(p)


@settings(max_examples=40, deadline=None)
@given(param_polys())
def test_parse_format_round_trip_parametric(p):
    assert RT.parse(format_poly(p)) == p


@given(polys(LEX))
def test_parse_format_round_trip_lex(p):
    assert LEX.parse(format_poly(p)) == p


@given(exps3, exps3, exps3)
def test_order_is_monomial_order(a, b, c):
    o = R3.order
    ab = monomial_compare(o, a, b)
    assert ab == -monomial_compare(o, b, a)
    assert (ab == 0) == (a == b)
    ac = tuple(x + y for x, y in zip(a, c))
    bc = tuple(x + y for x, y in zip(b, c))
    assert monomial_compare(o, ac, bc) == ab
    assert monomial_compare(o, (0, 0, 0), a) <= 0


def test_wdeglex_examples():
    o = MonomialOrder("wdeglex", (7, 3))
    assert monomial_compare(o, (1, 0), (0, 2)) == 1  # weight 7 > 6
    assert monomial_compare(o, (3, 0), (0, 7)) == 1  # equal weight, lex tie-break
    assert monomial_compare(MonomialOrder("lex"), (1, 0), (0, 9)) == 1
    assert weighted_degree((7, 3), (1, 5)) == 22


def test_monomials_up_to():
    got = set(monomials_up_to((7, 3), 7))
    assert got == {(0, 0), (0, 1), (0, 2), (1, 0)}


def test_parse_examples():
    R = Ring.make(("x", "y"))
    assert R.parse("3*x^2 + y^5").terms == {(2, 0): 3, (0, 5): 1}
    assert R.parse("0").terms == {}
    p = RT.parse("x^3+y^7+t*x*y^5")
    assert p.terms == {(3, 0): 1, (0, 7): 1, (1, 5): RT.field.gen("t")}
    assert R.parse("-(x - y)") == R.parse("y-x")
    assert R.parse("x/2") == R.parse("x").scale(Fraction(1, 2))


def test_format_examples():
    assert format_poly(LEX.parse("y^5 + 3*x^2")) == "3*x^2+y^5"
    assert format_poly(Ring.make(("x", "y"), weights=(7, 3)).parse("3*x^2+y^5")) == "y^5+3*x^2"
    assert format_poly(Ring.make(("x",)).zero()) == "0"
    assert format_poly(LEX.parse("x^2-1/2*y"), "latex") == r"x^{2} - \frac{1}{2} y"


@pytest.mark.parametrize("text,pos", [("2x", 1), ("x/0", 1), ("z", 0), ("x+", 2), ("(x", 2)])
def test_parse_errors(text, pos):
    with pytest.raises(PolySyntaxError) as info:
        Ring.make(("x", "y")).parse(text)
    assert info.value.pos == pos


def test_division_by_polynomial_rejected():
    with pytest.raises(PolySyntaxError, match="non-constant"):
        parse_poly("1/x", Ring.make(("x",)))


def test_polynomial_helpers():
    R = Ring.make(("x", "y"), weights=(7, 3))
    p = R.parse("3*x^2+y^5+x*y")
    assert p.lead_exp == (0, 5)
    assert p.diff("x") == R.parse("6*x+y")
    assert p.truncate((2, 2)) == R.parse("x*y")
    assert p.monic().lead_coeff == 1
    assert p.degree() == 5 and p.degree("x") == 2
    assert p.weighted_degree() == 15
    assert R.gen("y").shift((1, 0), 2) == R.parse("2*x*y")
