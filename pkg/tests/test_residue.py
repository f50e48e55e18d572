import random
from fractions import Fraction

import pytest

from conftest import golden_b
from pointres import Ring
from pointres.cohomology import BoxSeries
from pointres.residue import (
    ResidueError, choose_unit, determinant, invert_mod_monomial, mul_truncated, pow_truncated,
    residues, tau,
)


def test_truncated_products():
    R = Ring.make(("x", "y"))
    a = R.parse("1+x+y")
    assert mul_truncated(a, a, (2, 2)) == R.parse("1+2*x+2*y+2*x*y")
    assert pow_truncated(a, 3, (2, 1)) == R.parse("1+3*x")
    assert pow_truncated(a, 0, (1, 1)) == R.one()


def test_determinant():
    R = Ring.make(("x", "y"))
    x, y = R.gens
    assert determinant([[x, y], [y, x]]) == x ** 2 - y ** 2
    assert determinant([[x, y], [y, x]], box=(3, 2)) == x ** 2
    assert not determinant([[x, y], [y, x]], box=(2, 2))
    M = [[R.one(), x, y], [x, R.one(), x], [y, x, R.one()]]
    assert determinant(M) == R.parse("1-2*x^2+2*x^2*y-y^2")


def test_choose_unit():
    R = Ring.make(("x", "y"), weights=(7, 3))
    G = [R.parse("y+147/25"), R.parse("x+151263/3125")]
    assert choose_unit(G) == R.parse("25*y+147")
    with pytest.raises(ResidueError):
        choose_unit([R.parse("x"), R.parse("y^2")])


def test_invert_mod_monomial_univariate():
    R = Ring.make(("x",))
    u, c = invert_mod_monomial(R.parse("1+x"), (3,))
    assert u == R.parse("1-x+x^2")
    assert c < 0
    with pytest.raises(ResidueError):
        invert_mod_monomial(R.parse("x"), (3,))


def test_monomial_system_residues():
    R = Ring.make(("x", "y"))
    M = tau([R.parse("x^2"), R.parse("y^3")], R)
    assert residues("x*y^2", M) == 1
    assert residues("1+x+y^2", M) == 0
    assert residues(R.parse("x*y^2+x^5"), M) == 1


def test_series_formula_of_e12(e12_tau, e12_ring):
    b = golden_b(e12_ring.field, False)
    rng = random.Random(2)
    coeffs = {(i, j): Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for i in range(4) for j in range(8)}
    h = BoxSeries(e12_ring, coeffs, (4, 8))
    c = lambda i, j: coeffs[(i, j)]
    expect = sum(c(*a) * b[a] for a in b if a not in ((0, 5), (1, 4), (1, 5)))
    expect += (c(0, 5) - Fraction(1, 3) * c(2, 0)) * b[(0, 5)]
    expect += (c(1, 4) - Fraction(5, 7) * c(0, 6) + Fraction(5, 21) * c(2, 1)) * b[(1, 4)]
    expect += (c(1, 5) - Fraction(1, 3) * c(3, 0) - Fraction(5, 7) * c(0, 7)
               + Fraction(5, 21) * c(2, 2)) * b[(1, 5)]
    assert residues(h, e12_tau) == expect


def test_kernel_class_expansion(e12_tau):
    k = e12_tau.kernel_class()
    assert k.coeff((3, 0)) == Fraction(-1, 63)
    assert k.coeff((2, 2)) == Fraction(5, 441)
    assert k.coeff((0, 7)) == Fraction(-5, 147)
    assert k.coeff((0, 6)) == Fraction(125, 21609)
    assert k.coeff((2, 0)) == Fraction(3125, 9529569)
    assert k.coeff((0, 3)) == Fraction(-1953125, 68641485507)
    assert len(k.terms) == 18


def test_transformation_data(e12_tau):
    T = e12_tau.transform
    assert T.m == (4, 8) and T.Den == e12_tau.den
    assert mul_truncated(T.u, T.q, T.m) == T.q.ring.one()


def test_parametric_genericity(par_tau):
    assert "t" in par_tau.genericity


def test_wrong_arity():
    R = Ring.make(("x", "y"))
    with pytest.raises(ValueError):
        tau([R.parse("x")], R)
