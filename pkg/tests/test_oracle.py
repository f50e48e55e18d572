from dataclasses import replace
from fractions import Fraction

from pointres import Ring
from pointres.cohomology import psi_basis
from pointres.oracle import (
    milnor_count, monomial_residue, residue_via_transformation, series_inverse_box, verify_duality,
)


def test_series_inverse():
    R = Ring.make(("x", "y"))
    q = R.parse("2+x-y")
    inv = series_inverse_box(q, (3, 2))
    prod = (inv * q).truncate((3, 2))
    assert prod == R.one()


def test_monomial_residue():
    R = Ring.make(("x", "y"))
    assert monomial_residue(R.parse("3*x*y^2+x"), (2, 3)) == 3


def test_oracle_on_e12(e12, e12_ring):
    assert residue_via_transformation("1", e12, e12_ring) == Fraction(30517578125, 218041257467152161)
    assert residue_via_transformation("x*y^5", e12, e12_ring) == Fraction(1, 21)


def test_oracle_on_parametric(par, par_ring):
    K = par_ring.field
    got = residue_via_transformation(par_ring.one(), par, par_ring)
    assert got == K(Fraction(30517578125, 218041257467152161)) * K.gen("t") ** 22


def test_verify_duality_detects_tampering(e12, e12_ring):
    D = psi_basis(e12, e12_ring)
    assert verify_duality(D)
    bad = list(D.psi)
    bad[3] = bad[3] + bad[0]
    assert not verify_duality(replace(D, psi=tuple(bad)))


def test_milnor_count_formula():
    assert milnor_count((7, 3), 21) == 12
    assert milnor_count((2, 5), 10) == 4
    assert milnor_count((1, 1), 3) == 4
