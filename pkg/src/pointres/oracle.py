"""Independent checks for the residue pipeline.

The residue route here never touches the dual-basis pairing: the primary
ideal is rebuilt as ``J_F + <z^m>`` by plain Gröbner bases, the unit is
inverted by a truncated geometric series, and the residue with monomial
denominator is read off as a single coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .cohomology import DualData, pairing, psi_basis
from .groebner import groebner, groebner_extended, ideal_quotient
from .poly import Polynomial, Ring
from .residue import (
    ResidueError, choose_unit, determinant, localexpression, mul_truncated, pow_truncated,
)

__all__ = [
    "series_inverse_box", "monomial_residue", "residue_via_transformation",
    "verify_duality", "milnor_count",
]


def series_inverse_box(q: Polynomial, m) -> Polynomial:
    """Power-series inverse of a unit, truncated to the box ``m``."""
    field = q.ring.field
    q0 = q.constant_coeff()
    if not q0:
        raise ResidueError("q(O) = 0: no power-series inverse")
    m = tuple(m)
    inv0 = field.inv(q0)
    # q = q0 (1 + r) with r(O) = 0, so 1/q = (1/q0) sum (-r)^k and r^k vanishes for k > sum(m-1)
    r = (q.scale(inv0) - 1).truncate(m)
    neg_r = -r
    total = q.ring.one().truncate(m)
    power = total
    for _ in range(sum(k - 1 for k in m)):
        power = mul_truncated(power, neg_r, m)
        if not power:
            break
        total = total + power
    return total.scale(inv0)


def monomial_residue(h: Polynomial, m):
    """Residue of ``h dz / z^m``: the coefficient of ``z^(m-1)``."""
    return h.coeff(tuple(k - 1 for k in m))


def residue_via_transformation(h: Polynomial, F: Sequence[Polynomial], ring: Ring | None = None,
                               m=None, max_degree: int = 64):
    """Residue of ``h dz / (f_1...f_n)`` through the classical transformation law.

    ``m`` must satisfy ``z_i^m_i in I_F``; by default it is taken from the
    dual basis (only the box bounds are used).
    """
    F = list(F)
    ring = ring or F[0].ring
    if isinstance(h, str):
        h = ring.parse(h)
    if m is None:
        m = psi_basis(F, ring, max_degree=max_degree).m
    m = tuple(m)
    n = ring.nvars
    box = [ring.gen(i) ** k for i, k in enumerate(m)]
    primary = groebner(list(F) + box, ring)
    B = groebner_extended(F, ring)
    q = choose_unit(ideal_quotient(F, primary, ring))
    P = [localexpression(B, q, z) for z in box]
    A = determinant(P, box=m)
    inv_n = pow_truncated(series_inverse_box(q, m), n, m)
    integrand = mul_truncated(mul_truncated(h.truncate(m), A, m), inv_n, m)
    return monomial_residue(integrand, m)


def verify_duality(D: DualData) -> bool:
    """True iff the pairing matrix of z^Λ against the basis classes is the identity."""
    field = D.ring.field
    for a in D.lam:
        za = D.ring.monomial(a)
        for b, p in zip(D.lam, D.psi):
            expect = field.one if a == b else field.zero
            if pairing(za, p) != expect:
                return False
    return True


def milnor_count(weights, degree: int) -> Fraction:
    """Milnor number of a quasi-homogeneous isolated singularity of type (degree, weights)."""
    out = Fraction(1)
    for w in weights:
        out *= Fraction(degree - w, w)
    return out
