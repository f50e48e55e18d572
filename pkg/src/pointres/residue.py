"""Kernel class of the point residue mapping and residue evaluation.

``tau`` follows the transformation-law route: a unit ``q`` of the local ring
taken from ``J_F : J_{F,O}`` turns the membership ``z_i^{m_i} in J_{F,O}`` into
polynomial identities ``q z_i^{m_i} = sum_j p_ij f_j``; with ``u`` the inverse
of ``q`` modulo ``<z^m>`` the kernel class is ``u^n det(p) * xi^(m-1)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Mapping, Sequence

from .coefficients import genericity_log
from .cohomology import DualData, LocalCohomClass, local_normal_form, psi_basis
from .groebner import (
    ExtendedBasis, annihilator_ideal, eliminate, groebner_extended, ideal_quotient,
    reduce_module, reduce_with_cofactors,
)
from .poly import Polynomial, Ring

__all__ = [
    "ResidueError", "TransformationData", "ResidueMapData", "localexpression",
    "invert_mod_monomial", "nf_monomial_ideal", "choose_unit", "determinant",
    "mul_truncated", "pow_truncated", "tau", "residues",
]


class ResidueError(ArithmeticError):
    """A mathematical precondition of the residue computation does not hold."""


def nf_monomial_ideal(p: Polynomial, m) -> Polynomial:
    """Normal form modulo <z_1^m_1, ..., z_n^m_n>."""
    return p.truncate(m)


def mul_truncated(a: Polynomial, b: Polynomial, m) -> Polynomial:
    out: dict = {}
    zero = a.ring.field.zero
    for e1, c1 in a.terms.items():
        for e2, c2 in b.terms.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            if all(x < k for x, k in zip(e, m)):
                out[e] = out.get(e, zero) + c1 * c2
    return Polynomial(a.ring, out)


def pow_truncated(a: Polynomial, k: int, m) -> Polynomial:
    out = a.ring.one().truncate(m)
    for _ in range(k):
        out = mul_truncated(out, a, m)
    return out


def determinant(P: Sequence[Sequence[Polynomial]], box=None) -> Polynomial:
    """Leibniz expansion; with ``box`` every product is truncated to it."""
    n = len(P)
    ring = P[0][0].ring
    total = ring.zero()
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = ring.one()
        for i, j in enumerate(perm):
            term = term * P[i][j] if box is None else mul_truncated(term, P[i][j], box)
            if not term:
                break
        total = total - term if inversions % 2 else total + term
    return total


def localexpression(B: ExtendedBasis, q: Polynomial, r: Polynomial) -> tuple[Polynomial, ...]:
    """Cofactors ``p`` with ``q*r == sum(p_i f_i)``, reduced modulo the syzygies."""
    qr = q * r
    nf, e = reduce_with_cofactors(qr, B)
    if nf:
        raise ResidueError("q*r is not in the ideal generated by F")
    n = len(B.F)
    ring = B.ring
    p = [ring.zero() for _ in range(n)]
    for j, ej in enumerate(e):
        if ej:
            for i in range(n):
                p[i] = p[i] + ej * B.R[j][i]
    p = reduce_module(p, B.S, ring)
    if B.combine(p) != qr:
        raise ResidueError("cofactor identity failed after syzygy reduction")
    return p


def choose_unit(G_Q: Sequence[Polynomial]) -> Polynomial:
    """Element of the quotient basis with nonzero constant term and smallest head,
    scaled to coprime integral coefficients with a positive leading coefficient."""
    units = [g for g in G_Q if g.constant_coeff()]
    if not units:
        raise ResidueError("no element with q(O) != 0 in the quotient basis")
    ring = units[0].ring
    q = min(units, key=lambda g: ring.order.key(g.lead_exp))
    return q.scale(ring.field.integral_scale(q.terms.values(), sign_ref=q.lead_coeff))


def invert_mod_monomial(q: Polynomial, m):
    """Inverse of a unit modulo <z^m> by eliminating u from <1 - q u, z_i^m_i>.

    Returns ``(u, c)`` where ``c*u + poly(z)`` is the degree-one-in-u element of
    the eliminating basis, scaled to coprime integral coefficients with
    ``poly(O) > 0``, and ``u = -poly/c  mod <z^m>``.
    """
    ring = q.ring
    if not q.constant_coeff():
        raise ResidueError("q(O) = 0: q is not a unit of the local ring")
    m = tuple(m)
    uring = Ring(ring.variables + ("_u",), ring.field, _append_order(ring))
    u = uring.gen(ring.nvars)
    gens = [uring.one() - q.to_ring(uring) * u]
    gens += [uring.gen(i) ** k for i, k in enumerate(m)]
    _, full = eliminate(gens, ("_u",), uring)
    linear = [g for g in full if max(e[0] for e in g.terms) == 1]
    if not linear:
        raise ResidueError("no element of degree one in u in the eliminating basis")
    field = ring.field
    g = min(linear, key=lambda p: p.ring.order.key(p.lead_exp))
    ucoeff = {e[1:]: c for e, c in g.terms.items() if e[0] == 1}
    if set(ucoeff) != {ring.zero_exp}:
        raise ResidueError("u-coefficient of the eliminating element is not a constant")
    poly = Polynomial(ring, {e[1:]: c for e, c in g.terms.items() if e[0] == 0})
    s = field.integral_scale(list(g.terms.values()), sign_ref=poly.constant_coeff())
    c = ucoeff[ring.zero_exp] * s
    poly = poly.scale(s)
    inv = nf_monomial_ideal(poly.scale(-field.inv(c)), m)
    return inv, c


def _append_order(ring: Ring):
    # the elimination step reorders variables itself; any order with the right arity
    from .poly import MonomialOrder

    o = ring.order
    if o.kind == "wdeglex" and o.weights is not None:
        return MonomialOrder("wdeglex", o.weights + (1,))
    return MonomialOrder(o.kind if o.kind != "elim" else "wdeglex")


@dataclass(frozen=True)
class TransformationData:
    """Intermediate data of the transformation-law computation."""

    q: Polynomial
    P: tuple[tuple[Polynomial, ...], ...]
    Det: Polynomial
    u: Polynomial
    c: object
    Den: object
    ND: Polynomial
    NU: Polynomial
    Num: Polynomial
    m: tuple[int, ...]


@dataclass(frozen=True)
class ResidueMapData:
    """The residue mapping: ``tau_F = (1/Den) sum_alpha coeff[alpha] psi_alpha``."""

    dual: DualData
    coeff: Mapping
    den: object
    genericity: tuple[str, ...] = ()
    transform: TransformationData | None = dc_field(default=None, compare=False)

    @property
    def ring(self) -> Ring:
        return self.dual.ring

    @property
    def b(self) -> dict:
        inv = self.ring.field.inv(self.den)
        return {a: self.coeff[a] * inv for a in self.dual.lam}

    def kernel_class(self) -> LocalCohomClass:
        """tau_F itself, as a class in the dual variables."""
        out = None
        for a, p in zip(self.dual.lam, self.dual.psi):
            t = p.scale(self.b[a])
            out = t if out is None else out + t
        return out

    def residue(self, h):
        return residues(h, self)


def tau(F: Sequence[Polynomial], ring: Ring | None = None, max_degree: int = 64) -> ResidueMapData:
    """Compute the residue mapping of ``F`` at the origin."""
    F = list(F)
    ring = ring or F[0].ring
    n = ring.nvars
    if len(F) != n:
        raise ValueError(f"need {n} polynomials for {n} variables, got {len(F)}")
    with genericity_log() as log:
        D = psi_basis(F, ring, max_degree=max_degree)
        m = D.m
        J_O = annihilator_ideal(D.psi, ring)
        B = groebner_extended(F, ring)
        q = choose_unit(ideal_quotient(F, J_O, ring))
        P = tuple(localexpression(B, q, ring.gen(i) ** m[i]) for i in range(n))
        Det = determinant(P)
        ND = nf_monomial_ideal(Det, m)
        u, c = invert_mod_monomial(q, m)
        field = ring.field
        poly = u.scale(-c)
        NU = pow_truncated(poly, n, m)
        Num = mul_truncated(ND, NU, m)
        Den = (-c) ** n
        lam = D.ell
        coeff_all = {tuple(l - b for l, b in zip(lam, e)): v for e, v in Num.terms.items()}
        coeff = {a: coeff_all.get(a, field.zero) for a in D.lam}
    expansion = {}
    for a, p in zip(D.lam, D.psi):
        for e, v in p.terms.items():
            expansion[e] = expansion.get(e, field.zero) + coeff[a] * v
    expansion = {e: v for e, v in expansion.items() if v}
    if expansion != coeff_all:
        raise ResidueError("Num * xi^lambda is not in the span of the dual basis")
    data = TransformationData(q, P, Det, u, c, Den, ND, NU, Num, m)
    return ResidueMapData(D, coeff, Den, tuple(sorted(log | set(D.genericity))), data)


def residues(h, M: ResidueMapData):
    """Residue of ``h dz / (f_1...f_n)`` at the origin (h a polynomial or box series)."""
    if isinstance(h, str):
        h = M.ring.parse(h)
    field = M.ring.field
    coords = local_normal_form(h, M.dual)
    total = field.zero
    for a, v in coords.items():
        if v:
            total = total + v * M.coeff[a]
    return total * field.inv(M.den)
