"""Algebraic local cohomology classes supported at the origin.

A class is a polynomial in dual variables: the monomial ``xi^l`` stands for
the Grothendieck symbol ``[1 / z^(l+1)]``.  The polynomial ring acts by
shifting, ``z^a * xi^b = xi^(b-a)`` when ``b >= a`` and 0 otherwise, and the
residue pairing of ``sum a_b z^b`` with ``sum c_g xi^g`` is ``sum a_g c_g``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Mapping, Sequence

from .coefficients import genericity_log
from .linalg import solve_sparse
from .poly import Polynomial, Ring, divides, format_poly, monomials_up_to, weighted_degree

__all__ = [
    "LocalCohomClass", "BoxSeries", "DualData", "NotIsolatedError", "MissingCoefficientError",
    "dual_ring", "act", "pairing", "psi_basis", "head_data", "local_normal_form",
    "normal_form_polynomial", "reduce_classes",
]


class NotIsolatedError(ArithmeticError):
    """The origin does not look like an isolated common zero of F."""


class MissingCoefficientError(KeyError):
    """A truncated series lacks a coefficient the pairing needs."""


def dual_ring(ring: Ring) -> Ring:
    """Ring of the dual variables, named ``xi_<var>``, with the same field and order."""
    return Ring(tuple(f"xi_{v}" for v in ring.variables), ring.field, ring.order)


class LocalCohomClass(Polynomial):
    """Polynomial in the dual variables representing a local cohomology class."""

    __slots__ = ()

    @classmethod
    def from_terms(cls, base: Ring, terms: Mapping) -> "LocalCohomClass":
        return cls(dual_ring(base), terms)

    @property
    def head(self) -> tuple[int, ...]:
        return self.lead_exp

    @property
    def tail(self) -> dict:
        h = self.head
        return {e: c for e, c in self.terms.items() if e != h}


class BoxSeries:
    """Power series known through its coefficients on ``[0,m_1) x ... x [0,m_n)``.

    Coefficients not listed inside the box are zero; asking for one outside
    the box raises :class:`MissingCoefficientError`.
    """

    def __init__(self, ring: Ring, coeffs: Mapping, box):
        self.ring = ring
        self.box = tuple(int(b) for b in box)
        if len(self.box) != ring.nvars:
            raise ValueError("box has the wrong number of bounds")
        self.terms = {}
        for e, c in coeffs.items():
            e = tuple(e)
            if not all(0 <= a < b for a, b in zip(e, self.box)):
                raise ValueError(f"coefficient {e} lies outside the box {self.box}")
            c = ring.field(c)
            if c:
                self.terms[e] = c

    @classmethod
    def from_polynomial(cls, p: Polynomial, box) -> "BoxSeries":
        return cls(p.ring, p.truncate(box).terms, box)

    def coeff(self, e):
        e = tuple(e)
        if not all(a < b for a, b in zip(e, self.box)):
            raise MissingCoefficientError(f"series coefficient {e} outside the box {self.box}")
        return self.terms.get(e, self.ring.field.zero)

    def to_polynomial(self) -> Polynomial:
        return Polynomial(self.ring, self.terms)


def act(p: Polynomial, psi: LocalCohomClass) -> LocalCohomClass:
    """The shift action ``p * psi``."""
    if p.ring.nvars != psi.ring.nvars:
        raise ValueError("variable counts differ")
    out: dict = {}
    zero = psi.ring.field.zero
    for a, ca in p.terms.items():
        for b, cb in psi.terms.items():
            if divides(a, b):
                d = tuple(y - x for x, y in zip(a, b))
                out[d] = out.get(d, zero) + ca * cb
    return LocalCohomClass._raw(psi.ring, {e: c for e, c in out.items() if c})


def pairing(h, psi: LocalCohomClass):
    """Residue pairing of a polynomial (or :class:`BoxSeries`) with a class."""
    field = psi.ring.field
    total = field.zero
    for g, c in psi.terms.items():
        a = h.coeff(g)
        if a:
            total = total + a * c
    return total


# ---------------------------------------------------------------------------
# dual basis


@dataclass(frozen=True)
class DualData:
    """Reduced basis of H_F with its head/lower exponent data.

    ``psi[k]`` has head ``lam[k]``; ``m[i] = ell[i] + 1`` and ``z_i^m_i`` kills
    every class.
    """

    ring: Ring
    psi: tuple[LocalCohomClass, ...]
    lam: tuple[tuple[int, ...], ...]
    lower: tuple[tuple[int, ...], ...]
    ell: tuple[int, ...]
    m: tuple[int, ...]
    genericity: tuple[str, ...] = ()

    @property
    def exponents(self) -> frozenset:
        """E_F: head and lower exponents together."""
        return frozenset(self.lam) | frozenset(self.lower)

    @property
    def dimension(self) -> int:
        return len(self.psi)

    def by_head(self) -> dict:
        return dict(zip(self.lam, self.psi))

    def __str__(self):
        return "\n".join(format_poly(p) for p in self.psi)


def head_data(psis: Sequence[LocalCohomClass], ring: Ring, genericity=()) -> DualData:
    """Derive Λ_F, L_F, ℓ and the box bounds m from a list of classes."""
    psis = sorted((p for p in psis if p), key=lambda p: ring.order.key(p.head))
    lam = tuple(p.head for p in psis)
    lower = set()
    for p in psis:
        lower.update(p.tail)
    n = ring.nvars
    support = set(lam) | lower
    ell = []
    for i in range(n):
        pure = [e[i] for e in support if all(e[k] == 0 for k in range(n) if k != i)]
        ell.append(max(pure, default=0))
    ell = tuple(ell)
    return DualData(ring, tuple(psis), lam, tuple(sorted(lower, key=ring.order.key)),
                    ell, tuple(l + 1 for l in ell), tuple(sorted(genericity)))


def reduce_classes(psis: Sequence[LocalCohomClass], ring: Ring) -> list[LocalCohomClass]:
    """Inter-reduce so that each class is monic and no head occurs in another class."""
    okey = ring.order.key
    field = ring.field
    done: list[LocalCohomClass] = []
    for p in sorted(psis, key=lambda p: okey(p.head) if p else ()):
        for q in sorted(done, key=lambda q: okey(q.head), reverse=True):
            c = p.coeff(q.head)
            if c:
                p = p - q.scale(c)
        if not p:
            continue
        p = p.scale(field.inv(p.lead_coeff))
        for k, q in enumerate(done):
            c = q.coeff(p.head)
            if c:
                done[k] = q - p.scale(c)
        done.append(p)
    return sorted(done, key=lambda p: okey(p.head))


def _candidate_system(F, alpha, unknowns, field):
    cols = {g: k for k, g in enumerate(unknowns)}
    support = list(unknowns) + [alpha]
    eqs: dict = {}
    zero = field.zero
    for i, f in enumerate(F):
        for s in support:
            for b, a in f.terms.items():
                if divides(b, s):
                    d = (i, tuple(x - y for x, y in zip(s, b)))
                    row = eqs.setdefault(d, [{}, zero])
                    if s == alpha:
                        row[1] = row[1] - a
                    else:
                        k = cols[s]
                        row[0][k] = row[0].get(k, zero) + a
    return [(row, rhs) for row, rhs in eqs.values()]


def psi_basis(F: Sequence[Polynomial], ring: Ring | None = None, max_degree: int = 64) -> DualData:
    """Reduced basis of H_F = {psi : f * psi = 0 for all f in F} by staircase growth.

    Candidate heads are popped in increasing order; a candidate is accepted when
    a class ``xi^alpha + (terms below alpha, off the accepted heads)`` is killed
    by every generator.  Rejected heads never return because the head set of a
    shift-stable space is a lower set.
    """
    F = list(F)
    if not F:
        raise ValueError("need at least one generator")
    ring = ring or F[0].ring
    if not ring.order.degree_compatible:
        raise ValueError("the dual basis needs a degree-compatible (weighted degree) order")
    w = ring.weights
    okey = ring.order.key
    field = ring.field
    dring = dual_ring(ring)
    n = ring.nvars
    accepted: list = []
    lam: set = set()
    zero = ring.zero_exp
    heap = [(okey(zero), zero)]
    queued = {zero}
    with genericity_log() as log:
        while heap:
            _, alpha = heapq.heappop(heap)
            if any(alpha[i] and alpha[:i] + (alpha[i] - 1,) + alpha[i + 1:] not in lam
                   for i in range(n)):
                continue
            if sum(alpha) > max_degree:
                raise NotIsolatedError(
                    f"staircase exceeds total degree {max_degree}: origin may not be an isolated solution")
            ka = okey(alpha)
            unknowns = [g for g in monomials_up_to(w, weighted_degree(w, alpha))
                        if g not in lam and okey(g) < ka]
            sol = solve_sparse(_candidate_system(F, alpha, unknowns, field), field)
            if sol is None:
                continue
            terms = {alpha: field.one}
            for k, v in sol.items():
                terms[unknowns[k]] = v
            accepted.append(LocalCohomClass(dring, terms))
            lam.add(alpha)
            for i in range(n):
                t = alpha[:i] + (alpha[i] + 1,) + alpha[i + 1:]
                if t not in queued:
                    queued.add(t)
                    heapq.heappush(heap, (okey(t), t))
    if not accepted:
        raise NotIsolatedError("the origin is not a common zero of F")
    return head_data(reduce_classes(accepted, ring), ring, genericity=log)


def local_normal_form(h, D: DualData) -> dict:
    """Coordinates ``h_alpha = <h, psi_alpha>`` of h in the monomial basis z^Λ."""
    return {a: pairing(h, p) for a, p in zip(D.lam, D.psi)}


def normal_form_polynomial(h, D: DualData) -> Polynomial:
    return Polynomial(D.ring, local_normal_form(h, D))
