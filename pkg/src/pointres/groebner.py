"""Gröbner bases with cofactors and syzygies, quotients and elimination.

All computations run on one Buchberger engine over free modules.  A module
element is a dict ``{(position, exponent): coeff}``; ideals are the rank-one
case with every position equal to 0.

The extended basis of ``F = [f_1..f_n]`` is read off a single module basis of
the vectors ``(f_i, e_i)`` in ``K[z]^(1+n)`` under an order where component 0
dominates and the cofactor components are compared term-over-position.
Elements led by component 0 give ``g_j`` together with its cofactors, the
remaining ones are a Gröbner basis of the syzygy module of ``F``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from .poly import MonomialOrder, Polynomial, Ring, divides

__all__ = [
    "groebner", "normal_form", "ideal_membership", "ExtendedBasis", "groebner_extended",
    "reduce_with_cofactors", "reduce_module", "ideal_quotient", "intersect", "eliminate",
    "annihilator_ideal", "standard_monomials", "GroebnerError",
]


class GroebnerError(ArithmeticError):
    """A computed basis failed one of its defining identities."""


# ---------------------------------------------------------------------------
# engine


def _add_scaled(p, g, shift, c):
    """p -= c * z^shift * g, in place."""
    for (pos, e), gc in g.items():
        t = (pos, tuple(a + b for a, b in zip(e, shift)))
        v = p.get(t)
        if v is None:
            p[t] = -c * gc
        else:
            v = v - c * gc
            if v:
                p[t] = v
            else:
                del p[t]


def _reduce(v, basis, mkey, quotients=None):
    """Full normal form of ``v`` modulo monic ``basis`` = [(lead, vec)].

    Divisor rule: the first basis element whose lead divides the current term.
    When ``quotients`` is a list of dicts, multipliers are accumulated there.
    """
    p = dict(v)
    rem = {}
    while p:
        m = max(p, key=mkey)
        c = p[m]
        pos, e = m
        for j, (lm, g) in enumerate(basis):
            if lm[0] == pos and divides(lm[1], e):
                s = tuple(a - b for a, b in zip(e, lm[1]))
                _add_scaled(p, g, s, c)
                if quotients is not None:
                    q = quotients[j]
                    old = q.get(s)
                    q[s] = c if old is None else old + c
                    if not q[s]:
                        del q[s]
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _monic(v, mkey, field):
    lm = max(v, key=mkey)
    inv = field.inv(v[lm])
    return lm, {t: c * inv for t, c in v.items()}


def _spair(a, b):
    (la, ga), (lb, gb) = a, b
    lcm = tuple(max(x, y) for x, y in zip(la[1], lb[1]))
    sa = tuple(x - y for x, y in zip(lcm, la[1]))
    sb = tuple(x - y for x, y in zip(lcm, lb[1]))
    out = {(pos, tuple(x + y for x, y in zip(e, sa))): c for (pos, e), c in ga.items()}
    _add_scaled(out, gb, sb, 1)
    return out


def _buchberger(gens, mkey, field, rank_one=False):
    basis = []
    for v in gens:
        if v:
            basis.append(_monic(v, mkey, field))
    heap = []
    pending = set()

    def push(i, j):
        li, lj = basis[i][0], basis[j][0]
        if li[0] != lj[0]:
            return
        lcm = (li[0], tuple(max(x, y) for x, y in zip(li[1], lj[1])))
        heapq.heappush(heap, (mkey(lcm), i, j, lcm))
        pending.add((i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)
    while heap:
        _, i, j, lcm = heapq.heappop(heap)
        pending.discard((i, j))
        li, lj = basis[i][0], basis[j][0]
        if rank_one and all(min(x, y) == 0 for x, y in zip(li[1], lj[1])):
            continue
        if any(k != i and k != j and basis[k][0][0] == lcm[0] and divides(basis[k][0][1], lcm[1])
               and (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending
               for k in range(len(basis))):
            continue
        h = _reduce(_spair(basis[i], basis[j]), basis, mkey)
        if h:
            basis.append(_monic(h, mkey, field))
            n = len(basis) - 1
            for i2 in range(n):
                push(i2, n)
    return _interreduce(basis, mkey, field)


def _interreduce(basis, mkey, field):
    basis = sorted(basis, key=lambda b: mkey(b[0]))
    minimal = []
    for lm, g in basis:
        if not any(l2[0] == lm[0] and divides(l2[1], lm[1]) for l2, _ in minimal):
            minimal.append((lm, g))
    out = []
    for idx, (lm, g) in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        r = _reduce(g, others, mkey)
        out.append(_monic(r, mkey, field))
    return out


def _poly_key(order: MonomialOrder):
    okey = order.key
    return lambda t: okey(t[1])


def _to_vec(p: Polynomial, pos=0):
    return {(pos, e): c for e, c in p.terms.items()}


def _from_vec(v, ring, pos=0):
    return Polynomial._raw(ring, {e: c for (q, e), c in v.items() if q == pos})


# ---------------------------------------------------------------------------
# ideals


def _common_ring(polys, ring=None) -> Ring:
    polys = list(polys)
    if ring is None:
        if not polys:
            raise ValueError("cannot infer the ring of an empty generator list")
        ring = polys[0].ring
    for p in polys:
        if p.ring != ring:
            raise ValueError("generators belong to different rings")
    return ring


def groebner(polys: Sequence[Polynomial], ring: Ring | None = None) -> list[Polynomial]:
    """Reduced Gröbner basis, monic, sorted by increasing head."""
    ring = _common_ring(polys, ring)
    mkey = _poly_key(ring.order)
    basis = _buchberger([_to_vec(p) for p in polys], mkey, ring.field, rank_one=True)
    return [_from_vec(g, ring) for _, g in basis]


def _as_basis(G):
    ring = G[0].ring
    mkey = _poly_key(ring.order)
    return [((0, g.lead_exp), _to_vec(g)) for g in G], mkey


def normal_form(p: Polynomial, G: Sequence[Polynomial]) -> Polynomial:
    """Normal form of ``p`` modulo the (monic) basis ``G``."""
    if not G:
        return p
    if any(g.lead_coeff != p.ring.field.one for g in G):
        G = [g.monic() for g in G]
    basis, mkey = _as_basis(G)
    return _from_vec(_reduce(_to_vec(p), basis, mkey), p.ring)


def ideal_membership(p: Polynomial, G: Sequence[Polynomial]) -> bool:
    return not normal_form(p, G)


def standard_monomials(G: Sequence[Polynomial], ring: Ring) -> list[tuple[int, ...]]:
    """Monomials outside the leading ideal of a zero-dimensional basis ``G``."""
    heads = [g.lead_exp for g in G]
    n = ring.nvars
    for i in range(n):
        if not any(h[i] > 0 and sum(h) == h[i] for h in heads) and not any(not any(h) for h in heads):
            raise ValueError("ideal is not zero-dimensional")
    out, frontier, seen = [], [ring.zero_exp], {ring.zero_exp}
    while frontier:
        e = frontier.pop()
        if any(divides(h, e) for h in heads):
            continue
        out.append(e)
        for i in range(n):
            t = e[:i] + (e[i] + 1,) + e[i + 1:]
            if t not in seen:
                seen.add(t)
                frontier.append(t)
    return sorted(out, key=ring.order.key)


# ---------------------------------------------------------------------------
# extended basis


@dataclass(frozen=True)
class ExtendedBasis:
    """Reduced Gröbner basis of <F> with cofactors and a syzygy basis.

    ``R[j][i]`` is the cofactor of ``F[i]`` in ``G[j]``; each ``S[k]`` is an
    n-tuple with ``sum(S[k][i] * F[i]) == 0``.
    """

    F: tuple[Polynomial, ...]
    G: tuple[Polynomial, ...]
    R: tuple[tuple[Polynomial, ...], ...]
    S: tuple[tuple[Polynomial, ...], ...]
    ring: Ring

    def combine(self, coeffs) -> Polynomial:
        out = self.ring.zero()
        for c, f in zip(coeffs, self.F):
            out = out + c * f
        return out

    def check(self):
        for j, g in enumerate(self.G):
            if self.combine(self.R[j]) != g:
                raise GroebnerError(f"cofactor identity fails for basis element {j}")
        for k, s in enumerate(self.S):
            if self.combine(s):
                raise GroebnerError(f"syzygy {k} does not vanish")
        basis, mkey = _as_basis(list(self.G)) if self.G else ([], None)
        for b in range(len(basis)):
            for a in range(b):
                if _reduce(_spair(basis[a], basis[b]), basis, mkey):
                    raise GroebnerError("S-polynomial does not reduce to zero")


def _extended_key(order: MonomialOrder):
    okey = order.key

    def key(t):
        pos, e = t
        return (1, okey(e), 0) if pos == 0 else (0, okey(e), -pos)

    return key


def groebner_extended(F: Sequence[Polynomial], ring: Ring | None = None, check: bool = True) -> ExtendedBasis:
    ring = _common_ring(F, ring)
    n = len(F)
    zero = ring.zero_exp
    gens = []
    for i, f in enumerate(F):
        v = _to_vec(f)
        v[(i + 1, zero)] = ring.field.one
        gens.append(v)
    mkey = _extended_key(ring.order)
    basis = _buchberger(gens, mkey, ring.field)
    G, R, S = [], [], []
    for lm, v in basis:
        cof = tuple(_from_vec(v, ring, i + 1) for i in range(n))
        if lm[0] == 0:
            G.append(_from_vec(v, ring))
            R.append(cof)
        else:
            S.append(cof)
    B = ExtendedBasis(tuple(F), tuple(G), tuple(R), tuple(S), ring)
    if check:
        B.check()
    return B


def reduce_with_cofactors(p: Polynomial, B: ExtendedBasis):
    """Divide ``p`` by ``B.G``: returns ``(nf, e)`` with ``p == sum(e_j*g_j) + nf``."""
    ring = B.ring
    if not B.G:
        return p, []
    basis, mkey = _as_basis(list(B.G))
    quotients = [{} for _ in basis]
    rem = _reduce(_to_vec(p), basis, mkey, quotients)
    return _from_vec(rem, ring), [Polynomial._raw(ring, q) for q in quotients]


def reduce_module(vec: Sequence[Polynomial], S: Sequence[Sequence[Polynomial]], ring: Ring):
    """Normal form of a vector of polynomials modulo the module basis ``S``."""
    mkey = _extended_key(ring.order)
    v = {}
    for i, p in enumerate(vec):
        v.update(_to_vec(p, i + 1))
    basis = []
    for s in S:
        sv = {}
        for i, p in enumerate(s):
            sv.update(_to_vec(p, i + 1))
        if sv:
            basis.append(_monic(sv, mkey, ring.field))
    r = _reduce(v, basis, mkey)
    return tuple(_from_vec(r, ring, i + 1) for i in range(len(vec)))


# ---------------------------------------------------------------------------
# elimination, intersection, quotient


def _prepend_ring(ring: Ring, names) -> Ring:
    names = tuple(names)
    order = MonomialOrder("elim", block=len(names), inner=ring.order)
    return Ring(names + ring.variables, ring.field, order)


def eliminate(gens: Sequence[Polynomial], drop, ring: Ring | None = None):
    """Eliminate the variables in ``drop``.

    Returns ``(elim, full)``: the reduced basis of the elimination ideal in the
    ring of the kept variables, and the reduced basis in the block order with
    the dropped variables first.
    """
    ring = _common_ring(gens, ring)
    drop = tuple(drop)
    if not set(drop) <= set(ring.variables):
        raise ValueError("can only eliminate ring variables")
    keep = tuple(v for v in ring.variables if v not in drop)
    inner = ring.order if not drop else _kept_order(ring, keep)
    kept_ring = Ring(keep, ring.field, inner)
    big = _prepend_ring(kept_ring, drop) if drop else ring
    full = groebner([g.to_ring(big) for g in gens], big)
    k = len(drop)
    elim = [Polynomial(kept_ring, {e[k:]: c for e, c in g.terms.items()})
            for g in full if all(not any(e[:k]) for e in g.terms)]
    return elim, full


def _kept_order(ring: Ring, keep) -> MonomialOrder:
    o = ring.order
    if o.kind == "wdeglex" and o.weights is not None:
        idx = [ring.variables.index(v) for v in keep]
        return MonomialOrder("wdeglex", tuple(o.weights[i] for i in idx))
    if o.kind == "elim":
        return MonomialOrder("wdeglex")
    return MonomialOrder(o.kind)


def _aux_ring(ring: Ring) -> Ring:
    return _prepend_ring(ring, ("_s",))


def intersect(A: Sequence[Polynomial], B: Sequence[Polynomial], ring: Ring) -> list[Polynomial]:
    """Reduced basis of <A> ∩ <B>."""
    if not A or not B:
        return []
    big = _aux_ring(ring)
    s = big.gen(0)
    gens = [s * a.to_ring(big) for a in A] + [(1 - s) * b.to_ring(big) for b in B]
    full = groebner(gens, big)
    return [Polynomial(ring, {e[1:]: c for e, c in g.terms.items()})
            for g in full if all(e[0] == 0 for e in g.terms)]


def _exact_divide(p: Polynomial, d: Polynomial) -> Polynomial:
    ring = p.ring
    basis, mkey = _as_basis([d.monic()])
    quotients = [{}]
    rem = _reduce(_to_vec(p), basis, mkey, quotients)
    if rem:
        raise GroebnerError("inexact polynomial division")
    return Polynomial._raw(ring, quotients[0]).scale(ring.field.inv(d.lead_coeff))


def ideal_quotient(A: Sequence[Polynomial], B: Sequence[Polynomial], ring: Ring | None = None):
    """Reduced Gröbner basis of <A> : <B>, the intersection of the colons by each b."""
    ring = _common_ring(list(A) + list(B), ring)
    A = [a for a in A if a]
    B = [b for b in B if b]
    if not B:
        return [ring.one()]
    result = None
    for b in B:
        if not A:
            colon = []
        else:
            colon = groebner([_exact_divide(g, b) for g in intersect(A, [b], ring)], ring)
        result = colon if result is None else intersect(result, colon, ring)
    return groebner(result, ring) if result else []


# ---------------------------------------------------------------------------
# ideal of a finite dual space


def annihilator_ideal(psi, ring: Ring) -> list[Polynomial]:
    """Reduced basis of {p : <p, psi> = 0 for every class psi}.

    ``psi`` is a sequence of objects with a ``terms`` map (exponent -> coeff)
    spanning a space closed under the shift action, so the orthogonal is an
    ideal.  Monomials are processed in increasing order; each one is either a
    new standard monomial (its pairing vector is independent) or yields a basis
    element with that head.
    """
    field = ring.field
    okey = ring.order.key
    classes = [dict(p.terms) for p in psi]
    n = ring.nvars
    pivots: list = []  # (pivot index, reduced vector, combination over standard monomials)
    standard: list = []
    heads: list = []
    basis: list[Polynomial] = []
    zero = ring.zero_exp
    heap = [(okey(zero), zero)]
    seen = {zero}
    while heap:
        _, e = heapq.heappop(heap)
        if any(divides(h, e) for h in heads):
            continue
        vec = {k: c[e] for k, c in enumerate(classes) if e in c}
        comb = {e: field.one}
        for piv, pv, pc in pivots:
            a = vec.get(piv)
            if a:
                for k, c in pv.items():
                    s = vec.get(k, field.zero) - a * c
                    if s:
                        vec[k] = s
                    else:
                        vec.pop(k, None)
                for m, c in pc.items():
                    s = comb.get(m, field.zero) - a * c
                    if s:
                        comb[m] = s
                    else:
                        comb.pop(m, None)
        if vec:
            piv = min(vec)
            inv = field.inv(vec[piv])
            pivots.append((piv, {k: c * inv for k, c in vec.items()},
                           {m: c * inv for m, c in comb.items()}))
            standard.append(e)
            for i in range(n):
                t = e[:i] + (e[i] + 1,) + e[i + 1:]
                if t not in seen:
                    seen.add(t)
                    heapq.heappush(heap, (okey(t), t))
        else:
            heads.append(e)
            basis.append(Polynomial(ring, comb))
    return sorted(basis, key=lambda g: okey(g.lead_exp))
