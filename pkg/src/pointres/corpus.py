"""Random problem generators for property checks.

Each system has the form ``f_i = z_i^a_i + (higher local order terms)`` with
``sum(e_j / a_j) > 1`` for every extra term, so the origin is an isolated
zero of multiplicity ``prod(a_i)``; the extra terms usually add zeros away
from the origin, which makes the unit ``q`` nontrivial.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .poly import Polynomial, Ring


def _higher_terms(a, max_total):
    n = len(a)
    out = []

    def rec(prefix):
        if len(prefix) == n:
            e = tuple(prefix)
            if sum(Fraction(x, y) for x, y in zip(e, a)) > 1 and sum(e) <= max_total:
                out.append(e)
            return
        for k in range(max_total + 1 - sum(prefix)):
            rec(prefix + [k])

    rec([])
    return out


def random_system(rng: random.Random, ring: Ring, max_mult: int = 30, max_extra: int = 3,
                  coeff_range: int = 3) -> list[Polynomial]:
    """Random ``[f_1..f_n]`` with an isolated zero of multiplicity <= max_mult at O."""
    n = ring.nvars
    while True:
        a = [rng.randint(1, 6 if n == 2 else 3) for _ in range(n)]
        mult = 1
        for x in a:
            mult *= x
        if mult <= max_mult:
            break
    F = []
    for i in range(n):
        e = [0] * n
        e[i] = a[i]
        terms = {tuple(e): ring.field(rng.choice([1, 1, 2, 3, -1]))}
        pool = _higher_terms(a, max(a) + 1)
        for ex in rng.sample(pool, min(len(pool), rng.randint(0, max_extra))):
            c = rng.randint(-coeff_range, coeff_range)
            if c:
                terms[ex] = terms.get(ex, ring.field.zero) + c
        F.append(Polynomial(ring, terms))
    return F


def random_polynomial(rng: random.Random, ring: Ring, max_degree: int = 6, nterms: int = 5,
                      coeff_range: int = 5) -> Polynomial:
    terms = {}
    n = ring.nvars
    for _ in range(nterms):
        e = [0] * n
        for _ in range(rng.randint(0, max_degree)):
            e[rng.randrange(n)] += 1
        c = Fraction(rng.randint(-coeff_range, coeff_range), rng.randint(1, 3))
        terms[tuple(e)] = terms.get(tuple(e), 0) + c
    return Polynomial(ring, {e: ring.field(c) for e, c in terms.items()})
