"""Exact coefficient fields.

Two fields are supported: the rationals (backed by :class:`fractions.Fraction`)
and rational functions in a tuple of parameters over the rationals (backed by
sympy's sparse fraction field over ZZ, which keeps numerator and denominator
coprime with a positive leading denominator coefficient).

Divisions that the algorithms perform *by assumption* (pivots, leading
coefficients) go through :meth:`inv`.  Over a parametric field every
non-constant divisor is factored and its irreducible factors are written to the
active genericity logs, see :func:`genericity_log`.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from contextvars import ContextVar
from fractions import Fraction
from typing import Iterator

from sympy import ZZ
from sympy.polys.fields import FracElement, FracField

_ACTIVE_LOGS: ContextVar[tuple[set, ...]] = ContextVar("pointres_genericity_logs", default=())


@contextmanager
def genericity_log() -> Iterator[set]:
    """Collect parameter polynomials assumed nonzero inside the ``with`` block.

    Logs nest: an inner block also reports to every enclosing one.
    """
    log: set = set()
    token = _ACTIVE_LOGS.set(_ACTIVE_LOGS.get() + (log,))
    try:
        yield log
    finally:
        _ACTIVE_LOGS.reset(token)


class RationalField:
    """The field Q."""

    params: tuple[str, ...] = ()
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value) -> Fraction:
        return Fraction(value)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    def gen(self, name: str):
        raise KeyError(name)

    def inv(self, a: Fraction) -> Fraction:
        if not a:
            raise ZeroDivisionError("division by zero coefficient")
        return 1 / a

    def is_constant(self, a) -> bool:
        return True

    def constant_value(self, a) -> Fraction:
        return a

    def is_element(self, a) -> bool:
        return isinstance(a, Fraction)

    def integral_scale(self, coeffs, sign_ref=None) -> Fraction:
        """Scalar s with s*coeffs coprime integers; s*sign_ref > 0 if given."""
        coeffs = [c for c in coeffs if c]
        if not coeffs:
            return Fraction(1)
        den = math.lcm(*(c.denominator for c in coeffs))
        num = math.gcd(*(c.numerator for c in coeffs))
        s = Fraction(den, num)
        if sign_ref is not None and sign_ref * s < 0:
            s = -s
        return s

    # -- text -------------------------------------------------------------
    def term_parts(self, a: Fraction) -> tuple[bool, str | None]:
        """Split ``a`` into (negative, magnitude text); text None means 1."""
        neg = a < 0
        mag = -a if neg else a
        return neg, (None if mag == 1 else str(mag))

    def format(self, a: Fraction) -> str:
        return str(a)

    def latex(self, a: Fraction) -> str:
        if a.denominator == 1:
            return str(a.numerator)
        sign = "-" if a < 0 else ""
        return rf"{sign}\frac{{{abs(a.numerator)}}}{{{a.denominator}}}"


class RationalFunctionField:
    """The field Q(t_1, ..., t_k) of rational functions in the parameters."""

    def __init__(self, params):
        params = tuple(params)
        if not params:
            raise ValueError("a rational function field needs at least one parameter")
        if len(set(params)) != len(params):
            raise ValueError("duplicate parameter names")
        self.params = params
        self._K = FracField(params, ZZ)
        self._gens = dict(zip(params, self._K.gens))
        self.zero = self._K.zero
        self.one = self._K.one
        self._factor_cache: dict = {}

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.params == self.params

    def __hash__(self):
        return hash(("QQ(params)", self.params))

    def __repr__(self):
        return f"QQ({', '.join(self.params)})"

    def __call__(self, value):
        if isinstance(value, FracElement):
            if value.field != self._K:
                raise ValueError("element of a different fraction field")
            return value
        value = Fraction(value)
        return self._K(value.numerator) / value.denominator

    def gen(self, name: str):
        return self._gens[name]

    def is_element(self, a) -> bool:
        return isinstance(a, FracElement) and a.field == self._K

    def is_constant(self, a) -> bool:
        return a.numer.is_ground and a.denom.is_ground

    def constant_value(self, a) -> Fraction:
        if not self.is_constant(a):
            raise ValueError(f"{self.format(a)} is not a constant")
        return Fraction(int(a.numer.LC), int(a.denom.LC)) if a.numer else Fraction(0)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("division by zero coefficient")
        if not a.numer.is_ground:
            logs = _ACTIVE_LOGS.get()
            if logs:
                factors = self._factors(a.numer)
                for log in logs:
                    log.update(factors)
        return 1 / a

    def _factors(self, p) -> tuple[str, ...]:
        key = tuple(sorted(p.terms()))
        hit = self._factor_cache.get(key)
        if hit is None:
            _, fl = p.factor_list()
            out = []
            for fac, _mult in fl:
                if fac.is_ground:
                    continue
                if self._lead_sign(fac) < 0:
                    fac = -fac
                out.append(self._format_ring_poly(fac))
            hit = tuple(sorted(out))
            self._factor_cache[key] = hit
        return hit

    def integral_scale(self, coeffs, sign_ref=None):
        """Scalar s making every s*c a polynomial in Z[params] with trivial content.

        When ``sign_ref`` is given the leading coefficient of s*sign_ref is positive.
        """
        coeffs = [c for c in coeffs if c]
        if not coeffs:
            return self.one
        den = coeffs[0].denom
        for c in coeffs[1:]:
            den = den.lcm(c.denom)
        nums = [c.numer * den.exquo(c.denom) for c in coeffs]
        g = nums[0]
        for p in nums[1:]:
            g = g.gcd(p)
        s = self._K(den) / self._K(g)
        if sign_ref is not None and self._lead_sign((s * sign_ref).numer) < 0:
            s = -s
        return s

    # -- text -------------------------------------------------------------
    @staticmethod
    def _grlex(e):
        return (sum(e), e)

    def _format_ring_poly(self, p) -> str:
        from .poly import format_terms

        terms = {tuple(int(e) for e in m): Fraction(int(c)) for m, c in p.terms()}
        return format_terms(terms, self.params, key=self._grlex, coeff_field=QQ)

    def _lead_sign(self, p) -> int:
        m = max((tuple(int(e) for e in mono) for mono, _ in p.terms()), key=self._grlex)
        return 1 if p[m] > 0 else -1

    def term_parts(self, a) -> tuple[bool, str | None]:
        from .poly import format_terms

        if self.is_constant(a):
            return QQ.term_parts(self.constant_value(a))
        neg = self._lead_sign(a.numer) < 0
        numer = -a.numer if neg else a.numer
        if a.denom.is_ground:
            d = int(a.denom.LC)
            num = {tuple(int(e) for e in m): Fraction(int(c), d) for m, c in numer.terms()}
            text = format_terms(num, self.params, key=self._grlex, coeff_field=QQ)
            return neg, (f"({text})" if len(num) > 1 else text)
        return neg, f"({self._format_ring_poly(numer)})/({self._format_ring_poly(a.denom)})"

    def format(self, a) -> str:
        neg, text = self.term_parts(a)
        return ("-" if neg else "") + ("1" if text is None else text)

    def latex(self, a) -> str:
        return self.format(a)


QQ = RationalField()


def make_field(params=()) -> RationalField | RationalFunctionField:
    """Return Q when ``params`` is empty, otherwise Q(params)."""
    params = tuple(params)
    return RationalFunctionField(params) if params else QQ
