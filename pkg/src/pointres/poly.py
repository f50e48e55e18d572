"""Sparse multivariate polynomials over an exact field.

Exponent vectors are plain tuples of ints; a polynomial is a dict from
exponent tuple to nonzero coefficient bound to a :class:`Ring`.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Mapping

from .coefficients import QQ, make_field

__all__ = [
    "MonomialOrder", "Ring", "Polynomial", "PolySyntaxError",
    "weighted_degree", "monomial_compare", "parse_poly", "format_poly",
    "monomials_up_to", "divides",
]

ORDER_KINDS = ("wdeglex", "lex", "elim")


def weighted_degree(weights, e) -> int:
    return sum(w * a for w, a in zip(weights, e))


def divides(a, b) -> bool:
    """True if the monomial with exponent ``a`` divides the one with ``b``."""
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialOrder:
    """A term order on exponent vectors.

    ``wdeglex`` compares weighted degree first and breaks ties lexicographically
    (first variable largest).  ``elim`` is a block order: the first ``block``
    variables are compared by total degree then lex, and ties are broken by
    ``inner`` on the remaining variables.
    """

    kind: str = "wdeglex"
    weights: tuple[int, ...] | None = None
    block: int = 0
    inner: "MonomialOrder | None" = None

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.weights is not None:
            object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
            if any(w <= 0 for w in self.weights):
                raise ValueError("weights must be positive integers")
        if self.kind == "elim" and (self.block <= 0 or self.inner is None):
            raise ValueError("an elimination order needs block >= 1 and an inner order")

    @property
    def degree_compatible(self) -> bool:
        return self.kind == "wdeglex"

    @cached_property
    def key(self) -> Callable[[tuple], tuple]:
        """Sort key: ``a`` precedes ``b`` in the order iff key(a) < key(b)."""
        if self.kind == "lex":
            return lambda e: e
        if self.kind == "wdeglex":
            w = self.weights
            if w is None:
                return lambda e: (sum(e), e)
            return lambda e: (sum(x * y for x, y in zip(w, e)), e)
        k, inner = self.block, self.inner.key
        return lambda e: (sum(e[:k]), e[:k], inner(e[k:]))

    def check_arity(self, n: int):
        if self.weights is not None:
            expect = n - self.block if self.kind == "elim" else n
            if len(self.weights) != expect:
                raise ValueError(f"order has {len(self.weights)} weights for {expect} variables")
        if self.inner is not None:
            self.inner.check_arity(n - self.block)

    def weight_vector(self, n: int) -> tuple[int, ...]:
        return self.weights if self.weights is not None else (1,) * n


def monomial_compare(order: MonomialOrder, a, b) -> int:
    """-1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    if len(a) != len(b):
        raise ValueError("exponent vectors of different length")
    ka, kb = order.key(tuple(a)), order.key(tuple(b))
    return (ka > kb) - (ka < kb)


def monomials_up_to(weights, bound: int) -> Iterable[tuple[int, ...]]:
    """All exponent vectors of weighted degree <= bound."""
    n = len(weights)

    def rec(i, left):
        if i == n:
            yield ()
            return
        for a in range(left // weights[i] + 1):
            for rest in rec(i + 1, left - a * weights[i]):
                yield (a,) + rest

    yield from rec(0, bound)


@dataclass(frozen=True)
class Ring:
    """Polynomial ring K[variables] with a fixed term order."""

    variables: tuple[str, ...]
    field: object = QQ
    order: MonomialOrder = dc_field(default_factory=MonomialOrder)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        if set(self.variables) & set(self.field.params):
            raise ValueError("a name is both a variable and a parameter")
        self.order.check_arity(len(self.variables))

    @classmethod
    def make(cls, variables, params=(), weights=None, order="wdeglex") -> "Ring":
        variables = tuple(variables)
        return cls(variables, make_field(params), MonomialOrder(order, weights))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def weights(self) -> tuple[int, ...]:
        return self.order.weight_vector(self.nvars)

    @property
    def zero_exp(self) -> tuple[int, ...]:
        return (0,) * self.nvars

    def with_order(self, order: MonomialOrder) -> "Ring":
        return Ring(self.variables, self.field, order)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {self.zero_exp: self.field(c)})

    def monomial(self, e, c=1) -> "Polynomial":
        return Polynomial(self, {tuple(e): self.field(c)})

    def gen(self, name_or_index) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self.variables.index(name_or_index)
        e = [0] * self.nvars
        e[i] = 1
        return self.monomial(e)

    @property
    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.gen(i) for i in range(self.nvars))

    def parse(self, text: str) -> "Polynomial":
        return parse_poly(text, self)

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise ValueError("polynomial belongs to a different ring")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return self.constant(value)


class Polynomial:
    """Immutable sparse polynomial.  ``terms`` maps exponent tuples to coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping | None = None):
        self.ring = ring
        self.terms = {tuple(e): c for e, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, ring, terms):
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        return obj

    # -- inspection ---------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    is_zero = property(lambda self: not self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if other == 0 and not self.terms:
            return True
        try:
            c = self.ring.field(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.terms == ({self.ring.zero_exp: c} if c else {})

    __hash__ = None

    def coeff(self, e):
        return self.terms.get(tuple(e), self.ring.field.zero)

    def constant_coeff(self):
        return self.coeff(self.ring.zero_exp)

    def sorted_terms(self, reverse: bool = True):
        return sorted(self.terms.items(), key=lambda t: self.ring.order.key(t[0]), reverse=reverse)

    @property
    def lead_exp(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=self.ring.order.key)

    @property
    def lead_coeff(self):
        return self.terms[self.lead_exp]

    def degree(self, var=None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = var if isinstance(var, int) else self.ring.variables.index(var)
        return max(e[i] for e in self.terms)

    def weighted_degree(self, weights=None) -> int:
        w = weights or self.ring.weights
        return max(weighted_degree(w, e) for e in self.terms) if self.terms else -1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("operands belong to different rings")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return type(self)._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = self.ring.field(c)
        if not c:
            return type(self)._raw(self.ring, {})
        return type(self)._raw(self.ring, {e: c * a for e, a in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return type(self)._raw(self.ring, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return type(self)._raw(self.ring, result.terms)

    def shift(self, e, c=None):
        """Multiply by the monomial c*z^e."""
        if c is None:
            return type(self)._raw(self.ring, {tuple(a + b for a, b in zip(x, e)): v
                                                for x, v in self.terms.items()})
        if not c:
            return type(self)._raw(self.ring, {})
        return type(self)._raw(self.ring, {tuple(a + b for a, b in zip(x, e)): c * v
                                            for x, v in self.terms.items()})

    def truncate(self, box) -> "Polynomial":
        """Drop every term with some exponent >= the matching box bound."""
        return type(self)._raw(self.ring, {e: c for e, c in self.terms.items()
                                           if all(a < m for a, m in zip(e, box))})

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lead_coeff))

    def diff(self, var):
        i = var if isinstance(var, int) else self.ring.variables.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                out[tuple(d)] = c * e[i]
        return type(self)._raw(self.ring, out)

    def map_coeffs(self, fn) -> "Polynomial":
        return type(self)(self.ring, {e: fn(c) for e, c in self.terms.items()})

    def to_ring(self, ring: Ring, positions=None) -> "Polynomial":
        """Move into ``ring``; ``positions[i]`` is the target index of variable i."""
        if positions is None:
            positions = [ring.variables.index(v) for v in self.ring.variables]
        out = {}
        for e, c in self.terms.items():
            t = [0] * ring.nvars
            for i, a in zip(positions, e):
                t[i] += a
            out[tuple(t)] = ring.field(c)
        return Polynomial(ring, out)

    # -- text ---------------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"{type(self).__name__}({format_poly(self)!r})"


# ---------------------------------------------------------------------------
# printing


def _monomial_text(e, names, latex=False) -> str:
    parts = []
    for name, a in zip(names, e):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{{{a}}}" if latex else f"{name}^{a}")
    return (" " if latex else "*").join(parts)


def format_terms(terms: Mapping, names, key, coeff_field=QQ, latex=False) -> str:
    """Format a term map with ``names`` for the exponent slots, descending by ``key``."""
    if not terms:
        return "0"
    out = []
    for i, e in enumerate(sorted(terms, key=key, reverse=True)):
        c = terms[e]
        mono = _monomial_text(e, names, latex)
        if latex:
            neg, body = _latex_parts(coeff_field, c)
        else:
            neg, body = coeff_field.term_parts(c)
        if body is None:
            text = mono or "1"
        elif not mono:
            text = body
        else:
            text = f"{body} {mono}" if latex else f"{body}*{mono}"
        if i == 0:
            out.append(("-" if neg else "") + text)
        else:
            out.append((" - " if latex else "-") if neg else (" + " if latex else "+"))
            out.append(text)
    return "".join(out)


def _latex_parts(coeff_field, c):
    neg, body = coeff_field.term_parts(c)
    if body is None or coeff_field.params:
        return neg, body
    mag = -c if neg else c
    return neg, coeff_field.latex(mag)


def format_poly(p: Polynomial, style: str = "plain", names=None) -> str:
    """Deterministic text form, terms descending in the ring's order."""
    if style not in ("plain", "latex"):
        raise ValueError(f"unknown style {style!r}")
    names = names or p.ring.variables
    return format_terms(p.terms, names, p.ring.order.key, p.ring.field, latex=(style == "latex"))


# ---------------------------------------------------------------------------
# parsing

class PolySyntaxError(ValueError):
    """Raised for malformed polynomial text; ``pos`` is the 0-based offset."""

    def __init__(self, message, pos=None, text=None):
        self.pos = pos
        self.text = text
        where = f" at position {pos}" if pos is not None else ""
        super().__init__(f"{message}{where}")


def _tokenize(text):
    toks = []
    pos, n = 0, len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch.isdigit():
            m = re.compile(r"\d+").match(text, pos)
            toks.append(("num", int(m.group()), pos))
            pos = m.end()
        elif ch.isalpha() or ch == "_":
            m = re.compile(r"[A-Za-z_][A-Za-z_0-9]*").match(text, pos)
            toks.append(("id", m.group(), pos))
            pos = m.end()
        elif ch in "+-*/^()":
            toks.append((ch, ch, pos))
            pos += 1
        else:
            raise PolySyntaxError(f"unexpected character {ch!r}", pos, text)
    toks.append(("end", None, n))
    return toks


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            self.fail(f"expected {kind!r}", tok)
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        found = "end of input" if tok[0] == "end" else repr(str(tok[1]))
        raise PolySyntaxError(f"{msg}, found {found}", tok[2], self.text)

    def parse(self):
        p = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected token")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            q = self.factor()
            if op == "*":
                p = p * q
            else:
                if not q.is_constant():
                    raise PolySyntaxError("division by a non-constant polynomial", pos, self.text)
                c = q.constant_coeff()
                if not c:
                    raise PolySyntaxError("division by zero", pos, self.text)
                p = p.scale(self.ring.field.inv(c))
        return p

    def factor(self):
        kind, val, pos = self.peek()
        if kind == "-":
            self.take()
            return -self.factor()
        if kind == "num":
            self.take()
            return self.ring.constant(val)
        if kind == "id":
            self.take()
            if val in self.ring.variables:
                base = self.ring.gen(val)
            elif val in self.ring.field.params:
                base = self.ring.constant(self.ring.field.gen(val))
            else:
                raise PolySyntaxError(f"undeclared identifier {val!r}", pos, self.text)
            if self.peek()[0] == "^":
                self.take()
                k = self.take("num")[1]
                return base ** k
            return base
        if kind == "(":
            self.take()
            p = self.expr()
            self.take(")")
            return p
        self.fail("expected a number, identifier or '('")


def parse_poly(text: str, ring: Ring) -> Polynomial:
    """Parse ``text`` into a polynomial of ``ring``.

    Grammar: expr := term (('+'|'-') term)*; term := factor (('*'|'/') factor)*;
    factor := int | ident | ident '^' nat | '(' expr ')' | '-' factor.
    A divisor must be a nonzero constant of the coefficient field.
    """
    if not isinstance(text, str):
        raise TypeError("expected a string")
    return _Parser(text, ring).parse()


def coefficient_ring(field) -> Ring:
    """Zero-variable ring over ``field``, used to parse bare coefficients."""
    return Ring((), field, MonomialOrder("lex"))


def parse_coefficient(text: str, field):
    p = parse_poly(text, coefficient_ring(field))
    return p.constant_coeff()


def format_coefficient(c, field) -> str:
    return field.format(c)


def all_exponents(box) -> Iterable[tuple[int, ...]]:
    return itertools.product(*(range(m) for m in box))


__all__ += ["format_terms", "coefficient_ring", "parse_coefficient", "format_coefficient",
            "all_exponents"]
