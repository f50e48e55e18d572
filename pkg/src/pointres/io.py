"""Problem files and JSON serialization.

Problem file: one ``key: value`` per line, ``#`` starts a comment.  Keys are
``vars``, ``params``, ``weights`` and ``F`` as comma/semicolon lists, ``order``
and ``h``.  ``F`` entries are separated by ``;``.  ``h`` is a polynomial, or a
box-truncated series written ``box(m_1,...,m_n): e_1,...,e_n = c; ...``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

from .cohomology import BoxSeries, DualData, LocalCohomClass, dual_ring, head_data
from .poly import MonomialOrder, PolySyntaxError, Ring, parse_coefficient
from .coefficients import make_field
from .residue import ResidueMapData

__all__ = [
    "ProblemError", "ProblemFile", "parse_problem", "load_problem", "exp_key", "parse_exp_key",
    "dual_to_json", "residue_map_to_json", "residue_map_from_json", "dumps",
]

KEYS = ("vars", "params", "weights", "order", "F", "h")
USER_ORDERS = ("wdeglex", "lex")


class ProblemError(ValueError):
    """Invalid problem file; ``key`` names the offending entry."""

    def __init__(self, key, message):
        self.key = key
        super().__init__(f"{key}: {message}")


@dataclass(frozen=True)
class ProblemFile:
    vars: tuple[str, ...]
    F: tuple[str, ...]
    params: tuple[str, ...] = ()
    weights: tuple[int, ...] | None = None
    order: str = "wdeglex"
    h: str | None = None

    def ring(self) -> Ring:
        return Ring(self.vars, make_field(self.params), MonomialOrder(self.order, self.weights))

    def polynomials(self, ring: Ring | None = None):
        ring = ring or self.ring()
        out = []
        for i, text in enumerate(self.F):
            try:
                out.append(ring.parse(text))
            except PolySyntaxError as exc:
                raise ProblemError(f"F[{i}]", str(exc)) from exc
        return out

    def numerator(self, ring: Ring | None = None):
        """The numerator ``h`` as a polynomial or :class:`BoxSeries` (None if absent)."""
        if self.h is None:
            return None
        ring = ring or self.ring()
        return parse_numerator(self.h, ring)


_BOX = re.compile(r"^\s*box\s*\(([^)]*)\)\s*:(.*)$", re.S)


def parse_numerator(text: str, ring: Ring):
    m = _BOX.match(text)
    try:
        if not m:
            return ring.parse(text)
        box = tuple(int(x) for x in m.group(1).split(","))
        coeffs = {}
        for entry in filter(None, (s.strip() for s in m.group(2).split(";"))):
            if "=" not in entry:
                raise ProblemError("h", f"table entry {entry!r} lacks '='")
            lhs, rhs = entry.split("=", 1)
            e = tuple(int(x) for x in lhs.split(","))
            if len(e) != ring.nvars:
                raise ProblemError("h", f"exponent {lhs.strip()!r} has the wrong length")
            coeffs[e] = parse_coefficient(rhs.strip(), ring.field)
        return BoxSeries(ring, coeffs, box)
    except PolySyntaxError as exc:
        raise ProblemError("h", str(exc)) from exc
    except ValueError as exc:
        if isinstance(exc, ProblemError):
            raise
        raise ProblemError("h", str(exc)) from exc


def _names(key, value):
    names = tuple(s.strip() for s in re.split(r"[,\s]+", value) if s.strip())
    for name in names:
        if not re.fullmatch(r"[A-Za-z][A-Za-z0-9]*", name):
            raise ProblemError(key, f"invalid name {name!r}")
    return names


def parse_problem(text: str) -> ProblemFile:
    raw: dict = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ProblemError(f"line {lineno}", "expected 'key: value'")
        key, value = (s.strip() for s in line.split(":", 1))
        if key not in KEYS:
            raise ProblemError(key, "unknown key")
        if key in raw:
            raise ProblemError(key, "given twice")
        raw[key] = value
    for key in ("vars", "F"):
        if key not in raw:
            raise ProblemError(key, "missing")
    variables = _names("vars", raw["vars"])
    params = _names("params", raw.get("params", ""))
    if not variables:
        raise ProblemError("vars", "no variables declared")
    if len(set(variables + params)) != len(variables) + len(params):
        raise ProblemError("params", "names must be distinct from each other and from vars")
    weights = None
    if "weights" in raw:
        try:
            weights = tuple(int(w) for w in re.split(r"[,\s]+", raw["weights"]) if w)
        except ValueError:
            raise ProblemError("weights", "expected positive integers") from None
        if len(weights) != len(variables):
            raise ProblemError("weights", f"expected {len(variables)} weights, got {len(weights)}")
        if any(w <= 0 for w in weights):
            raise ProblemError("weights", "weights must be positive")
    order = raw.get("order", "wdeglex")
    if order not in USER_ORDERS:
        raise ProblemError("order", f"expected one of {', '.join(USER_ORDERS)}")
    F = tuple(s.strip() for s in raw["F"].split(";") if s.strip())
    if len(F) != len(variables):
        raise ProblemError("F", f"expected {len(variables)} polynomials, got {len(F)}")
    prob = ProblemFile(variables, F, params, weights, order, raw.get("h"))
    ring = prob.ring()
    prob.polynomials(ring)
    prob.numerator(ring)
    return prob


def load_problem(path) -> ProblemFile:
    return parse_problem(Path(path).read_text())


# ---------------------------------------------------------------------------
# JSON


def exp_key(e) -> str:
    return ",".join(str(a) for a in e)


def parse_exp_key(s: str) -> tuple[int, ...]:
    return tuple(int(a) for a in s.split(",")) if s else ()


def _terms_json(p, ring):
    return {exp_key(e): ring.field.format(c) for e, c in p.sorted_terms()}


def dual_to_json(D: DualData) -> dict:
    ring = D.ring
    return {
        "lambda": [list(a) for a in D.lam],
        "psi": [{"head": list(p.head), "terms": _terms_json(p, ring)} for p in D.psi],
        "m": list(D.m),
        "genericity": list(D.genericity),
    }


def residue_map_to_json(M: ResidueMapData, residue=None, normal_form=None) -> dict:
    ring = M.ring
    out = dual_to_json(M.dual)
    del out["m"]
    out["coeff"] = {exp_key(a): ring.field.format(M.coeff[a]) for a in M.dual.lam}
    out["den"] = ring.field.format(M.den)
    if residue is not None:
        out["residue"] = ring.field.format(residue)
    if normal_form is not None:
        out["normal_form"] = {exp_key(a): ring.field.format(v) for a, v in normal_form.items()}
    out["genericity"] = list(M.genericity)
    return out


def residue_map_from_json(obj: dict, ring: Ring) -> ResidueMapData:
    field = ring.field
    dring = dual_ring(ring)
    psis = []
    for entry in obj["psi"]:
        terms = {parse_exp_key(k): parse_coefficient(v, field) for k, v in entry["terms"].items()}
        psis.append(LocalCohomClass(dring, terms))
    D = head_data(psis, ring)
    if [list(a) for a in D.lam] != obj["lambda"]:
        raise ValueError("lambda does not match the heads of psi")
    coeff = {parse_exp_key(k): parse_coefficient(v, field) for k, v in obj["coeff"].items()}
    return ResidueMapData(D, coeff, parse_coefficient(obj["den"], field),
                          tuple(obj.get("genericity", ())))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"
