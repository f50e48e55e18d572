"""Command-line front end.

Exit codes: 0 success, 1 a mathematical precondition failed (or ``check``
found a mismatch), 2 bad input.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import replace

from .cohomology import (
    MissingCoefficientError, NotIsolatedError, local_normal_form, normal_form_polynomial, psi_basis,
)
from .corpus import random_polynomial
from .groebner import GroebnerError, ideal_membership, annihilator_ideal
from .io import (
    USER_ORDERS, ProblemError, dual_to_json, dumps, exp_key, load_problem, residue_map_to_json,
)
from .oracle import residue_via_transformation, verify_duality
from .poly import PolySyntaxError, format_poly
from .residue import ResidueError, residues, tau

COMMANDS = ("dual", "tau", "residue", "check", "milnor")

EXIT_OK, EXIT_MATH, EXIT_INPUT = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pointres",
                                 description="Point residues of zero-dimensional polynomial systems.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("problem", help="problem file (key: value lines)")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    ap.add_argument("--order", choices=USER_ORDERS, help="override the monomial order")
    ap.add_argument("--weights", help="override the weights, comma separated")
    ap.add_argument("--max-degree", type=int, default=64, help="staircase total-degree bound")
    ap.add_argument("--seed", type=int, default=0, help="seed for the random numerators of check")
    ap.add_argument("--samples", type=int, default=5, help="random numerators tried by check")
    return ap


def _load(args):
    prob = load_problem(args.problem)
    if args.order:
        prob = replace(prob, order=args.order)
    if args.weights:
        try:
            w = tuple(int(x) for x in args.weights.split(","))
        except ValueError:
            raise ProblemError("weights", "expected comma-separated positive integers") from None
        if len(w) != len(prob.vars) or any(x <= 0 for x in w):
            raise ProblemError("weights", f"expected {len(prob.vars)} positive integers")
        prob = replace(prob, weights=w)
    ring = prob.ring()
    return prob, ring, prob.polynomials(ring)


def _fmt(ring, c):
    return ring.field.format(c)


def cmd_dual(args, out):
    prob, ring, F = _load(args)
    D = psi_basis(F, ring, max_degree=args.max_degree)
    if args.json:
        out.write(dumps(dual_to_json(D)))
        return EXIT_OK
    out.write(f"dimension: {D.dimension}\n")
    out.write(f"m: {' '.join(map(str, D.m))}\n")
    for a, p in zip(D.lam, D.psi):
        out.write(f"psi[{exp_key(a)}] = {format_poly(p)}\n")
    if D.genericity:
        out.write(f"genericity: {', '.join(D.genericity)}\n")
    return EXIT_OK


def cmd_tau(args, out):
    prob, ring, F = _load(args)
    M = tau(F, ring, max_degree=args.max_degree)
    if args.json:
        out.write(dumps(residue_map_to_json(M)))
        return EXIT_OK
    out.write(f"den: {_fmt(ring, M.den)}\n")
    for a in M.dual.lam:
        out.write(f"coeff[{exp_key(a)}] = {_fmt(ring, M.coeff[a])}\n")
    if M.genericity:
        out.write(f"genericity: {', '.join(M.genericity)}\n")
    return EXIT_OK


def cmd_residue(args, out):
    prob, ring, F = _load(args)
    h = prob.numerator(ring)
    if h is None:
        raise ProblemError("h", "the residue command needs a numerator h")
    M = tau(F, ring, max_degree=args.max_degree)
    value = residues(h, M)
    nf = local_normal_form(h, M.dual)
    if args.json:
        out.write(dumps(residue_map_to_json(M, residue=value, normal_form=nf)))
        return EXIT_OK
    out.write(f"residue: {_fmt(ring, value)}\n")
    out.write(f"normal form: {format_poly(normal_form_polynomial(h, M.dual))}\n")
    return EXIT_OK


def cmd_check(args, out):
    prob, ring, F = _load(args)
    M = tau(F, ring, max_degree=args.max_degree)
    D = M.dual
    results = [("duality", verify_duality(D))]
    J_O = annihilator_ideal(D.psi, ring)
    results.append(("annihilation", all(ideal_membership(f, J_O) for f in F)))
    rng = random.Random(args.seed)
    numerators = [ring.one()]
    h = prob.numerator(ring)
    if h is not None and not hasattr(h, "box"):
        numerators.append(h)
    numerators += [random_polynomial(rng, ring) for _ in range(args.samples)]
    agree = all(residues(g, M) == residue_via_transformation(g, F, ring, m=D.m) for g in numerators)
    results.append((f"oracle ({len(numerators)} numerators)", agree))
    ok = all(r for _, r in results)
    if args.json:
        out.write(dumps({"checks": dict(results), "pass": ok}))
    else:
        for k, v in results:
            out.write(f"{k}: {'pass' if v else 'FAIL'}\n")
        out.write("pass\n" if ok else "FAIL\n")
    return EXIT_OK if ok else EXIT_MATH


def cmd_milnor(args, out):
    prob, ring, F = _load(args)
    D = psi_basis(F, ring, max_degree=args.max_degree)
    if args.json:
        out.write(dumps({"milnor": D.dimension}))
    else:
        out.write(f"{D.dimension}\n")
    return EXIT_OK


HANDLERS = {"dual": cmd_dual, "tau": cmd_tau, "residue": cmd_residue,
            "check": cmd_check, "milnor": cmd_milnor}


def run_command(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return HANDLERS[args.command](args, out)
    except (ProblemError, PolySyntaxError, MissingCoefficientError, OSError) as exc:
        err.write(f"input error: {exc}\n")
        return EXIT_INPUT
    except (NotIsolatedError, ResidueError, GroebnerError, ZeroDivisionError) as exc:
        err.write(f"math error: {exc}\n")
        return EXIT_MATH
    except ValueError as exc:
        err.write(f"input error: {exc}\n")
        return EXIT_INPUT


def main(argv=None) -> None:
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))
