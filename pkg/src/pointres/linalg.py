"""Sparse exact Gauss-Jordan elimination over a coefficient field."""

from __future__ import annotations


def solve_sparse(rows, field):
    """Solve a sparse linear system exactly.

    ``rows`` is an iterable of ``(coeffs, rhs)`` with ``coeffs`` a dict
    column -> value.  Columns must be mutually comparable; the smallest
    column of a row is taken as its pivot.  Returns a dict column -> value
    (free columns are set to zero and omitted) or ``None`` when the system is
    inconsistent.
    """
    pivots: dict = {}  # pivot column -> (row dict with pivot 1, rhs)
    zero = field.zero
    for coeffs, rhs in rows:
        row = {k: v for k, v in coeffs.items() if v}
        for col in [c for c in row if c in pivots]:
            a = row.get(col)
            if not a:
                continue
            prow, prhs = pivots[col]
            for k, v in prow.items():
                s = row.get(k, zero) - a * v
                if s:
                    row[k] = s
                else:
                    row.pop(k, None)
            rhs = rhs - a * prhs
        if not row:
            if rhs:
                return None
            continue
        col = min(row)
        inv = field.inv(row[col])
        row = {k: v * inv for k, v in row.items()}
        rhs = rhs * inv
        for pc, (prow, prhs) in list(pivots.items()):
            a = prow.get(col)
            if a:
                for k, v in row.items():
                    s = prow.get(k, zero) - a * v
                    if s:
                        prow[k] = s
                    else:
                        prow.pop(k, None)
                pivots[pc] = (prow, prhs - a * rhs)
        pivots[col] = (row, rhs)
    return {col: rhs for col, (row, rhs) in pivots.items() if rhs}
