"""Estimator-style facade over the residue pipeline.

``fit`` takes the system ``F``; ``predict`` maps numerators to residues and
``transform`` maps them to local normal form coordinates on the basis z^Λ.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .cohomology import local_normal_form
from .poly import Polynomial, Ring
from .residue import residues, tau


class ResidueMapping(TransformerMixin, BaseEstimator):
    """Residue mapping of a system ``F`` at the origin.

    Parameters
    ----------
    variables : sequence of str, optional
        Needed when ``F`` is given as strings.
    params : sequence of str
        Parameter names; non-empty selects rational-function coefficients.
    weights : sequence of int, optional
        Weights of the weighted-degree order (default all 1).
    max_degree : int
        Bound on the staircase total degree.
    """

    def __init__(self, variables=None, params=(), weights=None, max_degree=64):
        self.variables = variables
        self.params = params
        self.weights = weights
        self.max_degree = max_degree

    def _ring_for(self, F) -> Ring:
        polys = [f for f in F if isinstance(f, Polynomial)]
        if polys:
            return polys[0].ring
        if self.variables is None:
            raise ValueError("string input needs the variables parameter")
        weights = tuple(self.weights) if self.weights is not None else None
        return Ring.make(tuple(self.variables), tuple(self.params), weights)

    def _coerce(self, items, ring):
        out = []
        for h in items:
            if isinstance(h, str):
                h = ring.parse(h)
            elif isinstance(h, Polynomial) and h.ring != ring:
                raise ValueError("polynomial belongs to a different ring")
            out.append(h)
        return out

    def fit(self, F, y=None):
        ring = self._ring_for(F)
        self.ring_ = ring
        self.residue_map_ = tau(self._coerce(F, ring), ring, max_degree=self.max_degree)
        self.basis_ = self.residue_map_.dual.lam
        self.n_basis_ = len(self.basis_)
        self.genericity_ = self.residue_map_.genericity
        return self

    def _check_fitted(self):
        if not hasattr(self, "residue_map_"):
            raise NotFittedError("call fit before using this ResidueMapping")

    def predict(self, H):
        """Residue of ``h dz / (f_1...f_n)`` for each numerator in ``H``."""
        self._check_fitted()
        return [residues(h, self.residue_map_) for h in self._coerce(H, self.ring_)]

    def transform(self, H):
        self._check_fitted()
        D = self.residue_map_.dual
        rows = []
        for h in self._coerce(H, self.ring_):
            nf = local_normal_form(h, D)
            rows.append([nf[a] for a in D.lam])
        return rows
