"""Exact point residues of zero-dimensional polynomial systems via algebraic local cohomology."""

from .coefficients import QQ, RationalFunctionField, genericity_log, make_field
from .poly import MonomialOrder, Polynomial, PolySyntaxError, Ring, format_poly, parse_poly
from .groebner import (
    ExtendedBasis, GroebnerError, annihilator_ideal, eliminate, groebner, groebner_extended,
    ideal_membership, ideal_quotient, intersect, normal_form, standard_monomials,
)
from .cohomology import (
    BoxSeries, DualData, LocalCohomClass, MissingCoefficientError, NotIsolatedError, act,
    local_normal_form, pairing, psi_basis,
)
from .residue import (
    ResidueError, ResidueMapData, TransformationData, invert_mod_monomial, localexpression,
    residues, tau,
)
from .oracle import milnor_count, residue_via_transformation, series_inverse_box, verify_duality

__version__ = "0.1.0"


def __getattr__(name):
    # keep scikit-learn off the import path unless the facade is used
    if name == "ResidueMapping":
        from .estimator import ResidueMapping

        return ResidueMapping
    raise AttributeError(name)
