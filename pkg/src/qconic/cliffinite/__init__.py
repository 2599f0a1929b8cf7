"""Finite-dimensional algebras, Clifford deformations and the C(A) classes."""
from .classes import CAClass, classify_CA, reference_algebra, signature
from .clifford import (
    CliffordMap,
    c_algebra,
    clifford_deformation,
    even_part,
    is_clifford_map,
    theta_from_central,
)
from .findim import (
    FinDimAlgebra,
    abelian_point_count,
    center_findim,
    min_poly,
    radical,
    radical_power_dims,
    spec_count,
)
from .groebner import groebner, standard_monomials

__all__ = [
    "CAClass", "classify_CA", "reference_algebra", "signature",
    "CliffordMap", "c_algebra", "clifford_deformation", "even_part", "is_clifford_map",
    "theta_from_central", "FinDimAlgebra", "abelian_point_count", "center_findim",
    "min_poly", "radical", "radical_power_dims", "spec_count", "groebner", "standard_monomials",
]
