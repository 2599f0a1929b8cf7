"""Free algebra on x, y, z and its quadratic quotients."""
from .free import UVW, XYZ, FreeElem, parse_free
from .quadalg import (
    DualPresentation,
    GradedBasis,
    QuadAlgebra,
    center_basis,
    commutative_algebra,
    graded_dim,
    graph_contains,
    is_quantum_candidate,
    multilinearize,
    quadratic_dual,
    skew_algebra,
    square_central,
)

__all__ = [
    "FreeElem", "parse_free", "XYZ", "UVW", "QuadAlgebra", "GradedBasis", "DualPresentation",
    "graded_dim", "is_quantum_candidate", "center_basis", "multilinearize", "graph_contains",
    "square_central", "quadratic_dual", "skew_algebra", "commutative_algebra",
]
