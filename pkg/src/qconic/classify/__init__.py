"""End-to-end classification of noncommutative conics."""
from .pipeline import (
    InvariantRecord,
    ambient_type,
    build_algebra,
    classify,
    dual_presentation,
    sylvester_rank,
)
from .spec import FAMILIES, ConicSpec
from .tables import EXAMPLE_TABLE, AMBIENT_TABLE, COMMUTATIVE_TABLE, INVOLUTION_TABLE, UNKNOWN
from .verify import VerifyReport, verify_tables

__all__ = [
    "ConicSpec", "FAMILIES", "InvariantRecord", "UNKNOWN", "ambient_type", "build_algebra", "classify",
    "dual_presentation", "sylvester_rank", "verify_tables", "VerifyReport", "EXAMPLE_TABLE", "AMBIENT_TABLE",
    "COMMUTATIVE_TABLE", "INVOLUTION_TABLE",
]
