"""Exact arithmetic over Q(zeta_12) and its rational function extensions."""
from .cyclo import EPS, I_UNIT, ZETA, Cyclo
from .literal import LiteralError, format_field, parse_field
from .mpoly import MPoly
from .ratfunc import FieldContext, RatFunc, context_of
from .unipoly import (
    UniPoly,
    base_field_roots,
    common_root_count,
    distinct_root_count,
    gcd,
    resultant,
    squarefree_part,
)

QQZ = FieldContext(())

__all__ = [
    "Cyclo", "EPS", "I_UNIT", "ZETA", "FieldContext", "RatFunc", "QQZ", "context_of",
    "UniPoly", "MPoly", "LiteralError", "parse_field", "format_field", "base_field_roots",
    "common_root_count", "distinct_root_count", "gcd", "resultant", "squarefree_part",
]
