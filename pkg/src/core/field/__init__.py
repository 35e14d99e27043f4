"""
Finite field module для RGHW-Ramp

Арифметика GF(p^k) (galois backend), FieldElement, вложение подполя, норма и след.
"""

from src.core.field.finite_field import (
    MAX_FIELD_ORDER,
    FieldElement,
    FiniteField,
    SubfieldEmbedding,
    field_of_order,
    frobenius,
    make_field,
    norm_trace,
    norm_trace_arrays,
    parse_field_spec,
)

__all__ = [
    # Constants
    "MAX_FIELD_ORDER",
    # Types
    "FiniteField",
    "FieldElement",
    "SubfieldEmbedding",
    # Functions
    "make_field",
    "field_of_order",
    "parse_field_spec",
    "norm_trace",
    "norm_trace_arrays",
    "frobenius",
]
