"""
Field module - exact arithmetic in F_q for odd prime powers q.

Elements are canonical integer indices; `FieldSpec` carries p, e and the
modulus, and the functions below implement the field operations on indices.
"""

from .arithmetic import (
    add_array,
    f_add,
    f_inv,
    f_mul,
    f_neg,
    f_pow,
    f_sub,
    field_tables,
    is_primitive,
    is_square,
    mul_array,
    multiplicative_order,
    neg_array,
    primitive_element,
    square_array,
    trace,
    trace_array,
)
from .spec import FieldSpec

__all__ = [
    "FieldSpec",
    "add_array",
    "f_add",
    "f_inv",
    "f_mul",
    "f_neg",
    "f_pow",
    "f_sub",
    "field_tables",
    "is_primitive",
    "is_square",
    "mul_array",
    "multiplicative_order",
    "neg_array",
    "primitive_element",
    "square_array",
    "trace",
    "trace_array",
]
