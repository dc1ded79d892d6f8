from fractions import Fraction
from typing import Annotated, Any, TypeAlias

from pydantic import BeforeValidator, PlainSerializer

FieldElement: TypeAlias = int
"""Canonical index in [0, q) of an element of F_q (little-endian base-p digits)."""


def _to_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, (int, str)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value).limit_denominator()
    raise ValueError(f"cannot read {value!r} as a rational")


Rational = Annotated[
    Fraction,
    BeforeValidator(_to_fraction),
    PlainSerializer(lambda f: str(f), return_type=str),
]
"""Exact rational that validates from int/str/Fraction and serializes as ``"p/q"``."""

