"""
Sparse multivariate polynomials over F_q and their text format.

Text format: one polynomial per line, terms like ``c*x1^a1*...*xd^ad``
joined by ``+`` (``-`` is accepted too). Whitespace is insignificant,
integer coefficients are reduced mod p, blank lines and ``#`` comments are
skipped. Parsing goes through sympy so any expression that expands to a
polynomial with integer coefficients in x1..xd is accepted.
"""

import logging
from pathlib import Path

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from sympy import Integer, Poly, Symbol
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)

from ffdistlab.errors import ContractViolation, with_hint
from ffdistlab.field import add_array, f_neg, mul_array
from ffdistlab.field.arithmetic import pow_array

from .ambient import AmbientSpec

logger = logging.getLogger(__name__)

_TRANSFORMATIONS = (*standard_transformations, convert_xor)


class Term(BaseModel):
    """coefficient * x1^a1 * ... * xd^ad, with the coefficient a field element index."""

    model_config = ConfigDict(frozen=True)

    coefficient: int = Field(ge=0)
    exponents: tuple[int, ...]


class Polynomial(BaseModel):
    """A sum of terms, stored as given (x^q = x is not applied)."""

    model_config = ConfigDict(frozen=True)

    terms: tuple[Term, ...] = ()

    @property
    def total_degree(self) -> int:
        return max((sum(t.exponents) for t in self.terms if t.coefficient), default=0)

    def evaluate(self, ambient: AmbientSpec, coords: np.ndarray) -> np.ndarray:
        """Values at points given as a coordinate array of shape (n, d)."""
        spec = ambient.field
        coords = np.asarray(coords, dtype=np.int64)
        acc = np.zeros(coords.shape[0], dtype=np.int64)
        for term in self.terms:
            if len(term.exponents) != ambient.d:
                raise ContractViolation(
                    f"term {term!r} has {len(term.exponents)} exponents but the ambient dimension is {ambient.d}."
                )
            if term.coefficient == 0:
                continue
            value = np.full(coords.shape[0], term.coefficient, dtype=np.int64)
            for i, a in enumerate(term.exponents):
                if a:
                    value = mul_array(spec, value, pow_array(spec, coords[:, i], a))
            acc = add_array(spec, acc, value)
        return acc


def polynomial_from_terms(ambient: AmbientSpec, terms: list[tuple[int, tuple[int, ...]]]) -> Polynomial:
    """Build a polynomial from (integer coefficient, exponents) pairs, reducing mod p."""
    p = ambient.p
    return Polynomial(terms=tuple(Term(coefficient=c % p, exponents=tuple(e)) for c, e in terms))


def parse_polynomial(line: str, ambient: AmbientSpec) -> Polynomial:
    symbols = [Symbol(f"x{i + 1}") for i in range(ambient.d)]
    local = {str(s): s for s in symbols}
    try:
        expr = parse_expr(line, local_dict=local, transformations=_TRANSFORMATIONS)
        poly = Poly(expr, *symbols)
    except Exception as exc:
        raise ContractViolation(
            with_hint(
                f"cannot parse polynomial {line!r}: {exc}",
                f"Use terms like 2*x1^2*x{ambient.d} joined by '+', with variables x1..x{ambient.d}.",
            )
        ) from exc
    terms = []
    for exponents, coefficient in poly.terms():
        if not isinstance(coefficient, Integer):
            raise ContractViolation(f"coefficient {coefficient} in {line!r} is not an integer.")
        terms.append((int(coefficient), tuple(int(a) for a in exponents)))
    return polynomial_from_terms(ambient, terms)


def parse_polynomials(text: str, ambient: AmbientSpec) -> list[Polynomial]:
    polys = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            polys.append(parse_polynomial(line, ambient))
    logger.debug("Parsed %d polynomial(s) over %r", len(polys), ambient)
    return polys


def read_polynomials(path: str | Path, ambient: AmbientSpec) -> list[Polynomial]:
    return parse_polynomials(Path(path).read_text(encoding="utf-8"), ambient)


def sum_of_squares_minus(ambient: AmbientSpec, j: int) -> Polynomial:
    """x1^2 + ... + xd^2 - j."""
    d = ambient.d
    terms = [Term(coefficient=1, exponents=tuple(2 if k == i else 0 for k in range(d))) for i in range(d)]
    minus_j = f_neg(ambient.field, ambient.field.check(j))
    if minus_j:
        terms.append(Term(coefficient=minus_j, exponents=(0,) * d))
    return Polynomial(terms=tuple(terms))
