"""
Arithmetic in F_q on canonical element indices.

Scalar operations (`f_add`, `f_mul`, ...) follow the definitions directly.
Array operations work on numpy index arrays and are what the dense kernels
use; for e > 1 they go through discrete log/exp tables, with a full q x q
multiplication table when q is at most `settings.table_limit`.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from sympy import primefactors

from ffdistlab.errors import ContractViolation, with_hint
from ffdistlab.settings import settings
from ffdistlab.types import FieldElement

from .spec import FieldSpec, poly_mulmod

logger = logging.getLogger(__name__)


# =============================================================================
# Scalar operations
# =============================================================================


def f_add(spec: FieldSpec, a: FieldElement, b: FieldElement) -> FieldElement:
    """Coefficient-wise sum mod p."""
    spec.check(a)
    spec.check(b)
    if spec.e == 1:
        return (a + b) % spec.p
    return spec.from_digits([x + y for x, y in zip(spec.digits(a), spec.digits(b))])


def f_neg(spec: FieldSpec, a: FieldElement) -> FieldElement:
    spec.check(a)
    if spec.e == 1:
        return (-a) % spec.p
    return spec.from_digits([-x for x in spec.digits(a)])


def f_sub(spec: FieldSpec, a: FieldElement, b: FieldElement) -> FieldElement:
    return f_add(spec, a, f_neg(spec, b))


def f_mul(spec: FieldSpec, a: FieldElement, b: FieldElement) -> FieldElement:
    """Polynomial product reduced by the modulus."""
    spec.check(a)
    spec.check(b)
    if spec.e == 1:
        return (a * b) % spec.p
    prod = poly_mulmod(spec.digits(a), spec.digits(b), list(spec.modulus), spec.p)
    return spec.from_digits(prod)


def f_pow(spec: FieldSpec, a: FieldElement, n: int) -> FieldElement:
    """Square-and-multiply. Negative exponents go through the inverse."""
    spec.check(a)
    if n < 0:
        return f_pow(spec, f_inv(spec, a), -n)
    if spec.e == 1:
        return pow(a, n, spec.p)
    result, base = 1, a
    while n:
        if n & 1:
            result = f_mul(spec, result, base)
        base = f_mul(spec, base, base)
        n >>= 1
    return result


def f_inv(spec: FieldSpec, a: FieldElement) -> FieldElement:
    """Multiplicative inverse, a^(q-2)."""
    spec.check(a)
    if a == 0:
        raise ContractViolation(
            with_hint("zero has no inverse", "Filter out the zero element before inverting.")
        )
    if spec.e == 1:
        return pow(a, -1, spec.p)
    return f_pow(spec, a, spec.q - 2)


def trace(spec: FieldSpec, a: FieldElement) -> int:
    """Tr(a) = a + a^p + ... + a^(p^(e-1)), an integer in [0, p)."""
    spec.check(a)
    total, conj = 0, a
    for _ in range(spec.e):
        total = f_add(spec, total, conj)
        conj = f_pow(spec, conj, spec.p)
    if total >= spec.p:
        raise ContractViolation(f"trace of {a} left the prime subfield ({total}); the modulus is inconsistent")
    return total


def is_square(spec: FieldSpec, a: FieldElement) -> bool:
    """Euler's criterion; zero counts as a square."""
    spec.check(a)
    if a == 0:
        return True
    return f_pow(spec, a, (spec.q - 1) // 2) == 1


def multiplicative_order(spec: FieldSpec, a: FieldElement) -> int:
    spec.check(a)
    if a == 0:
        raise ContractViolation("zero has no multiplicative order")
    order = spec.q - 1
    for r in primefactors(spec.q - 1):
        while order % r == 0 and f_pow(spec, a, order // r) == 1:
            order //= r
    return order


def is_primitive(spec: FieldSpec, a: FieldElement) -> bool:
    """True iff `a` generates F_q^*."""
    spec.check(a)
    if a == 0:
        return False
    n = spec.q - 1
    return all(f_pow(spec, a, n // r) != 1 for r in primefactors(n))


@lru_cache(maxsize=None)
def primitive_element(spec: FieldSpec) -> FieldElement:
    """Smallest index whose multiplicative order is q - 1."""
    for g in range(1, spec.q):
        if is_primitive(spec, g):
            return g
    raise ContractViolation(f"no primitive element found in F_{spec.q}")  # pragma: no cover


# =============================================================================
# Tables and array operations
# =============================================================================


@dataclass(frozen=True)
class FieldTables:
    """Lookup tables shared by the array operations of one field."""

    weights: np.ndarray
    exp: np.ndarray | None
    log: np.ndarray | None
    mul: np.ndarray | None
    traces: np.ndarray
    trace_form: np.ndarray


@lru_cache(maxsize=32)
def field_tables(spec: FieldSpec) -> FieldTables:
    q, p, e = spec.q, spec.p, spec.e
    weights = p ** np.arange(e, dtype=np.int64)

    exp = log = mul = None
    if e > 1:
        g = primitive_element(spec)
        exp = np.empty(q - 1, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            x = f_mul(spec, x, g)
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1, dtype=np.int64)
        if q <= settings.table_limit:
            idx = np.arange(q)
            mul = exp[(log[idx][:, None] + log[idx][None, :]) % (q - 1)]
            mul[0, :] = 0
            mul[:, 0] = 0
            logger.debug("Built %dx%d multiplication table for %r", q, q, spec)

    basis_traces = np.array([trace(spec, p**i) for i in range(e)], dtype=np.int64)
    digits = (np.arange(q, dtype=np.int64)[:, None] // weights[None, :]) % p
    traces = (digits @ basis_traces) % p
    # Tr(t^s * t^u): the matrix of the trace bilinear form on the digit basis.
    trace_form = np.array(
        [[trace(spec, f_mul(spec, p**s, p**u)) for u in range(e)] for s in range(e)],
        dtype=np.int64,
    )
    return FieldTables(weights=weights, exp=exp, log=log, mul=mul, traces=traces, trace_form=trace_form)


def digits_array(spec: FieldSpec, a: np.ndarray) -> np.ndarray:
    """Digit expansion along a new last axis."""
    a = np.asarray(a, dtype=np.int64)
    return (a[..., None] // field_tables(spec).weights) % spec.p


def from_digits_array(spec: FieldSpec, digits: np.ndarray) -> np.ndarray:
    return (np.asarray(digits, dtype=np.int64) % spec.p) @ field_tables(spec).weights


def add_array(spec: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if spec.e == 1:
        return (a + b) % spec.p
    return from_digits_array(spec, digits_array(spec, a) + digits_array(spec, b))


def neg_array(spec: FieldSpec, a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    if spec.e == 1:
        return (-a) % spec.p
    return from_digits_array(spec, -digits_array(spec, a))


def mul_array(spec: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if spec.e == 1:
        return (a * b) % spec.p
    tables = field_tables(spec)
    if tables.mul is not None:
        return tables.mul[a, b]
    assert tables.exp is not None and tables.log is not None
    out = tables.exp[(tables.log[a] + tables.log[b]) % (spec.q - 1)]
    return np.where((a == 0) | (b == 0), 0, out)


def square_array(spec: FieldSpec, a: np.ndarray) -> np.ndarray:
    return mul_array(spec, a, a)


def pow_array(spec: FieldSpec, a: np.ndarray, n: int) -> np.ndarray:
    """Elementwise a^n for n >= 0 (0^0 = 1)."""
    a = np.asarray(a, dtype=np.int64)
    result = np.ones_like(a)
    base = a
    while n:
        if n & 1:
            result = mul_array(spec, result, base)
        base = mul_array(spec, base, base)
        n >>= 1
    return result


def trace_array(spec: FieldSpec, a: np.ndarray) -> np.ndarray:
    return field_tables(spec).traces[np.asarray(a, dtype=np.int64)]
