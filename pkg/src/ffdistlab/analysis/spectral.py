"""
Fourier analysis on (F_q^d, +) with the canonical additive character.

    chi(x) = exp(2 pi i Tr(x) / p)
    1_S^(m) = q^{-d} sum_x chi(-m . x) 1_S(x)

The fast transform never touches floating point until the very end: for
each frequency it produces the p integer counts #{x in S : Tr(m . x) = r}
by a decimation over the d*e digit axes of Z_p^{de}, then combines them with
the p roots of unity in a single step.
"""

import logging
from functools import lru_cache

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from ffdistlab.errors import ContractViolation, NumericalFailure, with_hint
from ffdistlab.field import FieldSpec, field_tables, trace_array
from ffdistlab.geometry import (
    AmbientSpec,
    PointSet,
    Variety,
    dot_ranks,
    grid_shape,
)
from ffdistlab.geometry.ambient import digits_to_ranks, rank_digits
from ffdistlab.settings import ensure_budget, settings

from .combinatorics import RepCount

logger = logging.getLogger(__name__)

_CHUNK = 1 << 20


class CharacterTable(BaseModel):
    """Exponents Tr(x) for every x in F_q and the p-th roots of unity."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    field: FieldSpec
    exponents: np.ndarray
    root_cache: np.ndarray

    def chi(self, x: int) -> complex:
        return complex(self.root_cache[self.exponents[self.field.check(x)]])


@lru_cache(maxsize=32)
def character_table(spec: FieldSpec) -> CharacterTable:
    exponents = trace_array(spec, np.arange(spec.q))
    exponents.setflags(write=False)
    roots = np.exp(2j * np.pi * np.arange(spec.p) / spec.p)
    roots.setflags(write=False)
    return CharacterTable(field=spec, exponents=exponents, root_cache=roots)


class Spectrum(BaseModel):
    """
    Fourier coefficients of an indicator, indexed by rank(m).

    Values use the q^{-d} normalization: values[0] = |S| / q^d.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    ambient: AmbientSpec
    values: np.ndarray
    cardinality: int

    @model_validator(mode="after")
    def _check_values(self) -> "Spectrum":
        if self.values.shape != (self.ambient.size,):
            raise ValueError(f"values must have length q^d = {self.ambient.size}.")
        self.values.setflags(write=False)
        return self

    @property
    def normalization(self) -> str:
        return "q^-d"

    def at(self, m: int) -> complex:
        return complex(self.values[self.ambient.check_rank(m)])

    def unnormalized(self) -> np.ndarray:
        """sum_x chi(-m . x) 1_S(x), i.e. values * q^d."""
        return self.values * self.ambient.size


# =============================================================================
# Transforms
# =============================================================================


@lru_cache(maxsize=16)
def dual_ranks(ambient: AmbientSpec) -> np.ndarray:
    """
    For each frequency m, the rank of the digit vector u with
    Tr(m . x) = <u, digits(x)> mod p for every x.
    """
    spec = ambient.field
    form = field_tables(spec).trace_form
    digits = rank_digits(ambient, np.arange(ambient.size, dtype=np.int64))
    blocks = digits.reshape(ambient.size, ambient.d, spec.e)
    dual = (blocks @ form) % spec.p
    out = digits_to_ranks(ambient, dual.reshape(ambient.size, ambient.n_digits))
    out.setflags(write=False)
    return out


def exponent_classes(S: PointSet) -> np.ndarray:
    """
    counts[m, r] = #{x in S : Tr(m . x) = r}, shape (q^d, p), exact integers.

    One digit axis at a time: G'[.., u, .., r] = sum_x G[.., x, .., r - x u].
    For a fixed digit x every u is served by one gather along the class axis.
    """
    ambient = S.ambient
    p, n = ambient.p, ambient.n_digits
    ensure_budget(f"rank space of {ambient!r}", ambient.size)

    # shifted[x, u, r] = r - x u mod p
    digits = np.arange(p)
    shifted = (digits[None, None, :] - np.outer(digits, digits)[:, :, None]) % p
    grid = np.zeros(grid_shape(ambient) + (p,), dtype=np.int64)
    grid[..., 0] = S.mask.reshape(grid_shape(ambient))
    for axis in range(n):
        out = np.zeros_like(grid)
        for x in range(p):
            plane = np.take(grid, x, axis=axis)
            out += np.moveaxis(plane[..., shifted[x]], -2, axis)
        grid = out
    classes = grid.reshape(ambient.size, p)
    return classes[dual_ranks(ambient)]


def _combine(ambient: AmbientSpec, classes: np.ndarray) -> np.ndarray:
    """sum_r counts[m, r] * exp(-2 pi i r / p), divided by q^d."""
    roots = character_table(ambient.field).root_cache
    return (classes @ np.conj(roots)) / ambient.size


def fourier_indicator(S: PointSet) -> Spectrum:
    ambient = S.ambient
    ensure_budget(f"rank space of {ambient!r}", ambient.size)
    values = _combine(ambient, exponent_classes(S))
    logger.debug("Transformed |S| = %d over %r", len(S), ambient)
    return Spectrum(ambient=ambient, values=values, cardinality=len(S))


def fourier_indicator_direct(S: PointSet) -> Spectrum:
    """Direct summation over m and x in S; the oracle for `fourier_indicator`."""
    ambient = S.ambient
    ensure_budget(f"rank space of {ambient!r}", ambient.size)
    spec, p = ambient.field, ambient.p
    members = S.ranks()
    classes = np.zeros((ambient.size, p), dtype=np.int64)
    if members.size:
        step = max(1, _CHUNK // members.size)
        for start in range(0, ambient.size, step):
            freqs = np.arange(start, min(start + step, ambient.size), dtype=np.int64)
            exps = trace_array(spec, dot_ranks(ambient, freqs[:, None], members[None, :]))
            for r in range(p):
                classes[start : start + len(freqs), r] = np.count_nonzero(exps == r, axis=1)
    return Spectrum(ambient=ambient, values=_combine(ambient, classes), cardinality=len(S))


def max_nonzero_coefficient(spectrum: Spectrum) -> float:
    """max over m != 0 of |1_S^(m)|; 0 when q^d = 1."""
    if spectrum.values.size <= 1:
        return 0.0
    return float(np.abs(spectrum.values[1:]).max())


# =============================================================================
# Audits and spectral routes
# =============================================================================


class RegularityReport(BaseModel):
    """
    How close a variety is to regular.

    size_ratio = |V| / q^{d-1}; decay_constant = q^{(d+1)/2} max_{m != 0} |1_V^(m)|.
    """

    model_config = ConfigDict(frozen=True)

    cardinality: int
    size_ratio: float
    max_coefficient: float
    decay_constant: float


def regular_audit(V: Variety) -> RegularityReport:
    ambient = V.ambient
    q, d = ambient.q, ambient.d
    if len(V.points) == 0:
        return RegularityReport(cardinality=0, size_ratio=0.0, max_coefficient=0.0, decay_constant=0.0)
    peak = max_nonzero_coefficient(fourier_indicator(V.points))
    return RegularityReport(
        cardinality=len(V.points),
        size_ratio=len(V.points) / q ** (d - 1),
        max_coefficient=peak,
        decay_constant=q ** ((d + 1) / 2) * peak,
    )


# Integers above this are not all representable in float64.
_EXACT_FLOAT_LIMIT = 1 << 53

# Largest distance from an integer a rounded value may have, whatever its size.
_ROUNDING_MARGIN = 0.25


def _round_exact(value: float, what: str) -> int:
    nearest = round(value)
    tolerance = min(settings.integer_tolerance * max(1.0, abs(value)), _ROUNDING_MARGIN)
    if np.spacing(abs(value)) >= 2 * _ROUNDING_MARGIN or abs(value - nearest) > tolerance:
        raise NumericalFailure(
            with_hint(
                f"{what} = {value!r} is not within tolerance of an integer.",
                "Use the exact convolution path or shrink the instance.",
            )
        )
    return int(nearest)


def _ensure_float_exact(what: str, bound: int) -> None:
    if bound >= _EXACT_FLOAT_LIMIT:
        raise NumericalFailure(
            with_hint(
                f"{what} can reach {bound}, beyond exact double precision (2^53).",
                "Use energy_k or sumset_iterate for exact counts at this size.",
            )
        )


def energy_via_spectrum(A: PointSet, k: int) -> int:
    """
    E_k(A) = q^{(2k-1)d} sum_m |1_A^(m)|^{2k}, rounded to the exact integer.

    Refused with `NumericalFailure` once 2k q^d |A|^{2k-1}, a bound on the
    unnormalized sum and its rounding error, reaches 2^53.
    """
    if k < 1:
        raise ContractViolation(f"energy level must be >= 1, got {k}.")
    ambient = A.ambient
    _ensure_float_exact(f"q^d E_{k}(A) for |A| = {len(A)}", 2 * k * ambient.size * len(A) ** (2 * k - 1))
    magnitudes = np.abs(fourier_indicator(A).unnormalized())
    value = float(np.sum(magnitudes ** (2 * k))) / ambient.size
    return _round_exact(value, f"spectral E_{k}")


def parseval_check(S: PointSet) -> float:
    """|sum_m |1_S^(m)|^2 - |S| / q^d|."""
    spectrum = fourier_indicator(S)
    total = float(np.sum(np.abs(spectrum.values) ** 2))
    return abs(total - len(S) / S.ambient.size)


def sumset_via_spectrum(A: PointSet, l: int) -> RepCount:
    """mu_l as the inverse transform of the l-th power of the transform of 1_A."""
    if l < 1:
        raise ContractViolation(f"sumset level must be >= 1, got {l}.")
    ambient = A.ambient
    ensure_budget(f"rank space of {ambient!r}", ambient.size)
    _ensure_float_exact(f"mu_{l} for |A| = {len(A)}", 2 * len(A) ** l)
    grid = A.mask.reshape(grid_shape(ambient)).astype(float)
    raw = np.fft.ifftn(np.fft.fftn(grid) ** l).real.ravel()
    counts = np.rint(raw)
    tolerance = min(settings.integer_tolerance * max(1.0, float(len(A)) ** l), _ROUNDING_MARGIN)
    if np.abs(raw - counts).max(initial=0.0) > tolerance:
        raise NumericalFailure(f"spectral mu_{l} did not round to integers within tolerance.")
    return RepCount(ambient=ambient, level=l, counts=np.maximum(counts, 0).astype(np.int64))
