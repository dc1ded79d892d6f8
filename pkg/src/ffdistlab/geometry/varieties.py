"""
Varieties - zero sets of polynomials in F_q^d, spheres, hyperplanes, and the
largest affine subspace contained in a variety.

Dimension and degree are declared metadata: nothing here computes them
symbolically. `size_profile` reports |V| against q^n so that a wrong
declaration shows up in audits.
"""

import itertools
import logging
from collections.abc import Iterator
from fractions import Fraction
from pathlib import Path
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ffdistlab.errors import ContractViolation, UnsupportedOperation, with_hint
from ffdistlab.field import f_mul, f_neg, is_square
from ffdistlab.settings import ensure_budget
from ffdistlab.types import FieldElement, Rational

from .ambient import (
    AmbientSpec,
    add_ranks,
    coords_of,
    dot_ranks,
    norm_ranks,
    ranks_of,
    scale_ranks,
    unrank,
)
from .pointset import PointSet
from .polynomials import Polynomial, Term, read_polynomials, sum_of_squares_minus

logger = logging.getLogger(__name__)

MAX_DIM_CAP = 2
_CHUNK = 1 << 20

VarietyKind = Literal["polynomial", "sphere", "hyperplane"]


class VarietyDef(BaseModel):
    """
    Polynomials defining V = {x : P_1(x) = ... = P_r(x) = 0} plus declared metadata.

    Attributes:
        polynomials: Sparse polynomials in x1..xd.
        declared_dim: Trusted dimension n of V.
        declared_deg: Trusted degree D of V.
        kind: "sphere" and "hyperplane" enable specialized code paths.
        radius: Radius j when kind == "sphere".
    """

    model_config = ConfigDict(frozen=True)

    polynomials: tuple[Polynomial, ...]
    declared_dim: int = Field(ge=0)
    declared_deg: int = Field(ge=0)
    kind: VarietyKind = "polynomial"
    radius: int | None = None
    label: str = ""


class Variety(BaseModel):
    """An enumerated variety: its definition and its exact point set."""

    model_config = ConfigDict(frozen=True)

    definition: VarietyDef
    points: PointSet
    flags: tuple[str, ...] = ()

    @property
    def ambient(self) -> AmbientSpec:
        return self.points.ambient

    def __len__(self) -> int:
        return len(self.points)

    def __repr__(self) -> str:
        name = self.definition.label or self.definition.kind
        return f"Variety({name}, {self.ambient!r}, |V|={len(self.points)})"


class SizeProfile(BaseModel):
    model_config = ConfigDict(frozen=True)

    cardinality: int
    ratio: Rational


class AffineSubspaceReport(BaseModel):
    """
    Largest affine subspace H = base + span(directions) found inside V.

    t_V = q^dimension, or 0 for the empty variety (dimension -1).
    """

    model_config = ConfigDict(frozen=True)

    t_V: int
    dimension: int
    base: tuple[int, ...] | None
    directions: tuple[tuple[int, ...], ...]
    searched_dim_cap: int


# =============================================================================
# Enumeration
# =============================================================================


def enumerate_variety(definition: VarietyDef, ambient: AmbientSpec) -> Variety:
    """Evaluate every polynomial at every point; keep the common zeros."""
    ensure_budget(f"rank space of {ambient!r}", ambient.size)
    if definition.declared_dim > ambient.d:
        raise ContractViolation(
            f"declared_dim {definition.declared_dim} exceeds the ambient dimension {ambient.d}."
        )
    for poly in definition.polynomials:
        for term in poly.terms:
            if any(a >= ambient.q for a in term.exponents):
                raise ContractViolation(
                    with_hint(
                        f"term {term!r} has an exponent >= q = {ambient.q}.",
                        "Reduce exponents with x^q = x before building the variety.",
                    )
                )

    mask = np.ones(ambient.size, dtype=bool)
    for start in range(0, ambient.size, _CHUNK):
        ranks = np.arange(start, min(start + _CHUNK, ambient.size), dtype=np.int64)
        coords = coords_of(ambient, ranks)
        for poly in definition.polynomials:
            mask[start : start + len(ranks)] &= poly.evaluate(ambient, coords) == 0

    points = PointSet.from_mask(ambient, mask)
    flags: tuple[str, ...] = ()
    if definition.kind == "sphere" and definition.radius == 0:
        flags = ("zero-radius",)
        logger.warning("Sphere of radius 0 in %r: sphere theorems need a nonzero radius", ambient)
    logger.debug("Enumerated %s: |V| = %d", definition.label or definition.kind, len(points))
    return Variety(definition=definition, points=points, flags=flags)


def sphere(ambient: AmbientSpec, j: FieldElement) -> Variety:
    """S_j^{d-1} = {x : x_1^2 + ... + x_d^2 = j}."""
    definition = VarietyDef(
        polynomials=(sum_of_squares_minus(ambient, j),),
        declared_dim=ambient.d - 1,
        declared_deg=2,
        kind="sphere",
        radius=j,
        label=f"sphere:{j}",
    )
    return enumerate_variety(definition, ambient)


def hyperplane(
    ambient: AmbientSpec,
    coefficients: tuple[int, ...] | None = None,
    offset: FieldElement = 0,
) -> Variety:
    """{x : a . x = offset}; defaults to x_1 = 0."""
    coefficients = coefficients or (1,) + (0,) * (ambient.d - 1)
    if len(coefficients) != ambient.d or not any(coefficients):
        raise ContractViolation("a hyperplane needs d coefficients, not all zero.")
    d = ambient.d
    terms = [
        Term(coefficient=ambient.field.check(c), exponents=tuple(1 if k == i else 0 for k in range(d)))
        for i, c in enumerate(coefficients)
        if c
    ]
    minus = f_neg(ambient.field, ambient.field.check(offset))
    if minus:
        terms.append(Term(coefficient=minus, exponents=(0,) * d))
    definition = VarietyDef(
        polynomials=(Polynomial(terms=tuple(terms)),),
        declared_dim=d - 1,
        declared_deg=1,
        kind="hyperplane",
        label="hyperplane",
    )
    return enumerate_variety(definition, ambient)


def load_variety(
    path: str | Path,
    ambient: AmbientSpec,
    declared_dim: int | None = None,
    declared_deg: int | None = None,
) -> Variety:
    """Read polynomials from a text file; metadata defaults to d - 1 and the max total degree."""
    polys = tuple(read_polynomials(path, ambient))
    definition = VarietyDef(
        polynomials=polys,
        declared_dim=ambient.d - 1 if declared_dim is None else declared_dim,
        declared_deg=max((p.total_degree for p in polys), default=0) if declared_deg is None else declared_deg,
        label=f"poly:{Path(path).name}",
    )
    return enumerate_variety(definition, ambient)


def size_profile(variety: Variety) -> SizeProfile:
    """(|V|, |V| / q^n) with n the declared dimension."""
    n = variety.definition.declared_dim
    size = len(variety.points)
    return SizeProfile(cardinality=size, ratio=Fraction(size, variety.ambient.q**n))


def sphere_size_formula(ambient: AmbientSpec, j: FieldElement) -> int:
    """Closed-form |S_j^{d-1}| through the quadratic character of F_q."""
    spec, q, d = ambient.field, ambient.q, ambient.d

    def eta(a: int) -> int:
        if a == 0:
            return 0
        return 1 if is_square(spec, a) else -1

    minus_one = f_neg(spec, 1)
    if d % 2 == 0:
        nu = q - 1 if j == 0 else -1
        sign = 1 if (d // 2) % 2 == 0 else minus_one
        return q ** (d - 1) + nu * q ** ((d - 2) // 2) * eta(sign)
    sign = 1 if ((d - 1) // 2) % 2 == 0 else minus_one
    return q ** (d - 1) + q ** ((d - 1) // 2) * eta(f_mul(spec, sign, spec.check(j)))


# =============================================================================
# Affine subspaces
# =============================================================================


def direction_bases(ambient: AmbientSpec, m: int) -> Iterator[np.ndarray]:
    """
    Canonical bases (reduced row-echelon form) of every m-dimensional
    linear subspace of F_q^d, each yielded as an array of m ranks.
    """
    d, q = ambient.d, ambient.q
    for pivots in itertools.combinations(range(d), m):
        free_slots = [
            (row, col)
            for row, pivot in enumerate(pivots)
            for col in range(pivot + 1, d)
            if col not in pivots
        ]
        for values in itertools.product(range(q), repeat=len(free_slots)):
            rows = np.zeros((m, d), dtype=np.int64)
            for row, pivot in enumerate(pivots):
                rows[row, pivot] = 1
            for (row, col), v in zip(free_slots, values):
                rows[row, col] = v
            yield ranks_of(ambient, rows)


def span_ranks(ambient: AmbientSpec, basis: np.ndarray) -> np.ndarray:
    """All q^m ranks of the linear span of the given basis ranks."""
    span = np.zeros(1, dtype=np.int64)
    for b in basis:
        multiples = np.array([scale_ranks(ambient, c, np.int64(b)) for c in range(ambient.q)], dtype=np.int64)
        span = add_ranks(ambient, span[:, None], multiples[None, :]).ravel()
    return span


def _is_totally_isotropic(ambient: AmbientSpec, basis: np.ndarray) -> bool:
    if np.any(norm_ranks(ambient, basis) != 0):
        return False
    return not np.any(dot_ranks(ambient, basis[:, None], basis[None, :]) != 0)


def _iter_contained(variety: Variety, m: int, prune: bool) -> Iterator[tuple[int, np.ndarray, np.ndarray]]:
    """Yield (base rank, basis ranks, flat ranks) for every m-flat inside V."""
    ambient = variety.ambient
    members = variety.points.ranks()
    mask = variety.points.mask
    sphere_mode = (
        prune and variety.definition.kind == "sphere" and variety.definition.radius not in (None, 0)
    )
    for basis in direction_bases(ambient, m):
        candidates = members
        if sphere_mode:
            # A flat inside S_j (j != 0) has totally isotropic directions
            # and a base point orthogonal to all of them.
            if not _is_totally_isotropic(ambient, basis):
                continue
            orthogonal = np.all(dot_ranks(ambient, candidates[:, None], basis[None, :]) == 0, axis=1)
            candidates = candidates[orthogonal]
            if not candidates.size:
                continue
        span = span_ranks(ambient, basis)
        shifted = add_ranks(ambient, candidates[:, None], span[None, :])
        inside = mask[shifted].all(axis=1)
        for idx in np.flatnonzero(inside):
            yield int(candidates[idx]), basis, shifted[idx]


def contained_flats(variety: Variety, m: int, prune: bool = True) -> set[frozenset[int]]:
    """Every m-dimensional affine subspace of V, as sets of ranks."""
    if m < 0 or m > MAX_DIM_CAP:
        raise UnsupportedOperation(f"flat dimension {m} outside [0, {MAX_DIM_CAP}].")
    if m == 0:
        return {frozenset({int(r)}) for r in variety.points.ranks()}
    return {frozenset(int(r) for r in flat) for _, _, flat in _iter_contained(variety, m, prune)}


def max_affine_subspace(variety: Variety, dim_cap: int = MAX_DIM_CAP, prune: bool = True) -> AffineSubspaceReport:
    """t_V = max{|H| : H an affine subspace inside V}, searched up to dimension `dim_cap`."""
    if dim_cap > MAX_DIM_CAP:
        raise UnsupportedOperation(
            with_hint(
                f"dim_cap = {dim_cap} is not supported.",
                f"The number of affine m-flats grows like q^((m+1)(d-m)); use dim_cap <= {MAX_DIM_CAP}.",
            )
        )
    if dim_cap < 0:
        raise ContractViolation(f"dim_cap must be >= 0, got {dim_cap}.")

    ambient = variety.ambient
    if len(variety.points) == 0:
        return AffineSubspaceReport(t_V=0, dimension=-1, base=None, directions=(), searched_dim_cap=dim_cap)

    for m in range(min(dim_cap, ambient.d), 0, -1):
        found = next(_iter_contained(variety, m, prune), None)
        if found is not None:
            base, basis, _ = found
            logger.debug("Found a %d-flat in %r at base rank %d", m, variety, base)
            return AffineSubspaceReport(
                t_V=ambient.q**m,
                dimension=m,
                base=unrank(ambient, base).coords,
                directions=tuple(unrank(ambient, int(b)).coords for b in basis),
                searched_dim_cap=dim_cap,
            )

    first = int(variety.points.ranks()[0])
    return AffineSubspaceReport(
        t_V=1, dimension=0, base=unrank(ambient, first).coords, directions=(), searched_dim_cap=dim_cap
    )
