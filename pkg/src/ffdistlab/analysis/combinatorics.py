"""
Sumsets, representation counts, additive energies and distance sets.

All counts are exact integers. Representation counts are computed by
translating the count array over the digit grid Z_p^{de} once per element
of A, which is the additive convolution on (F_q^d, +).
"""

import logging
from collections.abc import Iterator
from fractions import Fraction

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ffdistlab.errors import ContractViolation, IdentityViolation, with_hint
from ffdistlab.field import FieldSpec
from ffdistlab.geometry import (
    AmbientSpec,
    PointSet,
    add_ranks,
    dot_ranks,
    grid_shape,
    norm_table,
    sub_ranks,
    translate_grid,
)
from ffdistlab.settings import ensure_budget, settings

logger = logging.getLogger(__name__)

_INT64_SAFE = 1 << 62
_CHUNK = 1 << 20


class RepCount(BaseModel):
    """
    mu_l(y) = #{(x^1, ..., x^l) in A^l : x^1 + ... + x^l = y} over the rank space.

    `counts` is int64, or an object array of Python ints when |A|^l would not
    fit in 64 bits.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    ambient: AmbientSpec
    level: int = Field(ge=1)
    counts: np.ndarray

    @model_validator(mode="after")
    def _check_counts(self) -> "RepCount":
        if self.counts.shape != (self.ambient.size,):
            raise ValueError(f"counts must have length q^d = {self.ambient.size}.")
        self.counts.setflags(write=False)
        return self

    @property
    def support(self) -> PointSet:
        """A_l, the l-fold sumset."""
        return PointSet.from_mask(self.ambient, np.asarray(self.counts > 0, dtype=bool))

    @property
    def support_size(self) -> int:
        return int(np.count_nonzero(self.counts))

    @property
    def total(self) -> int:
        """Sum of all counts, |A|^l."""
        return int(sum(int(c) for c in self.counts[self.counts > 0]))

    def sum_of_squares(self) -> int:
        return _sum_squares(self.counts)

    def __getitem__(self, r: int) -> int:
        return int(self.counts[r])


class EnergyValue(BaseModel):
    """E_k(A), or E(A, B) with k = 2, as an exact integer."""

    model_config = ConfigDict(frozen=True)

    value: int = Field(ge=0)
    k: int = Field(ge=1)

    def __int__(self) -> int:
        return self.value


class DistanceSet(BaseModel):
    """A subset of F_q: norms of sums or differences, or dot products."""

    model_config = ConfigDict(frozen=True)

    field: FieldSpec
    values: frozenset[int]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:  # type: ignore[override]
        return iter(sorted(self.values))

    def __contains__(self, a: object) -> bool:
        return a in self.values

    def as_mask(self) -> np.ndarray:
        mask = np.zeros(self.field.q, dtype=bool)
        mask[list(self.values)] = True
        return mask

    def __repr__(self) -> str:
        return f"DistanceSet({sorted(self.values)})"


def _sum_squares(counts: np.ndarray) -> int:
    if counts.dtype == object or (counts.size and int(counts.max()) >= 1 << 31):
        return sum(int(c) * int(c) for c in counts[counts > 0])
    return int(np.sum(counts * counts, dtype=object))


def _convolve(ambient: AmbientSpec, grid: np.ndarray, members: np.ndarray) -> np.ndarray:
    """sum over a in members of grid translated by a."""
    out = np.zeros_like(grid)
    for r in members:
        out += translate_grid(ambient, grid, int(r))
    return out


def _same_ambient(A: PointSet, B: PointSet) -> AmbientSpec:
    if A.ambient != B.ambient:
        raise ContractViolation(
            with_hint(
                f"sets live in different spaces: {A.ambient!r} vs {B.ambient!r}.",
                "Build both sets over the same AmbientSpec.",
            )
        )
    return A.ambient


def _pair_counts(A: PointSet, B: PointSet) -> np.ndarray:
    """r_{A+B}(y) over the rank space."""
    ambient = _same_ambient(A, B)
    ensure_budget(f"rank space of {ambient!r}", ambient.size)
    small, large = (A, B) if len(A) <= len(B) else (B, A)
    grid = large.mask.astype(np.int64).reshape(grid_shape(ambient))
    return _convolve(ambient, grid, small.ranks()).ravel()


def _distance_values(ambient: AmbientSpec, support: np.ndarray) -> DistanceSet:
    norms = norm_table(ambient)[np.flatnonzero(support)]
    return DistanceSet(field=ambient.field, values=frozenset(int(v) for v in np.unique(norms)))


# =============================================================================
# Sumsets and energies
# =============================================================================


def sumset_iterate(A: PointSet, l: int) -> RepCount:
    """mu_l by l - 1 exact convolutions with the indicator of A."""
    if l < 1:
        raise ContractViolation(f"sumset level must be >= 1, got {l}.")
    ambient = A.ambient
    ensure_budget(f"rank space of {ambient!r}", ambient.size)
    dtype: type | np.dtype = np.int64 if len(A) ** l < _INT64_SAFE else object
    indicator = A.mask.astype(np.int64).astype(dtype).reshape(grid_shape(ambient))
    members = A.ranks()
    mu = indicator
    for _ in range(l - 1):
        mu = _convolve(ambient, mu, members)
    logger.debug("mu_%d of |A| = %d over %r", l, len(A), ambient)
    return RepCount(ambient=ambient, level=l, counts=mu.ravel())


def energy_pair(A: PointSet, B: PointSet) -> EnergyValue:
    """E(A, B) = #{a + b = a' + b'} = sum_y r_{A+B}(y)^2."""
    return EnergyValue(value=_sum_squares(_pair_counts(A, B)), k=2)


def energy_bruteforce(A: PointSet, k: int, budget: int | None = None) -> EnergyValue:
    """
    E_k(A) by tuple enumeration: every (x^1..x^k, x^{k+1}..x^{2k-1}) is
    listed and counted when the forced x^{2k} lies in A.
    """
    if k < 1:
        raise ContractViolation(f"energy level must be >= 1, got {k}.")
    ambient = A.ambient
    n = len(A)
    ensure_budget(f"{2 * k - 1}-tuples of a set of size {n}", n ** (2 * k - 1), budget or settings.tuple_budget)
    if n == 0:
        return EnergyValue(value=0, k=k)

    members = A.ranks()
    mask = A.mask

    def tuple_sums(m: int) -> np.ndarray:
        sums = np.zeros(1, dtype=np.int64)
        for _ in range(m):
            sums = add_ranks(ambient, sums[:, None], members[None, :]).ravel()
        return sums

    left = tuple_sums(k)
    right = tuple_sums(k - 1)
    step = max(1, _CHUNK // len(right))
    total = 0
    for start in range(0, len(left), step):
        forced = sub_ranks(ambient, left[start : start + step, None], right[None, :])
        total += int(np.count_nonzero(mask[forced]))
    return EnergyValue(value=total, k=k)


def energy_k(A: PointSet, k: int, cross_check: bool = True) -> EnergyValue:
    """
    E_k(A) = sum_y mu_k(y)^2.

    When |A|^{2k} is within `settings.tuple_budget` the brute-force count is
    run as well and any disagreement raises `IdentityViolation`.
    """
    if k < 1:
        raise ContractViolation(f"energy level must be >= 1, got {k}.")
    value = sumset_iterate(A, k).sum_of_squares()
    if cross_check and len(A) ** (2 * k) <= settings.tuple_budget:
        oracle = energy_bruteforce(A, k).value
        if oracle != value:
            raise IdentityViolation(
                "energy-convolution-vs-bruteforce",
                {"k": k, "A": [int(r) for r in A.ranks()], "convolution": value, "bruteforce": oracle},
            )
    return EnergyValue(value=value, k=k)


def cardak_bound(A: PointSet, l: int) -> Fraction:
    """|A|^{2l} / E_l(A), a lower bound for |A_l| by Cauchy-Schwarz."""
    if len(A) == 0:
        raise ContractViolation(
            with_hint("the sumset bound needs a non-empty set.", "Sample at least one point.")
        )
    return Fraction(len(A) ** (2 * l), energy_k(A, l, cross_check=False).value)


# =============================================================================
# Distance sets
# =============================================================================


def k_distance_set(A: PointSet, k: int) -> DistanceSet:
    """Delta_k(A) = {|x^1 + ... + x^k| : x^i in A}."""
    if k < 2:
        raise ContractViolation(f"Delta_k needs k >= 2, got {k}.")
    return _distance_values(A.ambient, sumset_iterate(A, k).counts > 0)


def distance_set_sum(A: PointSet, B: PointSet) -> DistanceSet:
    """Delta_2(A, B) = {|x + y| : x in A, y in B}."""
    return _distance_values(A.ambient, _pair_counts(A, B) > 0)


def distance_set_diff(A: PointSet, include_diagonal: bool = True) -> DistanceSet:
    """{|x - y| : x, y in A}; with include_diagonal=False only pairs x != y count."""
    support = _pair_counts(A, A.negate()) > 0
    if not include_diagonal:
        support[0] = False
    return _distance_values(A.ambient, support)


def dot_product_set(A: PointSet) -> DistanceSet:
    """Pi_2(A) = {x . y : x, y in A}."""
    ambient = A.ambient
    members = A.ranks()
    seen = np.zeros(ambient.q, dtype=bool)
    if members.size:
        step = max(1, _CHUNK // members.size)
        for start in range(0, members.size, step):
            seen[dot_ranks(ambient, members[start : start + step, None], members[None, :]).ravel()] = True
    return DistanceSet(field=ambient.field, values=frozenset(int(v) for v in np.flatnonzero(seen)))
