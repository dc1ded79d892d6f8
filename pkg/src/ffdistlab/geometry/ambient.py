"""
Ambient space F_q^d: points, ranks, the quadratic distance form and dot products.

A point x = (x_1, ..., x_d) has rank sum_i x_i * q^i. Because each coordinate
index is itself a little-endian base-p digit vector, the rank is the
little-endian base-p number whose d*e digits are the concatenated coordinate
digits. Addition of points is therefore digit-wise addition mod p on ranks,
which is what the vectorized helpers below exploit.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ffdistlab.errors import ContractViolation, with_hint
from ffdistlab.field import FieldSpec, add_array, f_add, f_mul, f_sub, mul_array, square_array
from ffdistlab.settings import ensure_budget
from ffdistlab.types import FieldElement

logger = logging.getLogger(__name__)

_RANK_LIMIT = 1 << 62


class AmbientSpec(BaseModel):
    """
    The vector space F_q^d.

    Usage:
        >>> A = AmbientSpec(field=FieldSpec(p=3), d=2)
        >>> A.size
        9
    """

    model_config = ConfigDict(frozen=True)

    field: FieldSpec
    d: int = Field(ge=1)

    @model_validator(mode="after")
    def _check_rank_space(self) -> "AmbientSpec":
        if self.field.q**self.d >= _RANK_LIMIT:
            raise ValueError(f"rank space q^d = {self.field.q}^{self.d} does not fit a 64-bit integer.")
        return self

    @classmethod
    def of(cls, q: int, d: int, modulus: tuple[int, ...] | None = None) -> "AmbientSpec":
        """Shorthand for `AmbientSpec(field=FieldSpec.from_order(q), d=d)`."""
        return cls(field=FieldSpec.from_order(q, modulus), d=d)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def size(self) -> int:
        """q^d, the size of the rank space."""
        return self.field.q**self.d

    @property
    def n_digits(self) -> int:
        """d * e, the number of order-p coordinates of the group (F_q^d, +)."""
        return self.d * self.field.e

    def check_rank(self, i: int) -> int:
        if not isinstance(i, (int, np.integer)) or not 0 <= i < self.size:
            raise ContractViolation(f"rank {i!r} is outside [0, {self.size}).")
        return int(i)

    def zero(self) -> "Point":
        return Point(ambient=self, coords=(0,) * self.d)

    def __repr__(self) -> str:
        return f"AmbientSpec(F_{self.q}^{self.d})"


class Point(BaseModel):
    """A vector x = (x_1, ..., x_d) of F_q^d."""

    model_config = ConfigDict(frozen=True)

    ambient: AmbientSpec
    coords: tuple[int, ...]

    @model_validator(mode="after")
    def _check_coords(self) -> "Point":
        if len(self.coords) != self.ambient.d:
            raise ValueError(f"expected {self.ambient.d} coordinates, got {len(self.coords)}.")
        for c in self.coords:
            if not 0 <= c < self.ambient.q:
                raise ValueError(f"coordinate {c} is not an element index of F_{self.ambient.q}.")
        return self

    @property
    def rank(self) -> int:
        return rank(self)

    def __add__(self, other: "Point") -> "Point":
        return point_add(self, other)

    def __neg__(self) -> "Point":
        return point_neg(self)

    def __sub__(self, other: "Point") -> "Point":
        return point_add(self, point_neg(other))

    def __repr__(self) -> str:
        return f"Point{self.coords}"


def _same_ambient(x: Point, y: Point) -> AmbientSpec:
    if x.ambient != y.ambient:
        raise ContractViolation(
            with_hint(
                f"dimension mismatch: {x.ambient!r} vs {y.ambient!r}.",
                "Both points must live in the same F_q^d.",
            )
        )
    return x.ambient


# =============================================================================
# Scalar operations on points
# =============================================================================


def point_add(x: Point, y: Point) -> Point:
    ambient = _same_ambient(x, y)
    spec = ambient.field
    return Point(ambient=ambient, coords=tuple(f_add(spec, a, b) for a, b in zip(x.coords, y.coords)))


def point_neg(x: Point) -> Point:
    spec = x.ambient.field
    return Point(ambient=x.ambient, coords=tuple(f_sub(spec, 0, a) for a in x.coords))


def scale(c: FieldElement, x: Point) -> Point:
    spec = x.ambient.field
    return Point(ambient=x.ambient, coords=tuple(f_mul(spec, c, a) for a in x.coords))


def dot(x: Point, y: Point) -> FieldElement:
    """x . y = x_1 y_1 + ... + x_d y_d."""
    ambient = _same_ambient(x, y)
    spec = ambient.field
    total = 0
    for a, b in zip(x.coords, y.coords):
        total = f_add(spec, total, f_mul(spec, a, b))
    return total


def norm(x: Point) -> FieldElement:
    """|x| = x_1^2 + ... + x_d^2."""
    return dot(x, x)


def dist_diff(x: Point, y: Point) -> FieldElement:
    """|x - y| = (x_1 - y_1)^2 + ... + (x_d - y_d)^2."""
    return norm(point_add(x, point_neg(y)))


def rank(x: Point) -> int:
    """Little-endian mixed-radix value sum_i x_i q^i."""
    q = x.ambient.q
    return sum(c * q**i for i, c in enumerate(x.coords))


def unrank(ambient: AmbientSpec, i: int) -> Point:
    i = ambient.check_rank(i)
    q = ambient.q
    return Point(ambient=ambient, coords=tuple((i // q**k) % q for k in range(ambient.d)))


# =============================================================================
# Vectorized operations on rank arrays
# =============================================================================


@dataclass(frozen=True)
class AmbientTables:
    digit_weights: np.ndarray
    coord_weights: np.ndarray


@lru_cache(maxsize=32)
def ambient_tables(ambient: AmbientSpec) -> AmbientTables:
    return AmbientTables(
        digit_weights=ambient.p ** np.arange(ambient.n_digits, dtype=np.int64),
        coord_weights=ambient.q ** np.arange(ambient.d, dtype=np.int64),
    )


def rank_digits(ambient: AmbientSpec, ranks: np.ndarray) -> np.ndarray:
    """Base-p digits of ranks along a new last axis of length d*e."""
    ranks = np.asarray(ranks, dtype=np.int64)
    return (ranks[..., None] // ambient_tables(ambient).digit_weights) % ambient.p


def digits_to_ranks(ambient: AmbientSpec, digits: np.ndarray) -> np.ndarray:
    return (np.asarray(digits, dtype=np.int64) % ambient.p) @ ambient_tables(ambient).digit_weights


def grid_shape(ambient: AmbientSpec) -> tuple[int, ...]:
    """
    Shape (p, ..., p) of a rank-indexed array viewed as Z_p^{de}.

    In C order the last axis varies fastest, so axis a holds digit de-1-a.
    """
    return (ambient.p,) * ambient.n_digits


def grid_shift(ambient: AmbientSpec, r: int) -> tuple[int, ...]:
    """Per-axis shifts that translate a grid-shaped array by the point of rank r."""
    return tuple(int(x) for x in rank_digits(ambient, np.int64(r))[::-1])


def translate_grid(ambient: AmbientSpec, grid: np.ndarray, r: int) -> np.ndarray:
    """out[y] = grid[y - x] where x has rank r."""
    return np.roll(grid, grid_shift(ambient, r), axis=tuple(range(ambient.n_digits)))


def coords_of(ambient: AmbientSpec, ranks: np.ndarray) -> np.ndarray:
    """Coordinate indices of ranks along a new last axis of length d."""
    ranks = np.asarray(ranks, dtype=np.int64)
    return (ranks[..., None] // ambient_tables(ambient).coord_weights) % ambient.q


def ranks_of(ambient: AmbientSpec, coords: np.ndarray) -> np.ndarray:
    return np.asarray(coords, dtype=np.int64) @ ambient_tables(ambient).coord_weights


def add_ranks(ambient: AmbientSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Ranks of x + y, broadcasting `a` against `b`."""
    return digits_to_ranks(ambient, rank_digits(ambient, a) + rank_digits(ambient, b))


def neg_ranks(ambient: AmbientSpec, a: np.ndarray) -> np.ndarray:
    return digits_to_ranks(ambient, -rank_digits(ambient, a))


def sub_ranks(ambient: AmbientSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return digits_to_ranks(ambient, rank_digits(ambient, a) - rank_digits(ambient, b))


def scale_ranks(ambient: AmbientSpec, c: FieldElement, a: np.ndarray) -> np.ndarray:
    """Ranks of c * x for a field element c."""
    coords = coords_of(ambient, a)
    return ranks_of(ambient, mul_array(ambient.field, np.full_like(coords, c), coords))


@lru_cache(maxsize=16)
def norm_table(ambient: AmbientSpec) -> np.ndarray:
    """|x| for every rank, as a read-only array of length q^d."""
    ensure_budget(f"rank space of {ambient!r}", ambient.size)
    spec = ambient.field
    squares = square_array(spec, np.arange(spec.q))
    ranks = np.arange(ambient.size, dtype=np.int64)
    acc = np.zeros(ambient.size, dtype=np.int64)
    for i in range(ambient.d):
        acc = add_array(spec, acc, squares[(ranks // ambient.q**i) % ambient.q])
    acc.setflags(write=False)
    logger.debug("Built norm table for %r", ambient)
    return acc


def norm_ranks(ambient: AmbientSpec, ranks: np.ndarray) -> np.ndarray:
    """|x| for the given ranks, without materializing the full table."""
    spec = ambient.field
    coords = coords_of(ambient, ranks)
    acc = np.zeros(coords.shape[:-1], dtype=np.int64)
    for i in range(ambient.d):
        acc = add_array(spec, acc, square_array(spec, coords[..., i]))
    return acc


def dot_ranks(ambient: AmbientSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """x . y for broadcast rank arrays."""
    spec = ambient.field
    ca = coords_of(ambient, a)
    cb = coords_of(ambient, b)
    shape = np.broadcast_shapes(ca.shape, cb.shape)[:-1]
    acc = np.zeros(shape, dtype=np.int64)
    for i in range(ambient.d):
        acc = add_array(spec, acc, mul_array(spec, ca[..., i], cb[..., i]))
    return acc
