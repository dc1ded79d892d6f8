"""Dense point sets over the rank space [0, q^d)."""

from collections.abc import Iterable, Iterator
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from ffdistlab.errors import ContractViolation, with_hint
from ffdistlab.settings import ensure_budget

from .ambient import AmbientSpec, Point, add_ranks, neg_ranks, ranks_of, unrank


class PointSet(BaseModel):
    """
    A subset A of F_q^d stored as a packed little-endian bitset of length q^d.

    Bit r is set iff the point of rank r belongs to the set. Instances are
    immutable; every operation returns a new set.

    Usage:
        >>> ambient = AmbientSpec.of(3, 2)
        >>> A = PointSet.from_ranks(ambient, [0, 1])
        >>> len(A), 1 in A
        (2, True)
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    ambient: AmbientSpec
    bits: np.ndarray
    cardinality: int

    @model_validator(mode="after")
    def _check_bits(self) -> "PointSet":
        expected = (self.ambient.size + 7) // 8
        if self.bits.dtype != np.uint8 or self.bits.shape != (expected,):
            raise ValueError(f"bits must be a uint8 array of length {expected}.")
        if int(np.unpackbits(self.bits).sum()) != self.cardinality:
            raise ValueError("cardinality does not match the population count of bits.")
        self.bits.setflags(write=False)
        return self

    # -------------------------------------------------------------------------
    # Builders
    # -------------------------------------------------------------------------

    @classmethod
    def from_mask(cls, ambient: AmbientSpec, mask: np.ndarray) -> "PointSet":
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != (ambient.size,):
            raise ContractViolation(f"mask must have length q^d = {ambient.size}, got {mask.shape}.")
        return cls(
            ambient=ambient,
            bits=np.packbits(mask, bitorder="little"),
            cardinality=int(np.count_nonzero(mask)),
        )

    @classmethod
    def from_ranks(cls, ambient: AmbientSpec, ranks: Iterable[int] | np.ndarray) -> "PointSet":
        ensure_budget(f"rank space of {ambient!r}", ambient.size)
        ranks = np.asarray(list(ranks) if not isinstance(ranks, np.ndarray) else ranks, dtype=np.int64)
        if ranks.size and (ranks.min() < 0 or ranks.max() >= ambient.size):
            raise ContractViolation(
                with_hint(
                    f"ranks must lie in [0, {ambient.size}).",
                    "Build points with unrank() or Point(...) to stay in range.",
                )
            )
        mask = np.zeros(ambient.size, dtype=bool)
        mask[ranks] = True
        return cls.from_mask(ambient, mask)

    @classmethod
    def from_points(cls, ambient: AmbientSpec, points: Iterable[Point | tuple[int, ...]]) -> "PointSet":
        coords = []
        for pt in points:
            if isinstance(pt, Point):
                if pt.ambient != ambient:
                    raise ContractViolation(f"{pt!r} does not belong to {ambient!r}.")
                coords.append(pt.coords)
            else:
                coords.append(Point(ambient=ambient, coords=tuple(pt)).coords)
        if not coords:
            return cls.empty(ambient)
        return cls.from_ranks(ambient, ranks_of(ambient, np.array(coords, dtype=np.int64)))

    @classmethod
    def empty(cls, ambient: AmbientSpec) -> "PointSet":
        return cls.from_mask(ambient, np.zeros(ambient.size, dtype=bool))

    @classmethod
    def full(cls, ambient: AmbientSpec) -> "PointSet":
        return cls.from_mask(ambient, np.ones(ambient.size, dtype=bool))

    # -------------------------------------------------------------------------
    # Access
    # -------------------------------------------------------------------------

    @property
    def mask(self) -> np.ndarray:
        """Unpacked boolean membership array of length q^d."""
        return np.unpackbits(self.bits, count=self.ambient.size, bitorder="little").astype(bool)

    def ranks(self) -> np.ndarray:
        """Sorted ranks of the members."""
        return np.flatnonzero(self.mask).astype(np.int64)

    def points(self) -> list[Point]:
        return [unrank(self.ambient, int(r)) for r in self.ranks()]

    def __len__(self) -> int:
        return self.cardinality

    def __iter__(self) -> Iterator[int]:  # type: ignore[override]
        return iter(int(r) for r in self.ranks())

    def __contains__(self, item: Any) -> bool:
        r = item.rank if isinstance(item, Point) else item
        if not 0 <= r < self.ambient.size:
            return False
        return bool((self.bits[r >> 3] >> (r & 7)) & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.ambient == other.ambient and bool(np.array_equal(self.bits, other.bits))

    def __hash__(self) -> int:
        return hash((self.ambient, self.bits.tobytes()))

    def __repr__(self) -> str:
        return f"PointSet({self.ambient!r}, |A|={self.cardinality})"

    # -------------------------------------------------------------------------
    # Set algebra
    # -------------------------------------------------------------------------

    def _check_peer(self, other: "PointSet") -> None:
        if self.ambient != other.ambient:
            raise ContractViolation(f"cannot combine sets of {self.ambient!r} and {other.ambient!r}.")

    def _from_bits(self, bits: np.ndarray) -> "PointSet":
        tail = self.ambient.size % 8
        if tail:
            bits = bits.copy()
            bits[-1] &= (1 << tail) - 1
        return PointSet(
            ambient=self.ambient,
            bits=bits,
            cardinality=int(np.unpackbits(bits).sum()),
        )

    def union(self, other: "PointSet") -> "PointSet":
        self._check_peer(other)
        return self._from_bits(self.bits | other.bits)

    def intersection(self, other: "PointSet") -> "PointSet":
        self._check_peer(other)
        return self._from_bits(self.bits & other.bits)

    def difference(self, other: "PointSet") -> "PointSet":
        self._check_peer(other)
        return self._from_bits(self.bits & ~other.bits)

    def complement(self) -> "PointSet":
        return self._from_bits(~self.bits)

    def is_subset(self, other: "PointSet") -> bool:
        self._check_peer(other)
        return not bool(np.any(self.bits & ~other.bits))

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __invert__ = complement
    __le__ = is_subset

    def translate(self, t: Point | int) -> "PointSet":
        """A + t."""
        shift = t.rank if isinstance(t, Point) else self.ambient.check_rank(t)
        return PointSet.from_ranks(self.ambient, add_ranks(self.ambient, self.ranks(), np.int64(shift)))

    def negate(self) -> "PointSet":
        """-A."""
        return PointSet.from_ranks(self.ambient, neg_ranks(self.ambient, self.ranks()))
