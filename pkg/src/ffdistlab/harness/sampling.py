"""
Seeded sampling of size-s subsets of a variety.

Replicate i at size s draws from ``numpy.random.default_rng([seed, s, i])``,
so every cell is reproducible on its own and raising the sample count only
appends cells. When C(|V|, s) is at most `settings.exhaustive_limit` every
subset is listed instead.
"""

import itertools
import logging
import math
from collections.abc import Iterator

import numpy as np
from pydantic import BaseModel, ConfigDict

from ffdistlab.errors import ContractViolation
from ffdistlab.geometry import PointSet, Variety
from ffdistlab.settings import settings

logger = logging.getLogger(__name__)


class Sample(BaseModel):
    """One experiment cell: a subset A of V with |A| = size."""

    model_config = ConfigDict(frozen=True)

    size: int
    replicate: int
    points: PointSet
    exhaustive: bool = False


def is_exhaustive(population: int, size: int) -> bool:
    return math.comb(population, size) <= settings.exhaustive_limit


def draw_subset(members: np.ndarray, size: int, replicate: int, seed: int) -> np.ndarray:
    """Uniform size-s subset of `members` for one (seed, size, replicate) cell."""
    rng = np.random.default_rng([seed, size, replicate])
    return np.sort(rng.choice(members, size=size, replace=False))


def iter_samples(variety: Variety, size: int, sample_count: int, seed: int) -> Iterator[Sample]:
    """Cells at one size, ordered by replicate index."""
    members = variety.points.ranks()
    if size > members.size:
        raise ContractViolation(f"cannot draw {size} points from a variety of size {members.size}.")
    ambient = variety.ambient
    if is_exhaustive(members.size, size):
        logger.debug("Exhaustive mode: all C(%d, %d) subsets", members.size, size)
        for i, combo in enumerate(itertools.combinations(members.tolist(), size)):
            yield Sample(size=size, replicate=i, points=PointSet.from_ranks(ambient, combo), exhaustive=True)
        return
    for i in range(sample_count):
        chosen = draw_subset(members, size, i, seed)
        yield Sample(size=size, replicate=i, points=PointSet.from_ranks(ambient, chosen))
