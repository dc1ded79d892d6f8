"""
Exact identity suite behind ``ffdistlab verify``.

Every identity here holds with equality, so a single mismatch is a bug: the
first failure raises `IdentityViolation` carrying the offending instance.
Sets are seeded subsets of the unit sphere S_1 plus the empty set and S_1
itself; sphere sizes are compared against the closed formula for every radius.
"""

import hashlib
import logging
from collections.abc import Callable
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ffdistlab.analysis import (
    combinatorics,
    distance_set_diff,
    distance_set_sum,
    dot_product_set,
    energy_bruteforce,
    energy_pair,
    energy_via_spectrum,
    fourier_indicator,
    fourier_indicator_direct,
    k_distance_set,
    parseval_check,
    sumset_via_spectrum,
)
from ffdistlab.errors import IdentityViolation
from ffdistlab.geometry import AmbientSpec, PointSet, coords_of, sphere, sphere_size_formula
from ffdistlab.settings import settings

from .sampling import draw_subset

logger = logging.getLogger(__name__)

DEFAULT_GRID: tuple[tuple[int, int], ...] = ((3, 2), (3, 3), (5, 2), (5, 3))


class IdentityConfig(BaseModel):
    """
    Attributes:
        grid: (q, d) pairs to run on.
        sets_per_size: Seeded subsets of S_1 drawn at each size.
        max_k: Largest energy level checked; Delta_k splitting runs to max_k + 1.
        seed: Seed of the subset draws.
    """

    model_config = ConfigDict(frozen=True)

    grid: tuple[tuple[int, int], ...] = DEFAULT_GRID
    sets_per_size: int = Field(default=3, ge=1)
    max_k: int = Field(default=3, ge=1, le=4)
    seed: int = Field(default=0, ge=0, lt=1 << 64)

    def config_hash(self) -> str:
        return hashlib.sha256(self.model_dump_json().encode("utf-8")).hexdigest()


class IdentityCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    identity: str
    instances: int


class IdentitySummary(BaseModel):
    """Instances checked per identity. Only produced when everything held."""

    model_config = ConfigDict(frozen=True)

    checks: list[IdentityCheck]
    sets: int
    passed: bool = True
    config_hash: str

    @property
    def instances(self) -> int:
        return sum(check.instances for check in self.checks)


class _Tally:
    def __init__(self) -> None:
        self.counts: dict[str, int] = {}

    def check(self, identity: str, holds: bool, witness: Callable[[], dict[str, Any]]) -> None:
        if not holds:
            raise IdentityViolation(identity, witness())
        self.counts[identity] = self.counts.get(identity, 0) + 1


def _describe(A: PointSet, **extra: Any) -> dict[str, Any]:
    ambient = A.ambient
    return {
        "q": ambient.q,
        "d": ambient.d,
        "A": coords_of(ambient, A.ranks()).tolist(),
        **extra,
    }


def sample_sets(ambient: AmbientSpec, sets_per_size: int, seed: int) -> list[PointSet]:
    """The empty set, seeded subsets of S_1 at a few sizes, and S_1 itself."""
    unit = sphere(ambient, 1).points
    members = unit.ranks()
    sets = [PointSet.empty(ambient)]
    sizes = sorted({s for s in (1, 2, 3, members.size // 2) if 1 <= s < members.size})
    for size in sizes:
        for i in range(sets_per_size):
            sets.append(PointSet.from_ranks(ambient, draw_subset(members, size, i, seed)))
    if members.size:
        sets.append(unit)
    return sets


# =============================================================================
# Per-set identities
# =============================================================================


def _check_energies(tally: _Tally, A: PointSet, max_k: int) -> None:
    n = len(A)
    for k in range(1, max_k + 1):
        convolution = combinatorics.sumset_iterate(A, k).sum_of_squares()
        spectral = energy_via_spectrum(A, k)
        brute = energy_bruteforce(A, k).value if n ** (2 * k - 1) <= settings.tuple_budget else convolution
        tally.check(
            "energy-three-way",
            convolution == spectral == brute,
            lambda: _describe(A, k=k, convolution=convolution, spectral=spectral, bruteforce=brute),
        )
    e1 = combinatorics.sumset_iterate(A, 1).sum_of_squares()
    tally.check("energy-one-is-size", e1 == n, lambda: _describe(A, E1=e1))
    e2 = combinatorics.sumset_iterate(A, 2).sum_of_squares()
    pair = energy_pair(A, A).value
    tally.check("energy-two-is-pair", e2 == pair, lambda: _describe(A, E2=e2, pair=pair))


def _check_sumsets(tally: _Tally, A: PointSet, max_k: int) -> None:
    n = len(A)
    for l in range(1, max_k + 2):
        mu = combinatorics.sumset_iterate(A, l)
        tally.check("sumset-total", mu.total == n**l, lambda: _describe(A, l=l, total=mu.total))
        spectral = sumset_via_spectrum(A, l)
        tally.check(
            "sumset-spectral",
            bool(np.array_equal(np.asarray(mu.counts, dtype=np.int64), spectral.counts)),
            lambda: _describe(A, l=l),
        )
        if n and l <= max_k:
            lhs = mu.support_size * mu.sum_of_squares()
            tally.check(
                "sumset-cauchy-schwarz",
                lhs >= n ** (2 * l),
                lambda: _describe(A, l=l, support=mu.support_size, energy=mu.sum_of_squares()),
            )


def _check_spectrum(tally: _Tally, A: PointSet) -> None:
    residue = parseval_check(A)
    tally.check("parseval", residue < settings.identity_tolerance, lambda: _describe(A, residue=residue))
    fast, direct = fourier_indicator(A).values, fourier_indicator_direct(A).values
    gap = float(np.abs(fast - direct).max(initial=0.0))
    tally.check("transform-direct", gap < settings.identity_tolerance, lambda: _describe(A, gap=gap))


def _check_distances(tally: _Tally, A: PointSet, max_k: int) -> None:
    # x, y in S_1 gives |x - y| = 2 - 2 x.y
    diff, dots = distance_set_diff(A), dot_product_set(A)
    tally.check(
        "sphere-distance-dot",
        len(diff) == len(dots),
        lambda: _describe(A, distances=sorted(diff.values), dots=sorted(dots.values)),
    )
    for k in range(2, max_k + 2):
        whole = k_distance_set(A, k).values
        for l in range(1, k):
            left = combinatorics.sumset_iterate(A, l).support
            right = combinatorics.sumset_iterate(A, k - l).support
            split = distance_set_sum(left, right).values
            tally.check(
                "delta-split",
                whole == split,
                lambda: _describe(A, k=k, l=l, whole=sorted(whole), split=sorted(split)),
            )


# =============================================================================
# Suite
# =============================================================================


def verify_identities(config: IdentityConfig | None = None) -> IdentitySummary:
    """
    Run every identity on every (q, d) of the grid.

    Raises:
        IdentityViolation: First identity that fails, with its witness.
    """
    config = config or IdentityConfig()
    tally = _Tally()
    total_sets = 0
    for q, d in config.grid:
        ambient = AmbientSpec.of(q, d)
        for j in range(q):
            enumerated = len(sphere(ambient, j).points)
            formula = sphere_size_formula(ambient, j)
            tally.check(
                "sphere-size",
                enumerated == formula,
                lambda: {"q": q, "d": d, "j": j, "enumerated": enumerated, "formula": formula},
            )
        sets = sample_sets(ambient, config.sets_per_size, config.seed)
        for A in sets:
            _check_energies(tally, A, config.max_k)
            _check_sumsets(tally, A, config.max_k)
            _check_spectrum(tally, A)
            _check_distances(tally, A, config.max_k)
        total_sets += len(sets)
        logger.info("Identities hold on %d sets over F_%d^%d", len(sets), q, d)
    checks = [IdentityCheck(identity=name, instances=count) for name, count in tally.counts.items()]
    return IdentitySummary(checks=checks, sets=total_sets, config_hash=config.config_hash())
