"""Energies agree across the convolution, spectral and tuple-enumeration paths."""

import itertools
import time

import numpy as np
import pytest

from ffdistlab.analysis import energy_bruteforce, energy_via_spectrum, sumset_iterate
from ffdistlab.geometry import AmbientSpec, PointSet, Variety, sphere
from ffdistlab.harness import draw_subset
from ffdistlab.settings import settings


def all_subsets(V: Variety) -> list[PointSet]:
    members = V.points.ranks().tolist()
    return [
        PointSet.from_ranks(V.ambient, combo)
        for size in range(len(members) + 1)
        for combo in itertools.combinations(members, size)
    ]


@pytest.mark.integration
class TestThreeWayEnergy:
    """Brute force, sum of mu_k^2 and the rounded spectral sum coincide."""

    def test_every_subset_of_the_unit_sphere_in_f3_cubed(self, sphere3: Variety) -> None:
        """Test all 64 subsets of S_1 in F_3^3 for k = 1, 2, 3."""
        subsets = all_subsets(sphere3)
        assert len(subsets) == 64
        start = time.perf_counter()
        for A in subsets:
            for k in (1, 2, 3):
                convolution = sumset_iterate(A, k).sum_of_squares()
                assert energy_bruteforce(A, k).value == convolution
                assert energy_via_spectrum(A, k) == convolution
        assert time.perf_counter() - start < 10


@pytest.mark.integration
class TestSumsetLowerBound:
    """|A_l| E_l(A) >= |A|^(2l) in exact integers."""

    def test_exhaustive_small_sphere(self, sphere3: Variety) -> None:
        """Test every subset of S_1 in F_3^3 for l = 1, 2, 3."""
        for A in all_subsets(sphere3)[1:]:
            for l in (1, 2, 3):
                mu = sumset_iterate(A, l)
                assert mu.support_size * mu.sum_of_squares() >= len(A) ** (2 * l)

    @pytest.mark.slow
    def test_seeded_instances_in_f5_fourth(self) -> None:
        """Test 1000 seeded (A, l) instances in S_1 of F_5^4."""
        V = sphere(AmbientSpec.of(5, 4), 1)
        members = V.points.ranks()
        rng = np.random.default_rng(2024)
        start = time.perf_counter()
        for i in range(1000):
            size = int(rng.integers(1, members.size + 1))
            l = int(rng.integers(1, 4))
            A = PointSet.from_ranks(V.ambient, draw_subset(members, size, i, seed=2024))
            mu = sumset_iterate(A, l)
            assert mu.support_size * mu.sum_of_squares() >= size ** (2 * l), (size, l, i)
        assert time.perf_counter() - start < 60


@pytest.mark.slow
class TestSpectralSpeedup:
    """The spectral energy beats tuple enumeration by an order of magnitude."""

    def test_two_hundred_points_in_f7_fourth(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test E_2 of 200 points of S_1 in F_7^4 both ways."""
        monkeypatch.setattr(settings, "tuple_budget", 10**7)
        V = sphere(AmbientSpec.of(7, 4), 1)
        A = PointSet.from_ranks(V.ambient, draw_subset(V.points.ranks(), 200, 0, seed=7))
        warmup = PointSet.from_ranks(V.ambient, V.points.ranks()[:3])
        energy_via_spectrum(warmup, 2)
        energy_bruteforce(warmup, 2)

        start = time.perf_counter()
        spectral = energy_via_spectrum(A, 2)
        spectral_time = time.perf_counter() - start

        start = time.perf_counter()
        brute = energy_bruteforce(A, 2).value
        brute_time = time.perf_counter() - start

        assert spectral == brute
        assert brute_time >= 10 * spectral_time
