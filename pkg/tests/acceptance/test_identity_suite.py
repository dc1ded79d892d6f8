"""Parseval, the distance/dot correspondence and Delta_k splitting on many sets."""

import itertools

import numpy as np
import pytest

from ffdistlab.analysis import (
    distance_set_diff,
    distance_set_sum,
    dot_product_set,
    k_distance_set,
    parseval_check,
    sumset_iterate,
)
from ffdistlab.geometry import AmbientSpec, PointSet, Variety, sphere
from ffdistlab.harness import draw_subset

SMALL_SPACES = [(3, 2), (3, 3), (5, 2), (5, 3), (7, 2), (7, 3)]


def random_subset(rng: np.random.Generator, ambient: AmbientSpec, members: np.ndarray) -> PointSet:
    size = int(rng.integers(0, members.size + 1))
    return PointSet.from_ranks(ambient, rng.choice(members, size=size, replace=False))


@pytest.mark.integration
class TestParseval:
    """sum_m |1_A^(m)|^2 = |A| / q^d."""

    def test_two_hundred_random_sets(self) -> None:
        """Test random subsets of F_q^d with q <= 7 and d <= 3."""
        rng = np.random.default_rng(3)
        for _ in range(200):
            q, d = SMALL_SPACES[int(rng.integers(len(SMALL_SPACES)))]
            ambient = AmbientSpec.of(q, d)
            A = random_subset(rng, ambient, np.arange(ambient.size))
            assert parseval_check(A) < 1e-9


@pytest.mark.integration
class TestDistancesAndDots:
    """On S_1, |x - y| = 2 - 2 x.y, so the two sets have the same size."""

    def test_every_subset_of_the_circle(self, circle3: Variety) -> None:
        """Test all 16 subsets of S_1 in F_3^2."""
        members = circle3.points.ranks().tolist()
        for size in range(len(members) + 1):
            for combo in itertools.combinations(members, size):
                A = PointSet.from_ranks(circle3.ambient, combo)
                assert len(distance_set_diff(A)) == len(dot_product_set(A))

    def test_random_subsets_of_the_sphere(self, sphere5: Variety) -> None:
        """Test 200 random subsets of S_1 in F_5^3."""
        rng = np.random.default_rng(5)
        members = sphere5.points.ranks()
        for _ in range(200):
            A = random_subset(rng, sphere5.ambient, members)
            diff, dots = distance_set_diff(A), dot_product_set(A)
            assert len(diff) == len(dots)
            assert diff.values == {(2 - 2 * v) % 5 for v in dots.values}


@pytest.mark.slow
class TestDeltaSplitting:
    """Delta_k(A) = Delta_2(A_l, A_{k-l}) for every split."""

    def test_hundred_random_sets(self) -> None:
        """Test k <= 4 and every l on 100 seeded subsets of spheres."""
        rng = np.random.default_rng(11)
        spheres = [sphere(AmbientSpec.of(q, d), 1) for q, d in SMALL_SPACES]
        for i in range(100):
            V = spheres[i % len(spheres)]
            members = V.points.ranks()
            size = int(rng.integers(1, members.size + 1))
            A = PointSet.from_ranks(V.ambient, draw_subset(members, size, i, seed=11))
            for k in range(2, 5):
                whole = k_distance_set(A, k)
                for l in range(1, k):
                    left = sumset_iterate(A, l).support
                    right = sumset_iterate(A, k - l).support
                    assert distance_set_sum(left, right) == whole, (i, k, l)
