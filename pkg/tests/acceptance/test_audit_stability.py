"""Spheres pass the regularity audit and lemma audits are reproducible."""

import math
from fractions import Fraction

import pytest

from ffdistlab.analysis import energy_k, energy_pair, fourier_indicator_direct, max_nonzero_coefficient, regular_audit
from ffdistlab.geometry import AmbientSpec, sphere
from ffdistlab.harness import ExperimentConfig, audit_lemma
from ffdistlab.settings import settings

# Decay constants of S_j, j != 0. For even d they are max_c |K(1, c)| / sqrt(q) over
# Kloosterman sums, for odd d the Salie sums give max_w 2|cos(2 pi w / q)|. Neither depends on j.
DECAY_CONSTANTS = {
    (3, 2): 2 / math.sqrt(3),
    (3, 3): 1.0,
    (3, 4): 2 / math.sqrt(3),
    (5, 2): 1 + 1 / math.sqrt(5),
    (5, 3): (1 + math.sqrt(5)) / 2,
    (5, 4): 1 + 1 / math.sqrt(5),
    (7, 2): (2 + 4 * math.cos(2 * math.pi / 7)) / math.sqrt(7),
    (7, 3): -2 * math.cos(6 * math.pi / 7),
    (7, 4): (2 + 4 * math.cos(2 * math.pi / 7)) / math.sqrt(7),
}

# |S_j| for j = 1, ..., q - 1, counted by hand.
SPHERE_SIZES = {
    (3, 2): [4, 4],
    (3, 3): [6, 12],
    (3, 4): [24, 24],
    (5, 2): [4, 4, 4, 4],
    (5, 3): [30, 20, 20, 30],
    (5, 4): [120] * 4,
    (7, 2): [8] * 6,
    (7, 3): [42, 42, 56, 42, 56, 56],
    (7, 4): [336] * 6,
}

# S_1 in F_5^4, worked out through the fourth and sixth moments of its Fourier transform.
FULL_SPHERE_E2 = 351_000
FULL_SPHERE_E3 = 4_782_000_000


@pytest.mark.slow
class TestSpheresAreRegular:
    """Spheres S_j, j != 0, have decay constant at most 2 and |S_j| close to q^(d-1)."""

    @pytest.mark.parametrize("q", [3, 5, 7])
    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_decay_and_size(self, q: int, d: int) -> None:
        """Test every nonzero radius against the pinned constants."""
        ambient = AmbientSpec.of(q, d)
        for j, size in enumerate(SPHERE_SIZES[q, d], start=1):
            report = regular_audit(sphere(ambient, j))
            assert report.cardinality == size, (q, d, j)
            assert report.size_ratio == pytest.approx(size / q ** (d - 1), rel=1e-12), (q, d, j)
            assert report.decay_constant == pytest.approx(DECAY_CONSTANTS[q, d], rel=1e-9), (q, d, j)
            assert report.decay_constant <= 2.0 + 1e-9, (q, d, j)
            assert 0.5 <= report.size_ratio <= 1.5, (q, d, j)

    @pytest.mark.parametrize(("q", "d"), [(3, 2), (5, 2), (3, 3), (5, 3)])
    def test_direct_sum_oracle(self, q: int, d: int) -> None:
        """Test the audited peak matches the direct-sum transform."""
        V = sphere(AmbientSpec.of(q, d), 1)
        direct = max_nonzero_coefficient(fourier_indicator_direct(V.points))
        assert regular_audit(V).max_coefficient == pytest.approx(direct, abs=1e-12)


@pytest.mark.slow
class TestLemmaAuditsReproduce:
    """Audits on S_1 in F_5^4 with seed 1 and 200 samples give identical reports."""

    # Sizes geom:4:max are 4, 8, 16, 32, 64 (200 draws each) and 120 (the whole sphere, listed once).
    @pytest.mark.parametrize(
        ("lemma", "instances", "skipped", "full_sphere_ratio"),
        [
            ("pair-energy-even", 1001, 0, Fraction(FULL_SPHERE_E2, 120**3 // 5 + 5 * 120**2)),
            ("energy-induction", 1001, 0, Fraction(FULL_SPHERE_E3, 125 * FULL_SPHERE_E2 + 120**5 // 5)),
            ("sphere-energy-k", 601, 400, Fraction(FULL_SPHERE_E3, 625 * 120**2 + 120**5 // 5 + 25 * 120**3)),
        ],
    )
    def test_byte_identical(
        self,
        lemma: str,
        instances: int,
        skipped: int,
        full_sphere_ratio: Fraction,
        monkeypatch: pytest.MonkeyPatch,
    ) -> None:
        """Test two runs render to the same JSON and match the pinned counts and bounds."""
        monkeypatch.setattr(settings, "exhaustive_limit", 1000)
        config = ExperimentConfig(q=5, d=4, k=3, seed=1, sample_count=200, sizes="geom:4:max")
        first = audit_lemma(lemma, config)
        assert first.model_dump_json() == audit_lemma(lemma, config).model_dump_json()
        assert (first.instances, first.skipped) == (instances, skipped)
        assert first.seed == 1
        # Upper-bound audits keep the largest ratio, and the whole sphere is one of the cells.
        assert first.empirical_constant >= float(full_sphere_ratio) - 1e-12
        assert first.empirical_constant < 1.0

    def test_full_sphere_energies(self) -> None:
        """Test E_2 and E_3 of S_1 in F_5^4 against their closed forms."""
        S = sphere(AmbientSpec.of(5, 4), 1).points
        assert energy_pair(S, S).value == FULL_SPHERE_E2
        assert energy_k(S, 2, cross_check=False).value == FULL_SPHERE_E2
        assert energy_k(S, 3, cross_check=False).value == FULL_SPHERE_E3
