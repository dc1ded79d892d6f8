"""Tests for threshold scans."""

import math
from fractions import Fraction

import pytest

from ffdistlab.errors import ContractViolation, HypothesisViolation
from ffdistlab.harness import ExperimentConfig, scan_thresholds, to_csv
from ffdistlab.harness.scans import theorem_params


@pytest.fixture
def circle_config() -> ExperimentConfig:
    """S_1 in F_3^2 with k = 2, every set counted as >> q only when Delta_2 = F_3."""
    return ExperimentConfig(q=3, d=2, k=2, sizes="1,2,4", sample_count=3, ggq_fraction=1)


@pytest.mark.unit
class TestScanRows:
    """Test the rows of a small exhaustive scan."""

    def test_exhaustive_counts(self, circle_config: ExperimentConfig) -> None:
        """Test small sizes list every subset regardless of sample_count."""
        report = scan_thresholds(circle_config)
        assert [row.size for row in report.rows] == [1, 2, 4]
        assert [row.samples for row in report.rows] == [4, 6, 1]
        assert all(row.exhaustive for row in report.rows)

    def test_distance_counts(self, circle_config: ExperimentConfig) -> None:
        """Test |Delta_2| is 1 for a point, at most 2 for a pair and 3 for S_1."""
        single, pair, full = scan_thresholds(circle_config).rows
        assert (single.min_delta, single.max_delta) == (1, 1)
        assert pair.max_delta == 2
        assert (full.min_delta, full.mean_delta, full.max_delta) == (3, 3.0, 3)
        assert full.log_q_size == pytest.approx(math.log(4, 3))

    def test_crossover(self, circle_config: ExperimentConfig) -> None:
        """Test the crossover is the first size where half the sets reach ggq_fraction * q."""
        report = scan_thresholds(circle_config)
        assert [row.fraction_ggq for row in report.rows] == [0.0, 0.0, 1.0]
        assert report.crossover_size == 4
        assert report.crossover_exponent == pytest.approx(math.log(4, 3))

    def test_split_product_thresholds(self, circle_config: ExperimentConfig) -> None:
        """Test |A|^2 against q^((d+1)/2) and q^(d+1) for k = 2."""
        rows = scan_thresholds(circle_config).rows
        assert [row.split_product_ok_low for row in rows] == [0.0, 0.0, 1.0]
        assert [row.split_product_ok_high for row in rows] == [0.0, 0.0, 0.0]

    def test_zero_size_skipped(self) -> None:
        """Test a size of zero produces no row."""
        report = scan_thresholds(ExperimentConfig(q=3, d=2, k=2, sizes="0,4"))
        assert [row.size for row in report.rows] == [4]

    def test_deterministic_csv(self) -> None:
        """Test a fixed seed gives byte-identical CSV on a sampled scan."""
        config = ExperimentConfig(q=5, d=3, k=3, sizes="6,12", sample_count=4, seed=5)
        first = to_csv(scan_thresholds(config).rows)
        assert first == to_csv(scan_thresholds(config).rows)
        assert first.splitlines()[0].startswith("size,log_q_size,samples,exhaustive,min_delta")


@pytest.mark.unit
class TestScanTheorems:
    """Test predicted thresholds attached to scans."""

    def test_prediction_on_even_sphere(self) -> None:
        """Test sphere-even-k3 on F_3^4 predicts q^(7/4)."""
        config = ExperimentConfig(q=3, d=4, k=3, sizes="24", size_constant=2)
        report = scan_thresholds(config, "sphere-even-k3")
        assert report.predicted_exponent == Fraction(7, 4)
        assert report.predicted_size == pytest.approx(2 * 3**1.75)
        assert report.rows[0].predicted_exponent == Fraction(7, 4)

    def test_affine_alpha_from_t_v(self) -> None:
        """Test alpha is the dimension of the largest flat in V."""
        config = ExperimentConfig(q=5, d=3, k=3)
        variety = config.build_variety()
        assert theorem_params(config, variety, "affine-k3").alpha == 1
        assert theorem_params(config, variety, "sphere-odd-k3").alpha == 0

    def test_k_mismatch_warns(self, caplog: pytest.LogCaptureFixture) -> None:
        """Test a theorem stated for another k logs a warning."""
        config = ExperimentConfig(q=5, d=3, k=4)
        with caplog.at_level("WARNING", logger="ffdistlab.harness.scans"):
            theorem_params(config, config.build_variety(), "sphere-odd-k3")
        assert "stated for k = 3" in caplog.text

    def test_hypothesis_checked(self) -> None:
        """Test a scan refuses a theorem whose hypotheses fail."""
        with pytest.raises(HypothesisViolation):
            scan_thresholds(ExperimentConfig(q=3, d=3, k=3, sizes="2"), "sphere-odd-k3")

    def test_k_below_two(self) -> None:
        """Test Delta_1 scans are refused."""
        with pytest.raises(ContractViolation):
            scan_thresholds(ExperimentConfig(q=3, d=2, k=1, sizes="2"))
