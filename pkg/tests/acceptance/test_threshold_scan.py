"""Delta_3 on the unit sphere of F_7^4 crosses from tiny to all of F_7."""

from fractions import Fraction

import pytest

from ffdistlab.harness import ExperimentConfig, scan_thresholds
from ffdistlab.settings import settings


@pytest.mark.slow
class TestSphereScan:
    """Scan S_1 in F_7^4 with k = 3 against sphere-even-k3."""

    def test_boundary_fractions(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test no single point reaches q/4 distances while the whole sphere does."""
        monkeypatch.setattr(settings, "exhaustive_limit", 1000)
        config = ExperimentConfig(q=7, d=4, k=3, sizes="1,geom:2:max", sample_count=10, seed=0)
        report = scan_thresholds(config, "sphere-even-k3")

        first, last = report.rows[0], report.rows[-1]
        assert (first.size, last.size) == (1, 336)
        assert first.fraction_ggq == 0.0
        assert last.fraction_ggq == 1.0
        assert report.predicted_exponent == Fraction(7, 4)
        assert report.crossover_size is not None
        assert report.crossover_exponent is not None
