"""Tests for edge cases and boundary sizes across all components."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from ffdistlab.analysis import (
    cardak_bound,
    distance_set_diff,
    dot_product_set,
    energy_k,
    energy_pair,
    energy_via_spectrum,
    fourier_indicator,
    k_distance_set,
    sumset_iterate,
)
from ffdistlab.analysis.spectral import _round_exact
from ffdistlab.errors import NumericalFailure, ResourceBudgetExceeded
from ffdistlab.geometry import AmbientSpec, PointSet, max_affine_subspace, sphere
from ffdistlab.settings import Settings, settings


# =============================================================================
# Test Edge Cases for Point Sets
# =============================================================================


@pytest.mark.edge_case
class TestPointSetEdgeCases:
    """Test empty, singleton and full sets."""

    def test_empty_set_everywhere(self, plane3: AmbientSpec) -> None:
        """Test every distance set of the empty set is empty."""
        empty = PointSet.empty(plane3)
        assert len(k_distance_set(empty, 2)) == 0
        assert len(distance_set_diff(empty)) == 0
        assert len(dot_product_set(empty)) == 0
        assert sumset_iterate(empty, 3).total == 0

    def test_singleton_without_diagonal(self, plane3: AmbientSpec) -> None:
        """Test a single point has no distance to another point."""
        A = PointSet.from_points(plane3, [(1, 1)])
        assert len(distance_set_diff(A, include_diagonal=False)) == 0
        assert list(distance_set_diff(A)) == [0]

    def test_full_space(self, plane3: AmbientSpec) -> None:
        """Test E_l of F_q^d is q^{d(2l-1)} so the sumset bound is exact."""
        full = PointSet.full(plane3)
        assert energy_k(full, 2).value == 9**3
        assert cardak_bound(full, 2) == Fraction(9)
        assert list(k_distance_set(full, 2)) == [0, 1, 2]

    def test_one_dimensional_space(self) -> None:
        """Test d = 1, where points are field elements."""
        line = AmbientSpec.of(5, 1)
        circle = sphere(line, 4)
        assert sorted(p.coords for p in circle.points.points()) == [(2,), (3,)]
        assert energy_pair(circle.points, circle.points).value == 6
        assert max_affine_subspace(circle).t_V == 1

    def test_spectrum_of_a_single_point(self) -> None:
        """Test every coefficient of a point has modulus q^{-d}."""
        ambient = AmbientSpec.of(9, 2)
        spectrum = fourier_indicator(PointSet.from_ranks(ambient, [17]))
        assert np.allclose(np.abs(spectrum.values), 1 / 81)


# =============================================================================
# Test Edge Cases for Large Counts
# =============================================================================


@pytest.mark.edge_case
class TestLargeCounts:
    """Test counts beyond 64 bits and budget boundaries."""

    def test_counts_switch_to_python_ints(self) -> None:
        """Test mu_10 of F_9^2 totals 81^10 exactly."""
        full = PointSet.full(AmbientSpec.of(9, 2))
        mu = sumset_iterate(full, 10)
        assert mu.counts.dtype == object
        assert mu.total == 81**10
        assert mu[0] == 81**9

    def test_spectral_energy_of_the_full_space(self) -> None:
        """Test the spectral path rounds to the exact value."""
        full = PointSet.full(AmbientSpec.of(5, 2))
        assert energy_via_spectrum(full, 2) == 25**3

    def test_rounding_margin_is_absolute(self) -> None:
        """Test a large value 0.4 away from an integer is refused, not rounded."""
        with pytest.raises(NumericalFailure):
            _round_exact(1e9 + 0.4, "E")
        assert _round_exact(1e9 + 1e-7, "E") == 10**9

    def test_rounding_refuses_coarse_floats(self) -> None:
        """Test values whose float spacing exceeds one half are never rounded."""
        with pytest.raises(NumericalFailure, match="Hint"):
            _round_exact(float(2**60), "E")

    def test_budget_patch(self, monkeypatch: pytest.MonkeyPatch, plane3: AmbientSpec) -> None:
        """Test settings are read at call time."""
        monkeypatch.setattr(settings, "budget", 8)
        with pytest.raises(ResourceBudgetExceeded) as excinfo:
            sumset_iterate(PointSet.empty(plane3), 2)
        assert (excinfo.value.size, excinfo.value.budget) == (9, 8)

    def test_budget_boundary_is_inclusive(self, monkeypatch: pytest.MonkeyPatch, plane3: AmbientSpec) -> None:
        """Test a rank space exactly at the budget is allowed."""
        monkeypatch.setattr(settings, "budget", 9)
        assert sumset_iterate(PointSet.full(plane3), 1).total == 9

    def test_environment_override(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test FFDISTLAB_ variables configure a fresh Settings."""
        monkeypatch.setenv("FFDISTLAB_BUDGET", "1234")
        monkeypatch.setenv("ffdistlab_log_level", "DEBUG")
        fresh = Settings()
        assert fresh.budget == 1234
        assert fresh.log_level == "DEBUG"
