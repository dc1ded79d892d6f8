"""Sphere-pruned flat search agrees with the generic search."""

import pytest

from ffdistlab.geometry import AmbientSpec, contained_flats, max_affine_subspace, sphere


@pytest.mark.integration
class TestPrunedLineSearch:
    """Test every sphere over F_q^d with q <= 5 and d <= 3."""

    @pytest.mark.parametrize(("q", "d"), [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (5, 3)])
    def test_lines(self, q: int, d: int) -> None:
        """Test the same set of lines for every radius."""
        ambient = AmbientSpec.of(q, d)
        for j in range(q):
            V = sphere(ambient, j)
            assert contained_flats(V, 1, prune=True) == contained_flats(V, 1, prune=False), j

    @pytest.mark.parametrize(("q", "d"), [(3, 3), (5, 3)])
    def test_t_v(self, q: int, d: int) -> None:
        """Test t_V agrees with and without pruning, planes included."""
        ambient = AmbientSpec.of(q, d)
        for j in range(q):
            V = sphere(ambient, j)
            assert max_affine_subspace(V, prune=True).t_V == max_affine_subspace(V, prune=False).t_V
