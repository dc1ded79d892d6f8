"""Ambient space and variety fixtures."""

from __future__ import annotations

import pytest

from ffdistlab.geometry import AmbientSpec, PointSet, Variety, sphere


@pytest.fixture
def plane3() -> AmbientSpec:
    """F_3^2."""
    return AmbientSpec.of(3, 2)


@pytest.fixture
def space3() -> AmbientSpec:
    """F_3^3."""
    return AmbientSpec.of(3, 3)


@pytest.fixture
def space5() -> AmbientSpec:
    """F_5^3."""
    return AmbientSpec.of(5, 3)


@pytest.fixture
def circle3(plane3: AmbientSpec) -> Variety:
    """S_1 in F_3^2: the four points (0,1), (0,2), (1,0), (2,0)."""
    return sphere(plane3, 1)


@pytest.fixture
def sphere3(space3: AmbientSpec) -> Variety:
    """S_1 in F_3^3 (six points)."""
    return sphere(space3, 1)


@pytest.fixture
def sphere5(space5: AmbientSpec) -> Variety:
    """S_1 in F_5^3 (thirty points)."""
    return sphere(space5, 1)


@pytest.fixture
def segment(plane3: AmbientSpec) -> PointSet:
    """{(0,0), (1,0)} in F_3^2."""
    return PointSet.from_points(plane3, [(0, 0), (1, 0)])
