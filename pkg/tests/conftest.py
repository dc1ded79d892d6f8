"""Pytest configuration and shared fixtures for all tests.

This module registers the fixture modules of the fixtures package so they
are available to every test.
"""

from __future__ import annotations

# Register fixture modules with pytest
pytest_plugins = [
    "tests.fixtures.fields",
    "tests.fixtures.spaces",
]
