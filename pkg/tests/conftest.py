"""Shared fixtures."""

import pytest

from cosmicode.physics.constants import PhysicalConstants


@pytest.fixture
def constants() -> PhysicalConstants:
    """Default constants (CODATA alpha, 1.22e19 GeV Planck energy)."""
    return PhysicalConstants()
