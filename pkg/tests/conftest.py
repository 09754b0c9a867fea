from __future__ import annotations

import pytest

from cuberips import SpaceSpec, enumerate_skeleton


@pytest.fixture(scope="session")
def q3r2():
    """Full skeleton of the 3-cube at scale 2 (top dimension 3)."""
    return enumerate_skeleton(SpaceSpec.hypercube(3, 2), 4)


@pytest.fixture(scope="session")
def q4r2():
    """Full skeleton of the 4-cube at scale 2 (top dimension 4)."""
    return enumerate_skeleton(SpaceSpec.hypercube(4, 2), 5)
