"""Shared fixtures: the exact N=3, g=1.5 zero-energy reference case."""

import math

import numpy as np
import pytest

from sombrero import PotentialParams

SQRT3 = math.sqrt(3.0)


@pytest.fixture
def worked_potential() -> PotentialParams:
    """Zero-energy sombrero at N=3, g=1.5: alpha = 2 sqrt(3), beta = 2, A = alpha/3."""
    return PotentialParams(g=1.5, alpha=2.0 * SQRT3, beta=2.0, bigA=2.0 * SQRT3 / 3.0, n_dim=3)


def random_potential(rng: np.random.Generator) -> PotentialParams:
    """Arbitrary (not constraint-satisfying) parameters in the tested ranges."""
    return PotentialParams(
        g=rng.uniform(0.5, 2.0),
        alpha=rng.uniform(-2.0, 3.0),
        beta=rng.uniform(-2.0, 3.0),
        bigA=rng.uniform(-2.0, 3.0),
        n_dim=int(rng.choice([1, 2, 3, 5])),
    )
