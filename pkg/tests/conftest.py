import numpy as np
import pytest

from dunklosc.hermite import AlphaParams
from dunklosc.quadrature import default_rule

# The alpha test matrix used throughout: three 1-d values spanning the atomic
# case, the unweighted case and a generic positive order, plus one 2-d vector.
ALPHA_MATRIX = [(-0.5,), (0.0,), (1.3,), (-0.5, 0.7)]


@pytest.fixture(scope="session")
def rules():
    """80-point default rules per alpha config, shared across tests."""
    return {al: default_rule(AlphaParams(al), 80) for al in ALPHA_MATRIX}


def reflection_distance(x, y):
    """min over nontrivial sign flips sigma of |sigma x - y|."""
    x = np.asarray(x, float)
    y = np.asarray(y, float)
    d = x.size
    best = np.inf
    for bits in np.ndindex(*([2] * d)):
        if not any(bits):
            continue
        sg = np.array([1.0 if b == 0 else -1.0 for b in bits])
        best = min(best, float(np.linalg.norm(sg * x - y)))
    return best
