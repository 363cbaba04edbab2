import math

import numpy as np
import pytest
from hypothesis import strategies as st

from gausslink import Segment
from gausslink.sampling import make_rng, random_skew_pair

coord = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
point = st.tuples(coord, coord, coord).map(np.array)


@st.composite
def skew_pairs(draw, min_gap=0.05):
    """Two segments in general position, comfortably apart."""
    seed = draw(st.integers(0, 2**32 - 1))
    box = draw(st.floats(0.1, 100))
    return random_skew_pair(make_rng(seed), box=box, min_gap=min_gap)


@pytest.fixture
def rng():
    return make_rng(20240601)


@pytest.fixture
def simple_pair():
    """Orthogonal unit segments from the feet of their common perpendicular."""
    return Segment((0, 0, 0), (1, 0, 0)), Segment((0, 0, 1), (0, 1, 1))


def brute_distance(s1, s2, n=801):
    t = np.linspace(0, 1, n)
    p = s1.a + t[:, None] * s1.vector
    q = s2.a + t[:, None] * s2.vector
    return float(np.sqrt(((p[:, None, :] - q[None, :, :]) ** 2).sum(-1)).min())


TAU = 2 * math.pi
