import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from superschur.randgen import random_valid_algebra

settings.register_profile(
    "default", max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", max_examples=300, deadline=None)
settings.load_profile("default")


@st.composite
def valid_algebras(draw, max_even=3, max_odd=3):
    """Random valid superalgebras, seeded through hypothesis for shrinking/replay."""
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return random_valid_algebra(random.Random(seed), max_even, max_odd)


@pytest.fixture
def rng():
    return random.Random(12345)
