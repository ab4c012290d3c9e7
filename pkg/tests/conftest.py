import numpy as np
import pytest
from hypothesis import strategies as st

from aislecop import AisleGraph, Variant


@st.composite
def graphs(draw, max_m=6, max_n=5, variant=Variant.TWO_SIDED, max_reward=9):
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    vals = draw(st.lists(st.integers(0, max_reward), min_size=m * n, max_size=m * n))
    return AisleGraph(np.array(vals, dtype=float).reshape(m, n), variant)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_graph(rng, m, n, variant=Variant.TWO_SIDED, density=0.7, high=10):
    r = rng.integers(0, high, (m, n)) * (rng.random((m, n)) < density)
    return AisleGraph(r.astype(float), variant)
