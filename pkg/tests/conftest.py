from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from matroid_ring import CyclicFlatList, from_bases, from_cyclic_flats, uniform
from matroid_ring.generators import KINDS, RandomMatroidSpec, all_matroids, random_matroid
from matroid_ring.errors import InfeasibleSpec

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@lru_cache(maxsize=None)
def matroids(n, loopfree=False):
    return tuple(all_matroids(n, loopfree))


@st.composite
def random_matroids(draw, min_n=2, max_n=6):
    n = draw(st.integers(min_n, max_n))
    r = draw(st.integers(1, n))
    kind = draw(st.sampled_from(KINDS))
    seed = draw(st.integers(0, 2**32))
    try:
        return random_matroid(RandomMatroidSpec(kind, n, r, seed))
    except InfeasibleSpec:
        return uniform(r, n)


def two_pairs():
    """Rank 2 on [4]: parallel classes {1,4} and {2,3}."""
    return from_bases(4, [[1, 2], [1, 3], [2, 4], [3, 4]])


def eight_element_matroid():
    pairs = [((), 0), ((1, 2), 1), ((3, 4), 1), ((1, 2, 3, 4), 2),
             ((1, 2, 3, 4, 5, 6), 3), ((1, 2, 3, 4, 7, 8), 3), (tuple(range(1, 9)), 4)]
    return from_cyclic_flats(CyclicFlatList.from_pairs(8, pairs))


@pytest.fixture
def M22():
    return two_pairs()


@pytest.fixture
def m8():
    return eight_element_matroid()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
