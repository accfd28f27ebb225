import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from matroid_ring import Poset
from matroid_ring.errors import IncomparableElements
from matroid_ring.poset import BOTTOM, TOP, random_poset

from oracles import mobius_hall

seeds = st.integers(0, 2**32)


def boolean_lattice(k):
    return Poset(range(1 << k), lambda a, b: a & ~b == 0)


def test_basic_values():
    P = Poset(["x", "y"], lambda a, b: a <= b)
    assert P.mobius("x", "x") == 1
    assert P.mobius("x", "y") == -1
    with pytest.raises(IncomparableElements):
        P.mobius("y", "x")


def test_boolean_lattice():
    B = boolean_lattice(4)
    for a in range(16):
        for b in range(16):
            if a & ~b == 0:
                assert B.mobius(a, b) == (-1) ** bin(b & ~a).count("1")


def test_rejects_non_orders():
    with pytest.raises(ValueError):
        Poset([0, 1], [[1, 1], [1, 1]])
    with pytest.raises(ValueError):
        Poset([0, 1, 2], [[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    with pytest.raises(ValueError):
        Poset([0, 1], [[0, 1], [0, 1]])


def test_bounds_adjoined():
    P = Poset(["a", "b"], np.eye(2, dtype=bool))  # antichain of two
    hat = P.with_bounds()
    assert hat.elements[0] == BOTTOM and hat.elements[-1] == TOP
    assert P.mobius_number() == 1


@given(seeds, st.integers(1, 7))
def test_recursions_agree(seed, size):
    P = random_poset(np.random.default_rng(seed), size, 0.4)
    for x in P.elements:
        for y in P.elements:
            if P.le(x, y):
                m = P.mobius(x, y)
                assert m == P.mobius_dual(x, y) == mobius_hall(P, x, y)


@given(seeds, st.integers(1, 8))
def test_mobius_interval_sum(seed, size):
    # sum over x <= y <= z of mu(y, z) vanishes for x < z
    P = random_poset(np.random.default_rng(seed), size, 0.35)
    for x in P.elements:
        for z in P.elements:
            if x != z and P.le(x, z):
                total = sum(P.mobius(y, z) for y in P.elements if P.le(x, y) and P.le(y, z))
                assert total == 0


@given(seeds, st.integers(1, 7))
def test_chain_poset_has_same_mobius_number(seed, size):
    P = random_poset(np.random.default_rng(seed), size, 0.4)
    assert P.mobius_number() == P.chains().mobius_number()


@given(seeds, st.integers(1, 7))
def test_join_contractible_is_zero(seed, size):
    P = random_poset(np.random.default_rng(seed), size, 0.5)
    if P.is_join_contractible():
        assert P.mobius_number() == 0


def test_join_contractible_example():
    # a poset with a maximum is join-contractible
    P = Poset(range(4), lambda a, b: a == b or b == 3)
    assert P.is_join_contractible() and P.mobius_number() == 0
