from itertools import accumulate, product

import pytest
from hypothesis import given, strategies as st

from jacksov.partitions import (
    PartitionError,
    as_partition,
    dominance_leq,
    enumerate_partitions,
    flat_and_natural,
    lower_set,
    weight,
)


def brute_partitions(n, w):
    return [p for p in product(range(w + 1), repeat=n)
            if sum(p) == w and all(a >= b for a, b in zip(p, p[1:]))]


partitions = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.integers(0, 5), min_size=n, max_size=n).map(lambda p: tuple(sorted(p, reverse=True)))
)


def test_weight_examples():
    assert weight((0, 0, 0)) == 0
    assert weight((2, 1, 0)) == 3
    assert weight((6, 6, 2, 0)) == 14


def test_dominance_examples():
    assert dominance_leq((1, 1), (2, 0))
    assert not dominance_leq((2, 0), (1, 1))
    assert not dominance_leq((1, 0), (2, 0))


def test_lower_set_examples():
    assert lower_set((1, 0)) == [(1, 0)]
    assert lower_set((2, 0)) == [(2, 0), (1, 1)]
    assert lower_set((2, 1, 0)) == [(2, 1, 0), (1, 1, 1)]


def test_flat_and_natural_examples():
    assert flat_and_natural((3, 2, 1)) == ((2, 1, 0), (2, 1))
    assert flat_and_natural((2, 2)) == ((0, 0), (0,))
    assert flat_and_natural((5, 0)) == ((5, 0), (5,))


def test_enumerate_examples():
    assert enumerate_partitions(2, 2) == [(2, 0), (1, 1)]
    assert enumerate_partitions(3, 0) == [(0, 0, 0)]
    assert enumerate_partitions(2, 3) == [(3, 0), (2, 1)]


def test_invalid_partitions():
    with pytest.raises(PartitionError):
        as_partition((1, 2))
    with pytest.raises(PartitionError):
        as_partition((1, -1))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("w", range(7))
def test_enumerate_matches_brute_force(n, w):
    assert sorted(enumerate_partitions(n, w)) == sorted(brute_partitions(n, w))


@given(partitions)
def test_lower_set_matches_brute_force(lam):
    n, w = len(lam), sum(lam)
    brute = {mu for mu in brute_partitions(n, w)
             if all(a <= b for a, b in zip(accumulate(mu), accumulate(lam)))}
    ls = lower_set(lam)
    assert ls[0] == lam
    assert set(ls) == brute
    # every mu comes after everything in the list that dominates it
    for i, mu in enumerate(ls):
        for nu in ls[i + 1:]:
            assert not (nu != mu and dominance_leq(mu, nu))


@given(partitions, partitions)
def test_dominance_is_antisymmetric(a, b):
    if len(a) == len(b) and dominance_leq(a, b) and dominance_leq(b, a):
        assert a == b


@given(partitions)
def test_flat_natural_shift(lam):
    if len(lam) < 2:
        return
    flat, nat = flat_and_natural(lam)
    assert flat[-1] == 0 and flat[:-1] == nat
    assert all(f + lam[-1] == p for f, p in zip(flat, lam))
