"""Partitions, compositions, orderings."""

from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shufflecalc.partitions import (
    compositions_of,
    conjugate,
    dominates,
    parse_composition,
    parse_partition,
    partial_sums,
    partition_order_key,
    partitions_of,
    sort_to_partition,
    stat_n,
)

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_partitions_of_counts():
    for n, expected in enumerate(PARTITION_COUNTS):
        parts = partitions_of(n)
        assert len(parts) == expected
        assert len(set(parts)) == expected


def test_partitions_of_examples():
    assert partitions_of(0) == ((),)
    assert set(partitions_of(3)) == {(3,), (2, 1), (1, 1, 1)}
    assert len(partitions_of(5)) == 7


def test_compositions_of():
    assert compositions_of(0) == ((),)
    assert compositions_of(1) == ((1,),)
    assert len(compositions_of(3)) == 4
    assert len(compositions_of(8)) == 128
    assert len(set(compositions_of(8))) == 128


def test_conjugate_and_stat():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert stat_n((2, 1)) == 1
    assert stat_n((1, 1, 1)) == 3


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 8))
def test_conjugate_involution_and_stat_consistency(n):
    for mu in partitions_of(n):
        assert conjugate(conjugate(mu)) == mu
        # n(mu') recomputes as sum of binomial(mu_i, 2)
        assert stat_n(conjugate(mu)) == sum(comb(p, 2) for p in mu)


def test_order_refines_dominance():
    for n in range(1, 9):
        parts = partitions_of(n)
        for i, lam in enumerate(parts):
            for j, mu in enumerate(parts):
                if dominates(lam, mu) and lam != mu:
                    assert i < j
        assert parts == tuple(sorted(parts, key=partition_order_key))


def test_parsing():
    assert parse_partition("5,1,1,1") == (5, 1, 1, 1)
    assert parse_partition("") == ()
    assert parse_composition("2,4,2") == (2, 4, 2)
    with pytest.raises(ValueError):
        parse_partition("1,2")
    with pytest.raises(ValueError):
        parse_composition("0,1")


def test_partial_sums_and_sort():
    assert partial_sums((2, 4, 2)) == (2, 6, 8)
    assert sort_to_partition((1, 3, 2)) == (3, 2, 1)
