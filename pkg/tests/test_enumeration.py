from math import factorial

import pytest
from hypothesis import given, strategies as st

from packedmat.enumeration import (
    count_packed, count_packed_by_size, count_packed_by_weight, enumerate_packed,
    enumerate_packed_by_weight,
)
from packedmat.matrix import is_packed


@pytest.mark.parametrize("k,n", [(1, 0), (1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 2)])
def test_enumeration_matches_formula(k, n):
    ms = list(enumerate_packed(k, n))
    assert len(ms) == len(set(ms)) == count_packed_by_size(k, n)
    assert all(is_packed(m) for m in ms)


def test_enumeration_is_sorted_and_deterministic():
    a = [m.rows for m in enumerate_packed(1, 3)]
    assert a == sorted(a) and a == [m.rows for m in enumerate_packed(1, 3)]


@pytest.mark.parametrize("k,w", [(1, 3), (1, 4), (2, 3)])
def test_weight_strata(k, w):
    ms = list(enumerate_packed_by_weight(k, w))
    assert len(ms) == count_packed_by_weight(k, w)
    assert all(m.weight == w for m in ms)


@given(st.integers(1, 3), st.integers(0, 5))
def test_rows_sum_to_size_count(k, n):
    assert sum(count_packed(k, n, w) for w in range(n * n + 1)) == count_packed_by_size(k, n)


@given(st.integers(1, 6))
def test_permutations_are_the_minimal_weight(n):
    assert count_packed(1, n, n) == factorial(n)
    assert count_packed(1, n, n - 1) == 0
    assert count_packed(1, n, n * n) == 1
