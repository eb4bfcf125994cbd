from itertools import product as cartesian

import pytest
from hypothesis import given, settings

import displayed as D
from conftest import P, packed
from packedmat.enumeration import enumerate_packed
from packedmat.hopf import product_F
from packedmat.matrix import over, under
from packedmat.order import (
    E_expand, H_expand, covers, hasse_edges, interval, is_permutation_matrix, leq_M,
    lower_covers, permutation_matrix, product_E, product_H,
)


def test_displayed_interval_and_hasse_diagram():
    nodes = {i: P(m) for i, m in D.INTERVAL_NODES.items()}
    got = interval(nodes[1], nodes[8])
    assert got == set(nodes.values())
    index = {m: i for i, m in nodes.items()}
    edges = {(index[a], index[b]) for a, b in hasse_edges(got)}
    assert edges == set(D.INTERVAL_EDGES)


def test_E_and_H_examples():
    assert set(E_expand(P(D.E_INPUT)).terms) == {P(m) for m in D.E_TERMS}
    assert set(H_expand(P(D.H_INPUT)).terms) == {P(m) for m in D.H_TERMS}


@pytest.mark.parametrize("n1,n2", [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1)])
def test_product_support_is_an_interval(n1, n2):
    for a, b in cartesian(enumerate_packed(1, n1), enumerate_packed(1, n2)):
        assert set(product_F(a, b).terms) == interval(over(a, b), under(a, b))


@given(packed(1, 3, min_n=1))
def test_covers_and_lower_covers_are_inverse(m):
    for c in covers(m):
        assert m in lower_covers(c)
        assert c.rows < m.rows  # every step strictly decreases the row-major key


@settings(max_examples=40)
@given(packed(1, 3), packed(1, 3))
def test_leq_is_antisymmetric(a, b):
    if a.n == b.n and leq_M(a, b) and leq_M(b, a):
        assert a == b


def test_multiplicative_bases():
    a, b = P([[1, 1], [0, 1]]), P([[1]])
    assert product_E(a, b) == over(a, b) and product_H(a, b) == under(a, b)


def test_order_needs_equal_sizes():
    with pytest.raises(ValueError):
        leq_M(P([[1]]), P([[1, 0], [0, 1]]))


def test_permutation_matrices():
    m = permutation_matrix([2, 3, 1])
    assert is_permutation_matrix(m) and m.rows == ((0, 0, 1), (1, 0, 0), (0, 1, 0))
    assert not is_permutation_matrix(P([[1, 1], [1, 0]]))
