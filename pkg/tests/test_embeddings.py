from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

import displayed as D
from conftest import P
from packedmat.embeddings import (
    PREDICATES, ColoredPermutation, UniformBlockPermutation, alpha, beta, colored_permutations,
    colored_shuffle_correspondence, enumerate_ubp, image_closure_check, injective,
    is_ubp_support, shifted_shuffle, transpose_inverse_holds, ubp_counts, ubp_from_support,
    weak_order_check,
)
from packedmat.order import is_permutation_matrix


def test_alpha_examples():
    assert alpha(ColoredPermutation.parse("12:11")) == P([[1, 0], [0, 1]])
    assert alpha(ColoredPermutation.parse("21:12", k=2)) == P([[0, 2], [1, 0]], k=2)
    p = ColoredPermutation.parse("312:121")
    assert str(p) == "312:121" and p.k == 2


@pytest.mark.parametrize("n", range(5))
def test_alpha_image_is_permutation_matrices(n):
    image = [alpha(ColoredPermutation(s, (1,) * n)) for s in permutations(range(1, n + 1))]
    assert len(set(image)) == factorial(n) and all(is_permutation_matrix(m) for m in image)


def test_colored_permutation_validation():
    with pytest.raises(ValueError):
        ColoredPermutation((1, 1), (1, 1))
    with pytest.raises(ValueError):
        ColoredPermutation((1,), (3,), k=2)


def test_beta_example_and_text():
    u = UniformBlockPermutation.parse(D.UBP_TEXT)
    assert beta(u) == P(D.UBP_MATRIX)
    assert UniformBlockPermutation.parse(str(u)) == u
    assert ubp_from_support(beta(u)) == u


def test_identity_ubp():
    u = UniformBlockPermutation.parse("{1}->{1}; {2}->{2}; {3}->{3}")
    assert beta(u) == P([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def test_ubp_validation():
    with pytest.raises(ValueError):
        UniformBlockPermutation.parse("{1,2}->{1}; {3}->{2,3}")
    with pytest.raises(ValueError):
        UniformBlockPermutation.parse("garbage")


def test_ubp_recognizer():
    assert not is_ubp_support(P([[1, 1], [1, 0]]))
    assert is_ubp_support(P([[1, 1], [1, 1]]))
    assert ubp_counts(3) == [1, 1, 3, 16]


def test_ubp_transpose_is_inverse():
    us = [u for n in range(4) for u in enumerate_ubp(n)]
    assert transpose_inverse_holds(us)
    assert injective(beta(u) for u in us)


@pytest.mark.parametrize("n", range(5))
def test_weak_order(n):
    ok, edges = weak_order_check(n)
    # each permutation has one cover per ascent: n! (n - 1) / 2 edges in total
    assert ok and edges == factorial(n) * max(n - 1, 0) // 2


def test_image_closure():
    assert image_closure_check(PREDICATES["ubp"], 3).passed
    assert image_closure_check(PREDICATES["permutation"], 4).passed
    assert image_closure_check(PREDICATES["permutation"], 3, k=2).passed
    assert not image_closure_check(PREDICATES["symmetric"], 3).passed


def test_one_nonzero_per_column_is_closed():
    # column shuffles and column cuts never change how many nonzeros a column has
    assert image_closure_check(PREDICATES["one-per-column"], 3).passed


perms = st.integers(0, 2).flatmap(lambda n: st.sampled_from(list(colored_permutations(n, 2))))


@given(perms, perms)
def test_shuffle_correspondence(p1, p2):
    assert colored_shuffle_correspondence(p1, p2)
    assert len(shifted_shuffle(p1, p2)) == factorial(p1.n + p2.n) // (factorial(p1.n) * factorial(p2.n))


def test_example_shuffle():
    a, b = ColoredPermutation.parse("12:11"), ColoredPermutation.parse("1:1")
    assert sorted(str(p) for p in shifted_shuffle(a, b)) == ["123:111", "132:111", "312:111"]
    assert colored_shuffle_correspondence(ColoredPermutation.parse(":"), b)
