import pytest
from hypothesis import given

from conftest import P, packed
from packedmat.matrix import (
    ColumnWord, Matrix, PackedMatrix, column_cuts, compress, format_matrix, from_column_word,
    is_anti_connected, is_connected, over, over_factors, parse_matrix, parse_stream, format_stream,
    row_cuts, to_column_word, transpose, under, under_factors, column_compare,
)


def test_rejects_null_lines_and_non_square():
    with pytest.raises(ValueError):
        PackedMatrix([[1, 0], [0, 0]])
    with pytest.raises(ValueError):
        PackedMatrix([[1, 1]])
    with pytest.raises(ValueError):
        PackedMatrix([[2]], k=1)


def test_empty_round_trip():
    e = PackedMatrix.empty()
    assert e.n == 0 and format_matrix(e) == "empty"
    assert parse_matrix("empty") == e


@given(packed(2, 3))
def test_text_round_trip(m):
    assert parse_matrix(format_matrix(m), m.k) == m


def test_stream_round_trip():
    ms = [P([[1]]), P([[0, 1], [1, 1]])]
    assert parse_stream(format_stream(ms)) == ms


def test_compress_deletes_null_lines():
    m = Matrix([[0, 0, 0], [1, 0, 1], [0, 0, 1]])
    assert compress(m) == P([[1, 1], [0, 1]])
    assert not isinstance(compress(Matrix([[1, 1]])), PackedMatrix)


def test_over_under_blocks():
    a, b = P([[1]]), P([[0, 1], [1, 0]])
    assert over(a, b).rows == ((1, 0, 0), (0, 0, 1), (0, 1, 0))
    assert under(a, b).rows == ((0, 0, 1), (0, 1, 0), (1, 0, 0))


def test_column_cut_needs_both_sides_square():
    # Left part of width 1 uses one row but the right part uses all three rows.
    assert column_cuts(P([[1, 1, 0], [0, 1, 0], [0, 0, 1]])) == [0, 2, 3]


@given(packed(1, 4))
def test_row_cuts_are_transposed_column_cuts(m):
    assert row_cuts(m) == column_cuts(transpose(m))
    assert column_cuts(m)[0] == 0 and column_cuts(m)[-1] == m.n


@given(packed(1, 4, min_n=1))
def test_factorizations_rebuild(m):
    fs = over_factors(m)
    acc = fs[0]
    for f in fs[1:]:
        acc = over(acc, f)
    assert acc == m and all(is_connected(f) for f in fs)
    gs = under_factors(m)
    acc = gs[0]
    for g in gs[1:]:
        acc = under(acc, g)
    assert acc == m and all(is_anti_connected(g) for g in gs)


def test_connectivity_undefined_on_empty():
    with pytest.raises(ValueError):
        is_connected(PackedMatrix.empty())


@given(packed(2, 3))
def test_column_word_round_trip(m):
    assert from_column_word(to_column_word(m), m.k) == m


def test_column_order_reads_bottom_up():
    assert column_compare((1, 0), (0, 1)) < 0
    assert column_compare((0, 1), (0, 1)) == 0


def test_column_word_restrict_and_compress():
    w = ColumnWord([(1, 0), (0, 0), (0, 1)])
    assert w.restrict((1, 0), (1, 0)).letters == ((1, 0),)
    assert w.compress().letters == ((1, 0), (0, 1))
