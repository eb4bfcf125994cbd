from hypothesis import given, strategies as st

from packedmat.series import DimSeries, series_generators, series_totally_primitive


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=7))
def test_inverse(tail):
    h = DimSeries((1, *tail))
    assert h * h.inverse() == DimSeries.one(h.order)


def test_free_algebra_round_trip():
    # the tensor algebra on two degree-1 generators has dimensions 2^n
    h = DimSeries(tuple(2 ** n for n in range(7)))
    assert series_generators(h).coeffs == (0, 2, 0, 0, 0, 0, 0)


def test_packed_matrix_series():
    h = DimSeries((1, 1, 7, 265, 41503))
    assert series_generators(h).coeffs == (0, 1, 6, 252, 40944)
    assert series_totally_primitive(h).coeffs == (0, 1, 5, 240, 40404)
