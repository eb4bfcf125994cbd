"""Truncated integer power series for Hilbert series manipulations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

DEFAULT_ORDER = 6


@dataclass(frozen=True)
class DimSeries:
    """Coefficients ``c_0 .. c_N`` of a power series, truncated after degree ``N``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def _n(self, other: DimSeries) -> int:
        return min(len(self.coeffs), len(other.coeffs))

    def __add__(self, other: DimSeries) -> DimSeries:
        n = self._n(other)
        return DimSeries(tuple(self[i] + other[i] for i in range(n)))

    def __sub__(self, other: DimSeries) -> DimSeries:
        n = self._n(other)
        return DimSeries(tuple(self[i] - other[i] for i in range(n)))

    def __mul__(self, other: DimSeries) -> DimSeries:
        n = self._n(other)
        return DimSeries(tuple(sum(self[i] * other[d - i] for i in range(d + 1)) for d in range(n)))

    def inverse(self) -> DimSeries:
        """Multiplicative inverse; the constant term must be 1."""
        if self[0] != 1:
            raise ValueError("series inverse needs constant term 1")
        out = [1]
        for d in range(1, len(self.coeffs)):
            out.append(-sum(self[i] * out[d - i] for i in range(1, d + 1)))
        return DimSeries(tuple(out))

    @classmethod
    def one(cls, order: int) -> DimSeries:
        return cls((1,) + (0,) * order)


def _as_series(h: DimSeries | Sequence[int]) -> DimSeries:
    return h if isinstance(h, DimSeries) else DimSeries(tuple(h))


def series_generators(h: DimSeries | Sequence[int]) -> DimSeries:
    """Free generators of a free algebra with Hilbert series ``h``: ``1 - 1/h``."""
    h = _as_series(h)
    return DimSeries.one(h.order) - h.inverse()


def series_totally_primitive(h: DimSeries | Sequence[int]) -> DimSeries:
    """Totally primitive elements of a dendriform bialgebra: ``(h - 1) / h^2``."""
    h = _as_series(h)
    inv = h.inverse()
    return (h - DimSeries.one(h.order)) * inv * inv
