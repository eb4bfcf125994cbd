"""Dual bases W / V, primitive elements, and Hilbert series of the two gradings."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .enumeration import count_packed_by_size, count_packed_by_weight, enumerate_packed
from .hopf import coproduct_F, dual_product_F, multiply
from .lincomb import Element, triangular_invert
from .matrix import PackedMatrix, is_connected, over_factors
from .series import DEFAULT_ORDER, DimSeries


def W_expand(m: PackedMatrix) -> Element:
    """``W^m`` on the dual fundamental basis: product of its connected over-factors."""
    factors = over_factors(m)
    if not factors:
        return Element({m: 1}, "F*", m.k)
    out = Element({factors[0]: 1}, "F*", m.k)
    for f in factors[1:]:
        out = multiply(out, Element({f: 1}, "F*", m.k), dual_product_F)
    return out


def transpose_order(m: PackedMatrix):
    """Order key making ``W`` unitriangular: the canonical key of the transpose."""
    return m.transpose().sort_key()


def stratum(k: int, n: int, weight: int) -> list[PackedMatrix]:
    return list(enumerate_packed(k, n, weight))


def V_basis(component: Sequence[PackedMatrix]) -> tuple[list[PackedMatrix], list[list[Fraction]]]:
    """Change of basis from ``V`` to ``F`` on one ``(k, n, weight)`` stratum.

    Returns ``(keys, C)`` where ``V_{keys[i]} = sum_j C[i][j] F_{keys[j]}``.
    ``V`` is the basis adjoint to ``W``, so ``C`` is the transposed inverse
    of the ``W``-to-``F*`` matrix.
    """
    keys, inv = triangular_invert(W_expand, component, transpose_order)
    size = len(keys)
    return keys, [[inv[j][i] for j in range(size)] for i in range(size)]


@lru_cache(maxsize=64)
def _v_stratum(k: int, n: int, weight: int) -> dict[PackedMatrix, Element]:
    keys, c = V_basis(stratum(k, n, weight))
    return {m: Element(zip(keys, row), "F", k) for m, row in zip(keys, c)}


def V_expand(m: PackedMatrix) -> Element:
    """``V_m`` on the fundamental basis, computed from the whole stratum of ``m``."""
    return _v_stratum(m.k, m.n, m.weight)[m]


def reduced_coproduct(e: Element) -> Element:
    """``Delta(e) - 1 (x) e - e (x) 1`` for an element over ``F`` with no constant term."""
    acc: dict = {}
    for m, c in e.terms.items():
        for (a, b), c2 in coproduct_F(m).terms.items():
            if a.n and b.n:
                acc[(a, b)] = acc.get((a, b), 0) + c * c2
    return Element(acc, "F⊗F", e.k)


def is_primitive(e: Element) -> bool:
    return reduced_coproduct(e).is_zero()


def connected_count(k: int, n: int) -> int:
    if n == 0:
        return 0
    return sum(1 for m in enumerate_packed(k, n) if is_connected(m))


def hilbert_series(k: int, grading: str, N: int = DEFAULT_ORDER) -> DimSeries:
    """Dimensions of the homogeneous components up to degree ``N``."""
    if grading == "size":
        return DimSeries(tuple(count_packed_by_size(k, n) for n in range(N + 1)))
    if grading == "weight":
        return DimSeries(tuple(count_packed_by_weight(k, w) for w in range(N + 1)))
    raise ValueError(f"grading must be 'size' or 'weight', got {grading!r}")
