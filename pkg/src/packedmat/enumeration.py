"""Counting and exhaustive enumeration of packed matrices."""

from __future__ import annotations

from itertools import product
from math import comb, isqrt
from typing import Iterator

from .matrix import PackedMatrix


def count_packed(k: int, n: int, weight: int) -> int:
    """Number of ``k``-packed matrices of size ``n`` with ``weight`` nonzero entries.

    Inclusion-exclusion over the sets of rows and columns forced to be null.
    """
    total = 0
    for i in range(n + 1):
        for j in range(n + 1):
            term = comb(n, i) * comb(n, j) * comb(i * j, weight)
            total += -term if (i + j) % 2 else term
    return total * k ** weight


def count_packed_by_size(k: int, n: int) -> int:
    total = 0
    for i in range(n + 1):
        for j in range(n + 1):
            term = comb(n, i) * comb(n, j) * (k + 1) ** (i * j)
            total += -term if (i + j) % 2 else term
    return total


def _sizes_for_weight(weight: int) -> range:
    if weight == 0:
        return range(0, 1)
    lo = isqrt(weight - 1) + 1  # ceil(sqrt(weight))
    return range(lo, weight + 1)


def count_packed_by_weight(k: int, weight: int) -> int:
    return sum(count_packed(k, n, weight) for n in _sizes_for_weight(weight))


def _rows_by_weight(k: int, n: int) -> dict[int, list[tuple[int, ...]]]:
    table: dict[int, list[tuple[int, ...]]] = {}
    for row in product(range(k + 1), repeat=n):
        w = sum(1 for x in row if x)
        if w:
            table.setdefault(w, []).append(row)
    return table


def _enumerate(k: int, n: int, weight: int | None) -> Iterator[PackedMatrix]:
    if n == 0:
        if weight in (None, 0):
            yield PackedMatrix.empty(k)
        return
    by_weight = _rows_by_weight(k, n)
    # Rows in lexicographic order, tagged with their weight.
    rows = sorted((r, w) for w, rs in by_weight.items() for r in rs)
    full = (1 << n) - 1

    def masks(row):
        m = 0
        for j, x in enumerate(row):
            if x:
                m |= 1 << j
        return m

    tagged = [(r, w, masks(r)) for r, w in rows]
    prefix: list[tuple[int, ...]] = []

    def rec(i: int, covered: int, budget: int | None):
        remaining = n - i
        if remaining == 0:
            if covered == full and budget in (None, 0):
                yield PackedMatrix._trusted(tuple(prefix), k)
            return
        # each remaining row covers at most n columns
        missing = n - bin(covered).count("1")
        if missing > remaining * n:
            return
        for r, w, mask in tagged:
            if budget is not None:
                rest = budget - w
                if rest < remaining - 1 or rest > (remaining - 1) * n:
                    continue
            else:
                rest = None
            if remaining == 1 and (covered | mask) != full:
                continue
            prefix.append(r)
            yield from rec(i + 1, covered | mask, rest)
            prefix.pop()

    yield from rec(0, 0, weight)


def enumerate_packed(k: int, n: int, weight: int | None = None) -> Iterator[PackedMatrix]:
    """Yield every ``k``-packed matrix of size ``n`` exactly once.

    Matrices come in lexicographic order of their row-major entry strings.
    Row-by-row depth-first search; the last row must cover every column still
    null, and an optional weight budget prunes rows that cannot complete.
    """
    return _enumerate(k, n, weight)


def enumerate_packed_by_weight(k: int, weight: int) -> Iterator[PackedMatrix]:
    """Yield every ``k``-packed matrix with ``weight`` nonzero entries, by size then lexicographically."""
    for n in _sizes_for_weight(weight):
        yield from _enumerate(k, n, weight)
