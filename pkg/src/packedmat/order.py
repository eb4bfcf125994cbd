"""The column-swap partial order on packed matrices and the E / H bases.

A cover step exchanges adjacent columns ``i`` and ``i + 1`` when the zeros
closing column ``i`` and the zeros opening column ``i + 1`` together span at
least ``n`` rows.  Such a swap strictly decreases the row-major lexicographic
key (the topmost nonzero entry of the pair moves one column right), which
bounds every search below and gives the triangularity used for basis changes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable

from .lincomb import Element
from .matrix import PackedMatrix, over, under


@dataclass(frozen=True)
class CoverStep:
    source: PackedMatrix
    index: int  # 1-based position i of the swapped pair (i, i + 1)
    target: PackedMatrix


def _trailing_zeros(col: tuple[int, ...]) -> int:
    s = 0
    for x in reversed(col):
        if x:
            break
        s += 1
    return s


def _leading_zeros(col: tuple[int, ...]) -> int:
    p = 0
    for x in col:
        if x:
            break
        p += 1
    return p


def _swap(m: PackedMatrix, i: int) -> PackedMatrix:
    rows = tuple(r[:i] + (r[i + 1], r[i]) + r[i + 2:] for r in m.rows)
    return PackedMatrix._trusted(rows, m.k)


def can_swap(m: PackedMatrix, i: int) -> bool:
    """Whether 0-based columns ``i`` and ``i + 1`` may be exchanged upwards."""
    cols = m.columns
    return _trailing_zeros(cols[i]) + _leading_zeros(cols[i + 1]) >= m.n


def cover_steps(m: PackedMatrix) -> list[CoverStep]:
    return [CoverStep(m, i + 1, _swap(m, i)) for i in range(m.n - 1) if can_swap(m, i)]


def covers(m: PackedMatrix) -> list[PackedMatrix]:
    """Matrices reachable from ``m`` by a single cover step."""
    return [s.target for s in cover_steps(m)]


def lower_covers(m: PackedMatrix) -> list[PackedMatrix]:
    """Matrices from which ``m`` is reachable by a single cover step."""
    out = []
    for i in range(m.n - 1):
        prev = _swap(m, i)
        if can_swap(prev, i):
            out.append(prev)
    return out


def _closure(start: PackedMatrix, step: Callable[[PackedMatrix], list[PackedMatrix]],
             keep: Callable[[PackedMatrix], bool] = lambda m: True) -> set[PackedMatrix]:
    seen = {start}
    queue = deque([start])
    while queue:
        for nxt in step(queue.popleft()):
            if nxt not in seen and keep(nxt):
                seen.add(nxt)
                queue.append(nxt)
    return seen


def _same_component(m1: PackedMatrix, m2: PackedMatrix) -> None:
    if m1.n != m2.n or m1.k != m2.k:
        raise ValueError("order comparison needs matrices of equal size and alphabet")


def leq_M(m1: PackedMatrix, m2: PackedMatrix) -> bool:
    """``m1 <= m2`` in the column-swap order."""
    _same_component(m1, m2)
    if m1 == m2:
        return True
    if sorted(m1.columns) != sorted(m2.columns) or not m2.rows < m1.rows:
        return False
    target = m2.rows
    return m2 in _closure(m1, covers, lambda x: x.rows >= target)


def upper_set(m: PackedMatrix) -> set[PackedMatrix]:
    return _closure(m, covers)


def lower_set(m: PackedMatrix) -> set[PackedMatrix]:
    return _closure(m, lower_covers)


def interval(m1: PackedMatrix, m2: PackedMatrix) -> set[PackedMatrix]:
    """All ``x`` with ``m1 <= x <= m2``; empty when ``m1`` is not below ``m2``."""
    _same_component(m1, m2)
    lo, hi = m1.rows, m2.rows
    up = _closure(m1, covers, lambda x: x.rows >= hi)
    if m2 not in up:
        return set()
    down = _closure(m2, lower_covers, lambda x: x.rows <= lo)
    return up & down


def E_expand(m: PackedMatrix) -> Element:
    """``E_m`` on the fundamental basis: the sum over the upper set of ``m``."""
    return Element(((x, 1) for x in upper_set(m)), "F", m.k)


def H_expand(m: PackedMatrix) -> Element:
    """``H_m`` on the fundamental basis: the sum over the lower set of ``m``."""
    return Element(((x, 1) for x in lower_set(m)), "F", m.k)


def product_E(m1: PackedMatrix, m2: PackedMatrix) -> PackedMatrix:
    """Index of ``E_m1 . E_m2``."""
    return over(m1, m2)


def product_H(m1: PackedMatrix, m2: PackedMatrix) -> PackedMatrix:
    """Index of ``H_m1 . H_m2``."""
    return under(m1, m2)


def hasse_edges(elements: Iterable[PackedMatrix]) -> list[tuple[PackedMatrix, PackedMatrix]]:
    """Cover relations among ``elements``, each as a ``(source, target)`` pair."""
    pool = set(elements)
    return [(m, c) for m in pool for c in covers(m) if c in pool]


def is_permutation_matrix(m: PackedMatrix) -> bool:
    return m.weight == m.n and all(x in (0, 1) for r in m.rows for x in r)


def permutation_matrix(sigma: Iterable[int], k: int = 1) -> PackedMatrix:
    """The matrix with a 1 in row ``sigma_j`` of column ``j`` (1-based values)."""
    sigma = tuple(sigma)
    n = len(sigma)
    rows = tuple(tuple(1 if sigma[j] == i + 1 else 0 for j in range(n)) for i in range(n))
    return PackedMatrix._trusted(rows, k)
