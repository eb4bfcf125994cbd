"""Packed matrices: storage, structural predicates and decompositions.

A ``k``-packed matrix is a square matrix over ``{0, ..., k}`` with no null
row and no null column.  Matrices are immutable; every operation returns a
fresh object.  Entries are stored row-major as a tuple of row tuples.
"""

from __future__ import annotations

from functools import cmp_to_key
from typing import Iterable, Iterator, Sequence

Rows = tuple[tuple[int, ...], ...]


class Matrix:
    """Rectangular matrix over ``{0, ..., k}``, possibly with null lines.

    Used for the uncompressed factors of column and row decompositions.
    """

    __slots__ = ("rows", "k", "nrows", "ncols", "_hash")

    def __init__(self, rows: Iterable[Iterable[int]], k: int = 1, ncols: int | None = None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if k < 1:
            raise ValueError(f"alphabet bound k must be positive, got {k}")
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != width:
                raise ValueError("ncols disagrees with row width")
        else:
            width = ncols or 0
        for r in rows:
            for x in r:
                if x < 0 or x > k:
                    raise ValueError(f"entry {x} outside alphabet {{0..{k}}}")
        self._set(rows, k, len(rows), width)

    def _set(self, rows: Rows, k: int, nrows: int, ncols: int) -> None:
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _trusted(cls, rows: Rows, k: int, ncols: int | None = None):
        obj = cls.__new__(cls)
        obj._set(rows, k, len(rows), len(rows[0]) if rows else (ncols or 0))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("matrices are immutable")

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], k: int = 1, nrows: int | None = None):
        if not columns:
            return cls._trusted(tuple(() for _ in range(nrows or 0)), k, 0)
        return cls._trusted(tuple(zip(*columns)), k)

    @property
    def columns(self) -> Rows:
        if not self.rows:
            return tuple(() for _ in range(self.ncols))
        return tuple(zip(*self.rows))

    @property
    def weight(self) -> int:
        """Number of nonzero entries."""
        return sum(1 for r in self.rows for x in r if x)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.k == other.k and self.nrows == other.nrows
                and self.ncols == other.ncols and self.rows == other.rows)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.k, self.nrows, self.ncols, self.rows))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        name = type(self).__name__
        return f"{name}({[list(r) for r in self.rows]!r}, k={self.k})"

    def __str__(self):
        return format_matrix(self)

    def sort_key(self):
        return (self.nrows, self.weight, self.rows)

    def __lt__(self, other: Matrix):
        return self.sort_key() < other.sort_key()


class PackedMatrix(Matrix):
    """Square ``k``-packed matrix; the index set of every basis in this package."""

    __slots__ = ("_weight",)

    def __init__(self, rows: Iterable[Iterable[int]], k: int = 1):
        super().__init__(rows, k)
        if self.nrows != self.ncols:
            raise ValueError(f"packed matrices are square, got {self.nrows}x{self.ncols}")
        if not _no_null_lines(self.rows):
            raise ValueError("packed matrices have no null row or column")
        object.__setattr__(self, "_weight", None)

    def _set(self, rows, k, nrows, ncols):
        super()._set(rows, k, nrows, ncols)
        object.__setattr__(self, "_weight", None)

    @classmethod
    def empty(cls, k: int = 1) -> PackedMatrix:
        return cls._trusted((), k)

    @classmethod
    def identity(cls, n: int, k: int = 1) -> PackedMatrix:
        return cls._trusted(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), k)

    @property
    def n(self) -> int:
        return self.nrows

    @property
    def weight(self) -> int:
        w = self._weight
        if w is None:
            w = sum(1 for r in self.rows for x in r if x)
            object.__setattr__(self, "_weight", w)
        return w

    def transpose(self) -> PackedMatrix:
        return transpose(self)


def _no_null_lines(rows: Rows) -> bool:
    if any(not any(r) for r in rows):
        return False
    return all(any(c) for c in zip(*rows)) if rows else True


def _check_same_k(a: Matrix, b: Matrix) -> None:
    if a.k != b.k:
        raise ValueError(f"alphabet mismatch: k={a.k} vs k={b.k}")


# -- predicates and elementary operations -------------------------------------

def is_packed(m: Matrix, k: int | None = None) -> bool:
    """True iff ``m`` is square, has no null line and entries at most ``k``."""
    bound = m.k if k is None else k
    if m.nrows != m.ncols:
        return False
    if any(x > bound for r in m.rows for x in r):
        return False
    return _no_null_lines(m.rows)


def as_packed(m: Matrix) -> PackedMatrix:
    if isinstance(m, PackedMatrix):
        return m
    if not is_packed(m):
        raise ValueError("matrix is not packed")
    return PackedMatrix._trusted(m.rows, m.k)


def compress(m: Matrix) -> Matrix:
    """Delete every null row and null column.

    Returns a :class:`PackedMatrix` when the result is square (it then has no
    null line by construction), and a plain :class:`Matrix` otherwise.
    """
    keep_rows = [r for r in m.rows if any(r)]
    if keep_rows:
        keep_cols = [j for j in range(m.ncols) if any(r[j] for r in keep_rows)]
        rows = tuple(tuple(r[j] for j in keep_cols) for r in keep_rows)
    else:
        rows = ()
    if len(rows) == (len(rows[0]) if rows else 0):
        return PackedMatrix._trusted(rows, m.k)
    return Matrix._trusted(rows, m.k)


def over(m1: PackedMatrix, m2: PackedMatrix) -> PackedMatrix:
    """Block-diagonal concatenation: ``m1`` top-left, ``m2`` bottom-right."""
    _check_same_k(m1, m2)
    n1, n2 = m1.n, m2.n
    rows = tuple(r + (0,) * n2 for r in m1.rows) + tuple((0,) * n1 + r for r in m2.rows)
    return PackedMatrix._trusted(rows, m1.k)


def under(m1: PackedMatrix, m2: PackedMatrix) -> PackedMatrix:
    """Block-antidiagonal concatenation: ``m1`` top-right, ``m2`` bottom-left."""
    _check_same_k(m1, m2)
    n1, n2 = m1.n, m2.n
    rows = tuple((0,) * n2 + r for r in m1.rows) + tuple(r + (0,) * n1 for r in m2.rows)
    return PackedMatrix._trusted(rows, m1.k)


def transpose(m: Matrix) -> Matrix:
    if isinstance(m, PackedMatrix):
        return PackedMatrix._trusted(tuple(zip(*m.rows)), m.k)
    return Matrix._trusted(tuple(zip(*m.rows)) if m.rows else (), m.k, 0)


def reverse_rows(m: PackedMatrix) -> PackedMatrix:
    return PackedMatrix._trusted(m.rows[::-1], m.k)


def reverse_columns(m: PackedMatrix) -> PackedMatrix:
    return PackedMatrix._trusted(tuple(r[::-1] for r in m.rows), m.k)


# -- decompositions -----------------------------------------------------------

def column_cuts(m: PackedMatrix) -> list[int]:
    """Cut points ``j`` (0..n) where splitting after column ``j`` gives square compressions.

    Cutting after ``j`` columns is valid exactly when the first ``j`` columns
    use exactly ``j`` rows and the remaining ``n - j`` columns use exactly
    ``n - j`` rows.
    """
    n = m.n
    cols = m.columns
    supports = [{i for i, x in enumerate(c) if x} for c in cols]
    prefix: list[int] = [0]
    used: set[int] = set()
    for s in supports:
        used |= s
        prefix.append(len(used))
    suffix: list[int] = [0]
    used = set()
    for s in reversed(supports):
        used |= s
        suffix.append(len(used))
    suffix.reverse()
    return [j for j in range(n + 1) if prefix[j] == j and suffix[j] == n - j]


def row_cuts(m: PackedMatrix) -> list[int]:
    return column_cuts(transpose(m))


def _left_right(m: PackedMatrix, j: int) -> tuple[Matrix, Matrix]:
    left = Matrix._trusted(tuple(r[:j] for r in m.rows), m.k, 0) if m.rows else Matrix._trusted((), m.k, j)
    right = Matrix._trusted(tuple(r[j:] for r in m.rows), m.k, 0) if m.rows else Matrix._trusted((), m.k, m.n - j)
    return left, right


def column_splits(m: PackedMatrix) -> list[tuple[Matrix, Matrix]]:
    """All binary column decompositions, as uncompressed ``(left, right)`` pairs."""
    return [_left_right(m, j) for j in column_cuts(m)]


def row_splits(m: PackedMatrix) -> list[tuple[Matrix, Matrix]]:
    """All binary row decompositions, as uncompressed ``(top, bottom)`` pairs."""
    out = []
    for j in row_cuts(m):
        top = Matrix._trusted(m.rows[:j], m.k, m.n)
        bottom = Matrix._trusted(m.rows[j:], m.k, m.n)
        out.append((top, bottom))
    return out


def column_blocks(m: PackedMatrix, cuts: Sequence[int]) -> list[PackedMatrix]:
    """Compressed blocks of ``m`` between consecutive cut points (0 and n implied)."""
    bounds = [0, *cuts, m.n]
    return [compress(Matrix._trusted(tuple(r[a:b] for r in m.rows), m.k, 0))
            for a, b in zip(bounds, bounds[1:])]


def _over_cut(m: PackedMatrix, j: int) -> bool:
    return (all(not any(r[j:]) for r in m.rows[:j])
            and all(not any(r[:j]) for r in m.rows[j:]))


def _under_cut(m: PackedMatrix, j: int) -> bool:
    n = m.n
    return (all(not any(r[:n - j]) for r in m.rows[:j])
            and all(not any(r[n - j:]) for r in m.rows[j:]))


def is_connected(m: PackedMatrix) -> bool:
    """True iff ``m`` has no nontrivial factorization ``over(a, b)``."""
    if m.n == 0:
        raise ValueError("connectivity is defined for nonempty matrices only")
    return not any(_over_cut(m, j) for j in range(1, m.n))


def is_anti_connected(m: PackedMatrix) -> bool:
    """True iff ``m`` has no nontrivial factorization ``under(a, b)``."""
    if m.n == 0:
        raise ValueError("connectivity is defined for nonempty matrices only")
    return not any(_under_cut(m, j) for j in range(1, m.n))


def over_factors(m: PackedMatrix) -> list[PackedMatrix]:
    """The unique factorization of ``m`` into connected over-factors."""
    factors = []
    rest = m
    while rest.n:
        j = next(j for j in range(1, rest.n + 1) if j == rest.n or _over_cut(rest, j))
        factors.append(PackedMatrix._trusted(tuple(r[:j] for r in rest.rows[:j]), m.k))
        rest = PackedMatrix._trusted(tuple(r[j:] for r in rest.rows[j:]), m.k)
    return factors


def under_factors(m: PackedMatrix) -> list[PackedMatrix]:
    """The unique factorization of ``m`` into anti-connected under-factors."""
    factors = []
    rest = m
    while rest.n:
        n = rest.n
        j = next(j for j in range(1, n + 1) if j == n or _under_cut(rest, j))
        factors.append(PackedMatrix._trusted(tuple(r[n - j:] for r in rest.rows[:j]), m.k))
        rest = PackedMatrix._trusted(tuple(r[:n - j] for r in rest.rows[j:]), m.k)
    return factors


# -- text format --------------------------------------------------------------

def format_matrix(m: Matrix) -> str:
    """One line per row, single-digit entries separated by spaces; ``empty`` for 0x0."""
    if m.nrows == 0 or m.ncols == 0:
        return "empty"
    return "\n".join(" ".join(str(x) for x in r) for r in m.rows)


def parse_matrix(text: str, k: int | None = None) -> PackedMatrix:
    """Inverse of :func:`format_matrix` for packed matrices.

    If ``k`` is omitted, the largest entry (at least 1) is used.
    """
    text = text.strip()
    if text == "empty":
        return PackedMatrix.empty(k or 1)
    rows = [tuple(int(x) for x in line.split()) for line in text.splitlines() if line.strip()]
    if k is None:
        k = max([1, *(x for r in rows for x in r)])
    return PackedMatrix(rows, k)


def format_stream(matrices: Iterable[Matrix]) -> str:
    return "\n\n".join(format_matrix(m) for m in matrices)


def parse_stream(text: str, k: int | None = None) -> list[PackedMatrix]:
    blocks = [b for b in text.strip().split("\n\n") if b.strip()]
    return [parse_matrix(b, k) for b in blocks]


# -- column words -------------------------------------------------------------

Column = tuple[int, ...]


def column_key(c: Column) -> Column:
    """Sort key of a column: its bottom-to-top reading."""
    return tuple(reversed(c))


def column_compare(c1: Column, c2: Column) -> int:
    """Three-way comparison of columns by bottom-to-top lexicographic reading.

    Columns of different heights are compared lexicographically as words, a
    proper prefix being smaller.
    """
    a, b = column_key(c1), column_key(c2)
    return (a > b) - (a < b)


column_sort_key = cmp_to_key(column_compare)


class ColumnWord:
    """Word over the alphabet of height-``height`` columns."""

    __slots__ = ("height", "letters")

    def __init__(self, letters: Iterable[Sequence[int]], height: int | None = None):
        letters = tuple(tuple(c) for c in letters)
        if height is None:
            height = len(letters[0]) if letters else 0
        if any(len(c) != height for c in letters):
            raise ValueError("all letters of a column word share the same height")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "height", height)

    def __setattr__(self, name, value):
        raise AttributeError("column words are immutable")

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Column]:
        return iter(self.letters)

    def __eq__(self, other):
        return isinstance(other, ColumnWord) and (self.height, self.letters) == (other.height, other.letters)

    def __hash__(self):
        return hash((self.height, self.letters))

    def __repr__(self):
        return f"ColumnWord({list(self.letters)!r})"

    def __add__(self, other: ColumnWord) -> ColumnWord:
        if self.letters and other.letters and self.height != other.height:
            raise ValueError("height mismatch")
        return ColumnWord(self.letters + other.letters, self.height if self.letters else other.height)

    def evaluation(self) -> tuple[Column, ...]:
        """Commutative image, as the sorted tuple of letters."""
        return tuple(sorted(self.letters, key=column_key))

    def restrict(self, low: Column, high: Column) -> ColumnWord:
        """Erase the letters outside the closed interval ``[low, high]``."""
        lo, hi = column_key(low), column_key(high)
        return ColumnWord([c for c in self.letters if lo <= column_key(c) <= hi], self.height)

    def compress(self) -> ColumnWord:
        """Drop null letters and the rows that are null across the whole word."""
        live = [i for i in range(self.height) if any(c[i] for c in self.letters)]
        return ColumnWord([tuple(c[i] for i in live) for c in self.letters if any(c)], len(live))

    def to_matrix(self, k: int = 1) -> Matrix:
        return Matrix.from_columns(self.letters, k, self.height)


def to_column_word(m: Matrix) -> ColumnWord:
    return ColumnWord(m.columns, m.nrows)


def from_column_word(w: ColumnWord, k: int = 1) -> PackedMatrix:
    return as_packed(w.to_matrix(k))
