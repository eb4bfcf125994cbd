"""Alternating sign matrices inside MT(1) and their six-vertex statistics.

An ASM is stored by its signed entries.  Its support is a 1-packed matrix and
a 1-packed matrix carries at most one sign pattern, so the Hopf structure on
ASMs is simply the restriction of the fundamental-basis operations.

Vertex types come from the domain-wall orientation encoded by inclusive
partial sums: ``R(i, j)`` along row ``i`` up to column ``j`` and ``V(i, j)``
down column ``j`` up to row ``i``.  A ``+`` cell is an ``oi`` vertex, a ``-``
cell an ``io`` vertex, and a zero cell is read off the pair ``(R, V)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as cartesian
from math import comb
from typing import Iterable, Iterator, Sequence

from .hopf import coproduct_F, dual_product_F, product_F
from .matrix import PackedMatrix
from .qpoly import QPoly, q_multinomial

SYMBOLS = {1: "+", -1: "-", 0: "0"}
_PARSE = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1, "0": 0}

Z_STATS = ("se", "nw", "sw", "ne")
N_STATS = ("io", "oi")
STATS = ("ne", "sw", "se", "nw", "oi", "io")

# zero cell: (row partial sum, column partial sum) -> vertex type
_ZERO_VERTEX = {(0, 0): "ne", (1, 1): "sw", (0, 1): "se", (1, 0): "nw"}


def _line_ok(line: Sequence[int]) -> bool:
    s = 0
    for x in line:
        s += x
        if s not in (0, 1):
            return False
    return s == 1


class Asm:
    """Square matrix over ``{0, +1, -1}`` whose lines alternate ``+ - ... +``."""

    __slots__ = ("rows", "_hash")

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("an ASM is square")
        if any(x not in (-1, 0, 1) for r in rows for x in r):
            raise ValueError("ASM entries are 0, +1 or -1")
        if not all(_line_ok(r) for r in rows) or not all(_line_ok(c) for c in zip(*rows)):
            raise ValueError("lines of an ASM must alternate +, -, ..., + in sign")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", hash(rows))

    @classmethod
    def _trusted(cls, rows: tuple[tuple[int, ...], ...]) -> Asm:
        obj = cls.__new__(cls)
        object.__setattr__(obj, "rows", rows)
        object.__setattr__(obj, "_hash", hash(rows))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("ASMs are immutable")

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def support(self) -> PackedMatrix:
        """The 1-packed matrix marking the nonzero cells."""
        return PackedMatrix._trusted(tuple(tuple(int(x != 0) for x in r) for r in self.rows), 1)

    def transpose(self) -> Asm:
        return Asm._trusted(tuple(zip(*self.rows)))

    def reverse_rows(self) -> Asm:
        return Asm._trusted(self.rows[::-1])

    def reverse_columns(self) -> Asm:
        return Asm._trusted(tuple(r[::-1] for r in self.rows))

    def minus_count(self) -> int:
        return sum(1 for r in self.rows for x in r if x < 0)

    def __eq__(self, other):
        return isinstance(other, Asm) and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Asm({[list(r) for r in self.rows]!r})"

    def __str__(self):
        return format_asm(self)


def format_asm(a: Asm) -> str:
    if not a.rows:
        return "empty"
    return "\n".join(" ".join(SYMBOLS[x] for x in r) for r in a.rows)


def parse_asm(text: str) -> Asm:
    """Inverse of :func:`format_asm`; rows may also be separated by ``/``."""
    text = text.strip()
    if text in ("", "empty"):
        return Asm(())
    lines = [ln for ln in text.replace("/", "\n").splitlines() if ln.strip()]
    try:
        return Asm([_PARSE[tok] for tok in ln.replace(",", " ").split()] for ln in lines)
    except KeyError as exc:
        raise ValueError(f"bad ASM token {exc.args[0]!r}") from None


def asm_from_packed(m: PackedMatrix) -> Asm | None:
    """The unique ASM supported on ``m``, if there is one."""
    if m.k != 1:
        raise ValueError("ASM supports are 1-packed matrices")
    rows = []
    for r in m.rows:
        sign, row = 1, []
        for x in r:
            if x:
                row.append(sign)
                sign = -sign
            else:
                row.append(0)
        if sign == 1:  # even number of nonzeros: the row cannot end with +
            return None
        rows.append(tuple(row))
    if not all(_line_ok(c) for c in zip(*rows)):
        return None
    return Asm._trusted(tuple(rows))


def is_asm_support(m: PackedMatrix) -> bool:
    return m.k == 1 and asm_from_packed(m) is not None


def _row_choices(cols: list[int], j: int, prefix: int, row: list[int]) -> Iterator[tuple[int, ...]]:
    n = len(cols)
    if j == n:
        if prefix == 1:
            yield tuple(row)
        return
    row.append(0)
    yield from _row_choices(cols, j + 1, prefix, row)
    row.pop()
    if prefix == 0 and cols[j] == 0:
        row.append(1)
        yield from _row_choices(cols, j + 1, 1, row)
        row.pop()
    elif prefix == 1 and cols[j] == 1:
        row.append(-1)
        yield from _row_choices(cols, j + 1, 0, row)
        row.pop()


def enumerate_asm(n: int) -> Iterator[Asm]:
    """All ASMs of size ``n``, row by row with column partial sums kept in ``{0, 1}``."""
    if n < 0:
        raise ValueError("size must be nonnegative")

    def rec(i: int, cols: list[int], rows: list[tuple[int, ...]]) -> Iterator[Asm]:
        if i == n:
            if all(cols):
                yield Asm._trusted(tuple(rows))
            return
        remaining = n - i
        for row in _row_choices(cols, 0, 0, []):
            nxt = [c + x for c, x in zip(cols, row)]
            # columns still at 0 need a + in one of the remaining rows
            if nxt.count(0) > remaining - 1:
                continue
            rows.append(row)
            yield from rec(i + 1, nxt, rows)
            rows.pop()

    yield from rec(0, [0] * n, [])


@lru_cache(maxsize=16)
def asms(n: int) -> tuple[Asm, ...]:
    return tuple(enumerate_asm(n))


def asm_count(n: int) -> int:
    return len(asms(n))


def asm_supports(n: int) -> tuple[PackedMatrix, ...]:
    return tuple(a.support for a in asms(n))


# -- six-vertex statistics -----------------------------------------------------

@dataclass(frozen=True)
class VertexStats:
    ne: int = 0
    sw: int = 0
    se: int = 0
    nw: int = 0
    oi: int = 0
    io: int = 0

    def __getitem__(self, name: str) -> int:
        if name not in STATS:
            raise KeyError(name)
        return getattr(self, name)

    def total(self) -> int:
        return sum(getattr(self, s) for s in STATS)

    def as_dict(self) -> dict[str, int]:
        return {s: getattr(self, s) for s in STATS}


def vertex_types(a: Asm) -> list[list[str]]:
    """The vertex label of each cell."""
    n = a.n
    col = [0] * n
    out = []
    for r in a.rows:
        acc, line = 0, []
        for j, x in enumerate(r):
            acc += x
            col[j] += x
            if x == 1:
                line.append("oi")
            elif x == -1:
                line.append("io")
            else:
                line.append(_ZERO_VERTEX[acc, col[j]])
        out.append(line)
    return out


@lru_cache(maxsize=1 << 15)
def six_vertex_stats(a: Asm) -> VertexStats:
    counts = Counter(t for line in vertex_types(a) for t in line)
    return VertexStats(**counts)


def statistic(a: Asm, name: str) -> int:
    return six_vertex_stats(a)[name]


def symmetry_holds(a: Asm) -> bool:
    """The identities ``se = nw``, ``ne = sw``, ``oi = io + n`` and the ``n**2`` total."""
    s = six_vertex_stats(a)
    return s.se == s.nw and s.ne == s.sw and s.oi == s.io + a.n and s.total() == a.n ** 2


def _parse_stats(stats: str | Iterable[str]) -> tuple[str, ...]:
    if isinstance(stats, str):
        stats = [s for s in stats.replace(" ", "").split(",") if s]
    out = tuple(stats)
    bad = [s for s in out if s not in STATS]
    if bad or not out:
        raise ValueError(f"unknown statistic(s) {bad or out!r}; choose from {', '.join(STATS)}")
    return out


def statistic_classes(stats: str | Iterable[str], n: int) -> dict[tuple[int, ...], list[Asm]]:
    """ASMs of size ``n`` grouped by their tuple of the chosen statistics."""
    names = _parse_stats(stats)
    groups: dict[tuple[int, ...], list[Asm]] = {}
    for a in asms(n):
        s = six_vertex_stats(a)
        groups.setdefault(tuple(s[x] for x in names), []).append(a)
    return dict(sorted(groups.items()))


def quotient_dims(stats: str | Iterable[str], n: int) -> int:
    """Number of distinct statistic tuples among ASMs of size ``n``."""
    return len(statistic_classes(stats, n))


def stat_histogram(name: str, n: int) -> dict[int, int]:
    return {v[0]: len(g) for v, g in statistic_classes((name,), n).items()}


def io_closed_forms(n: int) -> dict[str, int]:
    """The two candidate closed forms for the ``io`` quotient dimension."""
    return {"floor(n^2/4)+1": n * n // 4 + 1, "floor((n-1)^2/4)+1": max(n - 1, 0) ** 2 // 4 + 1}


# -- Hopf structure ------------------------------------------------------------

@dataclass
class AsmReport:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str, limit: int = 20) -> None:
        if len(self.failures) < limit:
            self.failures.append(msg)

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{self.name}: {status} ({self.checks} checks)"]
        lines += ["  " + f.replace("\n", "/") for f in self.failures]
        return "\n".join(lines)


def _pairs(budget: int) -> Iterator[tuple[Asm, Asm]]:
    for n1 in range(1, budget):
        for n2 in range(1, budget - n1 + 1):
            for a1, a2 in cartesian(asms(n1), asms(n2)):
                yield a1, a2


def asm_closure_check(size_budget: int) -> AsmReport:
    """Products, coproducts and transposes of ASM supports stay ASM supports."""
    rep = AsmReport(f"asm-closure (n1+n2 <= {size_budget})")
    for a1, a2 in _pairs(size_budget):
        for m in product_F(a1.support, a2.support).support():
            rep.checks += 1
            if not is_asm_support(m):
                rep.fail(f"product {format_asm(a1)} . {format_asm(a2)} gives {m}")
    for n in range(size_budget + 1):
        for a in asms(n):
            for left, right in coproduct_F(a.support).support():
                rep.checks += 1
                if not (is_asm_support(left) and is_asm_support(right)):
                    rep.fail(f"coproduct of {format_asm(a)} gives {left} (x) {right}")
            rep.checks += 1
            if not is_asm_support(a.support.transpose()):
                rep.fail(f"transpose of {format_asm(a)}")
    return rep


def product_asm(a1: Asm, a2: Asm, dual: bool = False) -> list[Asm]:
    """Terms of ``F_a1 . F_a2`` (or of the dual product) as ASMs."""
    op = dual_product_F if dual else product_F
    out = []
    for m in op(a1.support, a2.support).support():
        a = asm_from_packed(m)
        if a is None:
            raise ValueError(f"product left the ASM subalgebra: {m}")
        out.append(a)
    return out


def stat_polynomial(terms: Iterable[Asm], name: str) -> QPoly:
    acc = QPoly()
    for a in terms:
        acc = acc + QPoly.monomial(statistic(a, name))
    return acc


def morphism_identity_check(stat: str, a1: Asm, a2: Asm, dual: bool = False) -> bool:
    """Whether the product of ``a1`` and ``a2`` is compatible with ``stat``.

    For ``io`` and ``oi`` every term carries the sum of the two values and
    there are ``C(n, n1)`` terms.  For the four zero-cell statistics the
    generating polynomial of the terms is ``q**(s1 + s2)`` times the
    q-multinomial coefficient.
    """
    if stat not in STATS:
        raise ValueError(f"unknown statistic {stat!r}")
    n1, n2 = a1.n, a2.n
    terms = product_asm(a1, a2, dual)
    s = statistic(a1, stat) + statistic(a2, stat)
    if stat in N_STATS:
        return len(terms) == comb(n1 + n2, n1) and all(statistic(t, stat) == s for t in terms)
    return stat_polynomial(terms, stat) == QPoly.monomial(s) * q_multinomial(n1 + n2, n1, n2)


def morphism_suite(max_size: int, stats: Sequence[str] = STATS,
                   duals: Sequence[bool] = (False, True)) -> AsmReport:
    """:func:`morphism_identity_check` on every ASM pair with ``n1 + n2 <= max_size``."""
    rep = AsmReport(f"asm-morphisms (n1+n2 <= {max_size})")
    for a1, a2 in _pairs(max_size):
        for stat in stats:
            for dual in duals:
                rep.checks += 1
                if not morphism_identity_check(stat, a1, a2, dual):
                    kind = "row" if dual else "column"
                    rep.fail(f"{stat} ({kind} shuffle) fails on {format_asm(a1)} . {format_asm(a2)}")
    return rep
