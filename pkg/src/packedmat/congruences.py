"""Congruences on column words and the Hopf subalgebras spanned by class sums.

Letters are columns, compared through their bottom-to-top reading.  Each
congruence is described by a canonical class key; two words are congruent
exactly when their keys agree.  Rewriting closures under the defining local
relations serve as independent oracles for the sylvester and plactic keys.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Hashable, Iterable, Sequence

from .enumeration import enumerate_packed, enumerate_packed_by_weight
from .hopf import coproduct_F, multiply
from .lincomb import Element
from .matrix import Column, ColumnWord, PackedMatrix, column_key, format_matrix, to_column_word

Key = Callable[[ColumnWord], Hashable]


def _letters(w: ColumnWord) -> list[Column]:
    return [column_key(c) for c in w.letters]


# -- class keys -------------------------------------------------------------------

def sylvester_key(w: ColumnWord) -> Hashable:
    """Labelled binary search tree built by inserting the letters from right to left.

    A letter equal to a node goes to its left subtree.
    """
    root = None
    for x in reversed(_letters(w)):
        if root is None:
            root = [x, None, None]
            continue
        node = root
        while True:
            side = 1 if x <= node[0] else 2
            if node[side] is None:
                node[side] = [x, None, None]
                break
            node = node[side]

    def freeze(t):
        return None if t is None else (t[0], freeze(t[1]), freeze(t[2]))

    return (w.height, freeze(root))


def insertion_tableau(letters: Sequence) -> tuple[tuple, ...]:
    """Row insertion: each letter bumps the leftmost strictly greater entry of a row."""
    rows: list[list] = []
    for x in letters:
        for row in rows:
            pos = bisect_right(row, x)
            if pos == len(row):
                row.append(x)
                break
            row[pos], x = x, row[pos]
        else:
            rows.append([x])
    return tuple(tuple(r) for r in rows)


def plactic_key(w: ColumnWord) -> Hashable:
    return (w.height, insertion_tableau(_letters(w)))


def standardize(letters: Sequence) -> tuple[int, ...]:
    """Stable standardization: equal letters are numbered from left to right."""
    order = sorted(range(len(letters)), key=lambda i: (letters[i], i))
    std = [0] * len(letters)
    for rank, i in enumerate(order, 1):
        std[i] = rank
    return tuple(std)


def recoils(perm: Sequence[int]) -> tuple[int, ...]:
    """Values ``i`` such that ``i + 1`` occurs to the left of ``i``."""
    where = {v: p for p, v in enumerate(perm)}
    return tuple(i for i in range(1, len(perm)) if where[i + 1] < where[i])


def hypoplactic_key(w: ColumnWord) -> Hashable:
    """Evaluation together with the recoil set of the standardized word."""
    xs = _letters(w)
    return (w.height, tuple(sorted(xs)), recoils(standardize(xs)))


def total_key(w: ColumnWord) -> Hashable:
    return (w.height, tuple(sorted(_letters(w))))


def coarse_key(w: ColumnWord) -> Hashable:
    # Deliberately broken: identifies every word of the same length and height.
    return (w.height, len(w))


# -- local relations (rewriting oracles) --------------------------------------------

def sylvester_moves(xs: tuple) -> Iterable[tuple]:
    """``a c u b <-> c a u b`` whenever ``a <= b < c``."""
    n = len(xs)
    for i in range(n - 1):
        x, y = xs[i], xs[i + 1]
        if x == y:
            continue
        a, c = min(x, y), max(x, y)
        if any(a <= b < c for b in xs[i + 2:]):
            yield xs[:i] + (y, x) + xs[i + 2:]


def plactic_moves(xs: tuple) -> Iterable[tuple]:
    """Knuth relations: ``x z y <-> z x y`` (``x <= y < z``) and ``y x z <-> y z x`` (``x < y <= z``)."""
    n = len(xs)
    for i in range(n - 2):
        p, q, r = xs[i:i + 3]
        pre, post = xs[:i], xs[i + 3:]
        # x z y with x <= y < z  <->  z x y
        if p <= r < q:
            yield pre + (q, p, r) + post
        if q <= r < p:
            yield pre + (q, p, r) + post
        # y x z with x < y <= z  <->  y z x
        if q < p <= r:
            yield pre + (p, r, q) + post
        if r < p <= q:
            yield pre + (p, r, q) + post


@dataclass(frozen=True)
class CongruenceSpec:
    name: str
    key: Key
    moves: Callable[[tuple], Iterable[tuple]] | None = None
    good: bool = True
    description: str = ""


CONGRUENCES: dict[str, CongruenceSpec] = {
    "sylvester": CongruenceSpec("sylvester", sylvester_key, sylvester_moves,
                                description="binary search tree insertion, right to left"),
    "plactic": CongruenceSpec("plactic", plactic_key, plactic_moves,
                              description="row insertion tableau"),
    "hypoplactic": CongruenceSpec("hypoplactic", hypoplactic_key,
                                  description="evaluation and recoils of the standardization"),
    "total": CongruenceSpec("total", total_key, description="commutative image"),
    "coarse": CongruenceSpec("coarse", coarse_key, good=False,
                             description="negative control: all words of a given length"),
}


def get_spec(spec: str | CongruenceSpec) -> CongruenceSpec:
    if isinstance(spec, CongruenceSpec):
        return spec
    try:
        return CONGRUENCES[spec]
    except KeyError:
        raise ValueError(f"unknown congruence {spec!r}; known: {sorted(CONGRUENCES)}") from None


def class_key(spec: str | CongruenceSpec, w: ColumnWord | PackedMatrix) -> Hashable:
    if isinstance(w, PackedMatrix):
        w = to_column_word(w)
    return get_spec(spec).key(w)


def _stratum(k: int, grading: str, degree: int) -> Iterable[PackedMatrix]:
    if grading == "size":
        return enumerate_packed(k, degree)
    if grading == "weight":
        return enumerate_packed_by_weight(k, degree)
    raise ValueError(f"grading must be 'size' or 'weight', got {grading!r}")


def classes(spec: str | CongruenceSpec, matrices: Iterable[PackedMatrix]) -> dict[Hashable, list[PackedMatrix]]:
    """Group matrices by class key."""
    s = get_spec(spec)
    out: dict[Hashable, list[PackedMatrix]] = {}
    for m in matrices:
        out.setdefault(s.key(to_column_word(m)), []).append(m)
    return out


def class_count(spec: str | CongruenceSpec, k: int, grading: str, degree: int) -> int:
    """Dimension of the class-sum subalgebra in one homogeneous component."""
    s = get_spec(spec)
    return len({s.key(to_column_word(m)) for m in _stratum(k, grading, degree)})


def rewriting_classes(spec: str | CongruenceSpec, matrices: Iterable[PackedMatrix]) -> list[frozenset[PackedMatrix]]:
    """Partition by connected components of the local relations (oracle)."""
    s = get_spec(spec)
    if s.moves is None:
        raise ValueError(f"no local relations recorded for {s.name}")
    pool = list(matrices)
    by_word = {tuple(column_key(c) for c in m.columns): m for m in pool}
    parent = {m: m for m in pool}

    def find(x):
        while parent[x] is not x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for word, m in by_word.items():
        for other in s.moves(word):
            if other in by_word:
                ra, rb = find(m), find(by_word[other])
                if ra is not rb:
                    parent[ra] = rb
            else:
                raise ValueError("local relation left the matrix pool")
    groups: dict = {}
    for m in pool:
        groups.setdefault(find(m), set()).add(m)
    return [frozenset(g) for g in groups.values()]


def key_partition(spec: str | CongruenceSpec, matrices: Iterable[PackedMatrix]) -> list[frozenset[PackedMatrix]]:
    return [frozenset(g) for g in classes(spec, matrices).values()]


# -- validator -----------------------------------------------------------------------

@dataclass
class ConditionResult:
    condition: str
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def fail(self, msg: str, keep: int = 5) -> None:
        if len(self.violations) < keep:
            self.violations.append(msg)


@dataclass
class CongruenceReport:
    name: str
    results: list[ConditionResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_text(self) -> str:
        lines = [f"{self.name}: {'pass' if self.passed else 'fail'}"]
        for r in self.results:
            lines.append(f"  {r.condition}: {'pass' if r.passed else 'fail'} ({r.checked} checks)")
            lines.extend("    " + v for v in r.violations)
        return "\n".join(lines)


def _words(height: int, max_length: int, null_letters: bool) -> tuple[list[Column], list[ColumnWord]]:
    letters = [c for c in product((0, 1), repeat=height) if null_letters or any(c)]
    letters.sort(key=column_key)
    words = [ColumnWord(ls, height) for n in range(max_length + 1) for ls in product(letters, repeat=n)]
    return letters, words


def _show(w: ColumnWord) -> str:
    if not w.letters:
        return "()"
    return "|".join("".join(str(x) for x in c) for c in w.letters)


def validate_good_congruence(spec: str | CongruenceSpec, sample_budget: int | None = None,
                             max_height: int = 3, max_length: int = 3, seed: int = 0,
                             null_letters: bool = False) -> CongruenceReport:
    """Check the three good-congruence conditions on small words over 0/1 columns.

    Words are all words of length at most ``max_length`` whose letters are
    columns of a common height at most ``max_height``; the concatenation
    check extends congruent pairs by one more letter.  Null columns are
    excluded unless ``null_letters`` is set.  With ``sample_budget``, each
    condition inspects at most that many randomly chosen instances.
    """
    s = get_spec(spec)
    key = s.key
    rng = random.Random(seed)
    congr = ConditionResult("monoid congruence")
    restr = ConditionResult("restriction to intervals")
    decomp = ConditionResult("decompression")

    def pick(items: list) -> list:
        if sample_budget is None or len(items) <= sample_budget:
            return items
        return rng.sample(items, sample_budget)

    for h in range(1, max_height + 1):
        letters, words = _words(h, max_length, null_letters)
        keys = {w: key(w) for w in words}
        groups: dict = {}
        for w in words:
            groups.setdefault(keys[w], []).append(w)
        # Congruence is key equality, so pairing each word with its class
        # representative covers every congruent pair by transitivity.
        pairs = [(g[0], v) for g in groups.values() for v in g[1:]]

        # Congruent pairs are extended by one letter, so words reach max_length + 1.
        for u, v in pick(pairs):
            for x in letters:
                xw = ColumnWord([x], h)
                for a, b in ((xw + u, xw + v), (u + xw, v + xw)):
                    congr.checked += 1
                    if key(a) != key(b):
                        congr.fail(f"h={h}: {_show(u)} ~ {_show(v)} but {_show(a)} !~ {_show(b)}")

        intervals = [(lo, hi) for i, lo in enumerate(letters) for hi in letters[i:]]
        for u, v in pick(pairs):
            for lo, hi in intervals:
                ru, rv = u.restrict(lo, hi), v.restrict(lo, hi)
                restr.checked += 1
                if key(ru) != key(rv):
                    restr.fail(f"h={h}: {_show(u)} ~ {_show(v)} but restrictions to "
                               f"[{''.join(map(str, lo))},{''.join(map(str, hi))}] differ")

        left = {w: keys[w] for w in words}
        right = {w: (key(w.compress()), w.evaluation()) for w in words}
        inv_right: dict = {}
        for w in words:
            inv_right.setdefault(right[w], []).append(w)
        for w in pick(words):
            decomp.checked += 1
            a = {x for x in groups[left[w]]}
            b = set(inv_right[right[w]])
            if a != b:
                other = next(iter(a ^ b))
                decomp.fail(f"h={h}: {_show(w)} vs {_show(other)} disagree on decompression")

    return CongruenceReport(s.name, [congr, restr, decomp])


# -- class sums -----------------------------------------------------------------------

_INDEX: dict[tuple[str, int, int], tuple[dict, dict]] = {}


def _class_index(s: CongruenceSpec, k: int, n: int) -> tuple[dict, dict]:
    """``(key -> class members, matrix -> key)`` for all size-``n`` matrices."""
    slot = (s.name, k, n)
    if slot not in _INDEX:
        members: dict = {}
        keys: dict = {}
        for m in enumerate_packed(k, n):
            key = s.key(to_column_word(m))
            keys[m] = key
            members.setdefault(key, []).append(m)
        _INDEX[slot] = (members, keys)
    return _INDEX[slot]


def class_of(spec: str | CongruenceSpec, m: PackedMatrix) -> list[PackedMatrix]:
    """All packed matrices congruent to ``m``; congruent matrices share their size."""
    s = get_spec(spec)
    members, keys = _class_index(s, m.k, m.n)
    return members[keys[m]]


def p_element(spec: str | CongruenceSpec, m: PackedMatrix) -> Element:
    """The class sum ``P_[m]`` on the fundamental basis."""
    return Element(((x, 1) for x in class_of(spec, m)), "F", m.k)


@dataclass
class ClosureReport:
    name: str
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_text(self) -> str:
        head = f"{self.name}: {'pass' if self.passed else 'fail'} ({self.checked} checks)"
        return "\n".join([head, *("  " + v for v in self.violations)])


def _non_uniform(s: CongruenceSpec, terms: dict) -> PackedMatrix | None:
    """A matrix whose class does not carry a constant coefficient in ``terms``."""
    for m, c in terms.items():
        for x in class_of(s, m):
            if terms.get(x, 0) != c:
                return m
    return None


def p_basis_product_check(spec: str | CongruenceSpec, n1: int, n2: int, k: int = 1) -> ClosureReport:
    """Check that products and coproducts of class sums are combinations of class sums.

    Products range over all pairs of classes of sizes ``n1`` and ``n2``;
    coproducts over all classes of size ``n1 + n2``.
    """
    s = get_spec(spec)
    report = ClosureReport(s.name)
    reps1 = [g[0] for g in _class_index(s, k, n1)[0].values()]
    reps2 = [g[0] for g in _class_index(s, k, n2)[0].values()]
    for a in reps1:
        pa = p_element(s, a)
        for b in reps2:
            prod = multiply(pa, p_element(s, b))
            report.checked += 1
            bad = _non_uniform(s, prod.terms)
            if bad is not None:
                report.violations.append(
                    f"product of the classes of\n{format_matrix(a)}\nand\n{format_matrix(b)}\n"
                    f"is not constant on the class of\n{format_matrix(bad)}")
                return report
    for g in _class_index(s, k, n1 + n2)[0].values():
        acc: dict = {}
        for m in g:
            for pair, c in coproduct_F(m).terms.items():
                acc[pair] = acc.get(pair, 0) + c
        report.checked += 1
        for (l, r), c in acc.items():
            if any(acc.get((x, y), 0) != c for x in class_of(s, l) for y in class_of(s, r)):
                report.violations.append(
                    f"coproduct of the class of\n{format_matrix(g[0])}\n"
                    f"is not constant on the class pair of\n{format_matrix(l)}\nand\n{format_matrix(r)}")
                return report
    return report
