"""Exact formal linear combinations of basis indices.

An :class:`Element` is a sparse map from basis keys to :class:`~fractions.Fraction`
coefficients, tagged with the name of the basis it is written in.  Keys are
packed matrices for rank-1 elements and tuples of packed matrices for tensors.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

from .matrix import PackedMatrix, format_matrix, parse_matrix

BASES = ("F", "F*", "E", "H", "W", "V", "P")

Number = int | Fraction


def key_order(key) -> tuple:
    """Canonical order on basis keys: size, weight, then row-major entries."""
    if isinstance(key, PackedMatrix):
        return key.sort_key()
    return tuple(key_order(part) for part in key)


class Element:
    """Finite linear combination with exact rational coefficients."""

    __slots__ = ("terms", "basis", "k")

    def __init__(self, terms: Mapping[Hashable, Number] | Iterable[tuple[Hashable, Number]] = (),
                 basis: str = "F", k: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for key, c in items:
            if c:
                acc[key] = acc.get(key, 0) + Fraction(c)
        self.terms: dict = {key: c for key, c in acc.items() if c}
        self.basis = basis
        if k is None and self.terms:
            k = _key_k(next(iter(self.terms)))
        self.k = k

    @classmethod
    def basis_element(cls, key, basis: str = "F") -> Element:
        return cls({key: 1}, basis)

    @classmethod
    def zero(cls, basis: str = "F", k: int | None = None) -> Element:
        return cls((), basis, k)

    # -- container protocol
    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator:
        return iter(sorted(self.terms, key=key_order))

    def __contains__(self, key) -> bool:
        return key in self.terms

    def __getitem__(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def items(self) -> list[tuple[Hashable, Fraction]]:
        return [(key, self.terms[key]) for key in self]

    def support(self) -> set:
        return set(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- vector space structure
    def _check(self, other: Element) -> None:
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")
        if self.k is not None and other.k is not None and self.k != other.k:
            raise ValueError(f"alphabet mismatch: k={self.k} vs k={other.k}")

    def __add__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        acc = dict(self.terms)
        for key, c in other.terms.items():
            acc[key] = acc.get(key, 0) + c
        return Element(acc, self.basis, self.k if self.k is not None else other.k)

    def __neg__(self) -> Element:
        return Element({key: -c for key, c in self.terms.items()}, self.basis, self.k)

    def __sub__(self, other: Element) -> Element:
        return self + (-other)

    def __rmul__(self, scalar: Number) -> Element:
        return scale(scalar, self)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.items():
            parts.append(f"{_fmt_coeff(c)}*{self.basis}[{_key_repr(key)}]")
        return " + ".join(parts)


def _key_k(key) -> int | None:
    if isinstance(key, PackedMatrix):
        return key.k
    for part in key:
        return _key_k(part)
    return None


def _key_repr(key) -> str:
    if isinstance(key, PackedMatrix):
        return "/".join("".join(str(x) for x in r) for r in key.rows) or "empty"
    return " (x) ".join(_key_repr(p) for p in key)


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else str(c)


def add(e1: Element, e2: Element) -> Element:
    return e1 + e2


def scale(r: Number, e: Element) -> Element:
    r = Fraction(r)
    if not r:
        return Element.zero(e.basis, e.k)
    return Element({key: r * c for key, c in e.terms.items()}, e.basis, e.k)


def linear_sum(elements: Iterable[Element], basis: str = "F", k: int | None = None) -> Element:
    acc: dict = {}
    for e in elements:
        if e.basis != basis:
            raise ValueError(f"basis mismatch: {e.basis} vs {basis}")
        for key, c in e.terms.items():
            acc[key] = acc.get(key, 0) + c
    return Element(acc, basis, k)


def tensor_basis(*tags: str) -> str:
    return "⊗".join(tags)


def tensor(e1: Element, e2: Element) -> Element:
    """Rank-2 tensor product; keys become pairs ``(key1, key2)``."""
    if e1.k is not None and e2.k is not None and e1.k != e2.k:
        raise ValueError(f"alphabet mismatch: k={e1.k} vs k={e2.k}")
    acc = {}
    for a, ca in e1.terms.items():
        for b, cb in e2.terms.items():
            acc[(a, b)] = ca * cb
    return Element(acc, tensor_basis(e1.basis, e2.basis), e1.k if e1.k is not None else e2.k)


def linear_map(f: Callable[[Hashable], Element], e: Element, basis: str | None = None) -> Element:
    """Extend ``f`` (basis key -> Element) linearly to ``e``."""
    acc: dict = {}
    out_basis = basis
    for key, c in e.terms.items():
        img = f(key)
        out_basis = out_basis or img.basis
        for k2, c2 in img.terms.items():
            acc[k2] = acc.get(k2, 0) + c * c2
    return Element(acc, out_basis or e.basis, e.k)


def bilinear_map(f: Callable[[Hashable, Hashable], Element], e1: Element, e2: Element,
                 basis: str | None = None) -> Element:
    """Extend ``f`` (pair of basis keys -> Element) bilinearly."""
    acc: dict = {}
    out_basis = basis
    for a, ca in e1.terms.items():
        for b, cb in e2.terms.items():
            img = f(a, b)
            out_basis = out_basis or img.basis
            c = ca * cb
            for k2, c2 in img.terms.items():
                acc[k2] = acc.get(k2, 0) + c * c2
    return Element(acc, out_basis or e1.basis, e1.k)


def flatten_key(key) -> tuple:
    """Reassociate a nested tensor key into a flat tuple of matrices."""
    if isinstance(key, PackedMatrix):
        return (key,)
    out: tuple = ()
    for part in key:
        out += flatten_key(part)
    return out


def flatten(e: Element) -> Element:
    """Forget the bracketing of nested tensor keys."""
    return Element(((flatten_key(key), c) for key, c in e.terms.items()), e.basis, e.k)


# -- triangular basis change --------------------------------------------------

class NotTriangularError(ValueError):
    pass


def triangular_invert(expand: Callable[[Hashable], Element], component: Sequence[Hashable],
                      order: Callable[[Hashable], object] = key_order) -> tuple[list, list[list[Fraction]]]:
    """Invert a unitriangular change of basis on one graded component.

    ``expand(x)`` writes the new basis element indexed by ``x`` in the old
    basis.  The component is sorted by ``order``; the expansion matrix ``A``
    (rows = new basis, columns = old basis) must then be unitriangular, either
    upper or lower.  Returns ``(keys, B)`` with ``B = A^{-1}``, so that the old
    basis element ``keys[j]`` equals ``sum_i B[j][i] * new(keys[i])``.
    """
    keys = sorted(component, key=order)
    index = {key: i for i, key in enumerate(keys)}
    size = len(keys)
    a = [[Fraction(0)] * size for _ in range(size)]
    for i, key in enumerate(keys):
        for k2, c in expand(key).terms.items():
            if k2 not in index:
                raise NotTriangularError(f"expansion of {key!r} leaves the component")
            a[i][index[k2]] = c
    upper = all(a[i][j] == 0 for i in range(size) for j in range(i))
    lower = all(a[i][j] == 0 for i in range(size) for j in range(i + 1, size))
    if not (upper or lower) or any(a[i][i] != 1 for i in range(size)):
        raise NotTriangularError("expansion is not unitriangular for the given order")
    # Solve B A = I row by row: B[j][c] = delta(j, c) - sum B[j][i] A[i][c] over
    # the already solved i (i < c when A is upper, i > c when lower).
    b = [[Fraction(0)] * size for _ in range(size)]
    cols = range(size) if upper else range(size - 1, -1, -1)
    for j in range(size):
        row = b[j]
        for c in cols:
            s = Fraction(int(c == j))
            solved = range(c) if upper else range(c + 1, size)
            for i in solved:
                if row[i] and a[i][c]:
                    s -= row[i] * a[i][c]
            row[c] = s
    return keys, b


# -- serialization ------------------------------------------------------------

def format_coeff(c: Fraction) -> str:
    """Lowest-terms rational with explicit sign, e.g. ``+1/1`` or ``-3/2``."""
    c = Fraction(c)
    sign = "-" if c < 0 else "+"
    return f"{sign}{abs(c.numerator)}/{c.denominator}"


def parse_coeff(text: str) -> Fraction:
    return Fraction(text)


def to_record(e: Element) -> dict:
    terms = []
    for key, c in e.items():
        if isinstance(key, PackedMatrix):
            terms.append({"matrix": format_matrix(key), "coeff": format_coeff(c)})
        else:
            terms.append({"matrices": [format_matrix(p) for p in flatten_key(key)],
                          "coeff": format_coeff(c)})
    return {"basis": e.basis, "terms": terms}


def dumps(e: Element) -> str:
    """One line of JSON describing ``e``."""
    return json.dumps(to_record(e), ensure_ascii=False, separators=(",", ":"))


def loads(line: str, k: int | None = None) -> Element:
    rec = json.loads(line)
    items = []
    for t in rec["terms"]:
        if "matrix" in t:
            key = parse_matrix(t["matrix"], k)
        else:
            key = tuple(parse_matrix(m, k) for m in t["matrices"])
        items.append((key, parse_coeff(t["coeff"])))
    return Element(items, rec["basis"], k)
