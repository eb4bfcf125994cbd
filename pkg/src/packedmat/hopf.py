"""Hopf operations on the fundamental basis, their duals, and the dendriform splittings.

Products and coproducts act on basis keys (packed matrices) and return
:class:`~packedmat.lincomb.Element` values.  Rank-2 tensors use pairs of
matrices as keys; the axiom checker flattens rank-3 tensors into triples.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Iterable, Sequence

from .enumeration import enumerate_packed
from .lincomb import Element, scale, tensor_basis
from .matrix import (
    Matrix,
    PackedMatrix,
    column_cuts,
    column_blocks,
    compress,
    format_matrix,
    row_cuts,
)

F, FD = "F", "F*"
FF, FDFD = tensor_basis(F, F), tensor_basis(FD, FD)

Product = Callable[[PackedMatrix, PackedMatrix], Element]


def _check_k(m1: PackedMatrix, m2: PackedMatrix) -> None:
    if m1.k != m2.k:
        raise ValueError(f"alphabet mismatch: k={m1.k} vs k={m2.k}")


def _interleavings(n1: int, n2: int) -> Iterable[tuple[int, ...]]:
    """Positions taken by the first operand in each shuffle, in lexicographic order."""
    return combinations(range(n1 + n2), n1)


def _column_shuffles(m1: PackedMatrix, m2: PackedMatrix) -> Iterable[tuple[tuple[int, ...], PackedMatrix]]:
    n1, n2 = m1.n, m2.n
    left = [c + (0,) * n2 for c in m1.columns]
    right = [(0,) * n1 + c for c in m2.columns]
    for pos in _interleavings(n1, n2):
        chosen = set(pos)
        it1, it2 = iter(left), iter(right)
        cols = [next(it1) if j in chosen else next(it2) for j in range(n1 + n2)]
        yield pos, PackedMatrix._trusted(tuple(zip(*cols)) if cols else (), m1.k)


def _row_shuffles(m1: PackedMatrix, m2: PackedMatrix) -> Iterable[tuple[tuple[int, ...], PackedMatrix]]:
    n1, n2 = m1.n, m2.n
    top = [r + (0,) * n2 for r in m1.rows]
    bottom = [(0,) * n1 + r for r in m2.rows]
    for pos in _interleavings(n1, n2):
        chosen = set(pos)
        it1, it2 = iter(top), iter(bottom)
        rows = tuple(next(it1) if i in chosen else next(it2) for i in range(n1 + n2))
        yield pos, PackedMatrix._trusted(rows, m1.k)


# -- fundamental basis ---------------------------------------------------------

def product_F(m1: PackedMatrix, m2: PackedMatrix) -> Element:
    """``F_m1 . F_m2``: shuffle the columns of ``m1`` (raised) with those of ``m2`` (lowered)."""
    _check_k(m1, m2)
    return Element(((m, 1) for _, m in _column_shuffles(m1, m2)), F, m1.k)


def _faulty_product(m1: PackedMatrix, m2: PackedMatrix) -> Element:
    # Negative control: forget the last interleaving whenever both operands are nonempty.
    terms = [m for _, m in _column_shuffles(m1, m2)]
    if m1.n and m2.n:
        terms = terms[:-1]
    return Element(((m, 1) for m in terms), F, m1.k)


FAULTS: dict[str, Product] = {"drop-shuffle-term": _faulty_product}


def _split(m: PackedMatrix, j: int) -> tuple[PackedMatrix, PackedMatrix]:
    left = compress(Matrix._trusted(tuple(r[:j] for r in m.rows), m.k, j))
    right = compress(Matrix._trusted(tuple(r[j:] for r in m.rows), m.k, m.n - j))
    return left, right  # type: ignore[return-value]


def coproduct_F(m: PackedMatrix) -> Element:
    """``Delta F_m``: one term per column decomposition of ``m`` into two blocks."""
    return Element(((_split(m, j), 1) for j in column_cuts(m)), FF, m.k)


def antipode_F(m: PackedMatrix, product: Product = product_F) -> Element:
    """Alternating sum over all factorizations of ``m`` into nonempty column blocks."""
    if product is product_F:
        return _antipode_cached(m)
    return _antipode(m, product)


@lru_cache(maxsize=1 << 16)
def _antipode_cached(m: PackedMatrix) -> Element:
    return _antipode(m, product_F)


def _antipode(m: PackedMatrix, product: Product) -> Element:
    if m.n == 0:
        return Element({m: 1}, F, m.k)
    inner = column_cuts(m)[1:-1]
    acc: dict = {}
    for r in range(len(inner) + 1):
        sign = -1 if (r + 1) % 2 else 1
        for cuts in combinations(inner, r):
            blocks = column_blocks(m, cuts)
            term = Element({blocks[0]: 1}, F, m.k)
            for b in blocks[1:]:
                term = multiply(term, Element({b: 1}, F, m.k), product)
            for key, c in term.terms.items():
                acc[key] = acc.get(key, 0) + sign * c
    return Element(acc, F, m.k)


# -- dual basis -----------------------------------------------------------------

def dual_product_F(m1: PackedMatrix, m2: PackedMatrix) -> Element:
    """``F*_m1 . F*_m2``: shuffle the rows of ``m1`` (left) with those of ``m2`` (right)."""
    _check_k(m1, m2)
    return Element(((m, 1) for _, m in _row_shuffles(m1, m2)), FD, m1.k)


def _row_split(m: PackedMatrix, i: int) -> tuple[PackedMatrix, PackedMatrix]:
    top = compress(Matrix._trusted(m.rows[:i], m.k, m.n))
    bottom = compress(Matrix._trusted(m.rows[i:], m.k, m.n))
    return top, bottom  # type: ignore[return-value]


def dual_coproduct_F(m: PackedMatrix) -> Element:
    """``Delta F*_m``: one term per row decomposition, top block on the left."""
    return Element(((_row_split(m, i), 1) for i in row_cuts(m)), FDFD, m.k)


def duality_transpose(e: Element) -> Element:
    """``phi``: relabel ``F_M`` as ``F*_{M^T}``, factorwise on tensors."""
    parts = e.basis.split("⊗")
    if any(p != F for p in parts):
        raise ValueError(f"expected an element over F, got {e.basis}")

    def tr(key):
        if isinstance(key, PackedMatrix):
            return key.transpose()
        return tuple(tr(p) for p in key)

    return Element(((tr(key), c) for key, c in e.terms.items()),
                   tensor_basis(*[FD] * len(parts)), e.k)


# -- dendriform and codendriform splittings --------------------------------------

def _need_nonempty(*ms: PackedMatrix) -> None:
    if any(m.n == 0 for m in ms):
        raise ValueError("dendriform operations are defined on nonempty matrices only")


def dendriform_left(m1: PackedMatrix, m2: PackedMatrix) -> Element:
    """Terms of ``F_m1 . F_m2`` whose last column comes from ``m1``."""
    _need_nonempty(m1, m2)
    _check_k(m1, m2)
    last = m1.n + m2.n - 1
    return Element(((m, 1) for pos, m in _column_shuffles(m1, m2) if pos[-1] == last), F, m1.k)


def dendriform_right(m1: PackedMatrix, m2: PackedMatrix) -> Element:
    """Terms of ``F_m1 . F_m2`` whose last column comes from ``m2``."""
    _need_nonempty(m1, m2)
    _check_k(m1, m2)
    last = m1.n + m2.n - 1
    return Element(((m, 1) for pos, m in _column_shuffles(m1, m2) if pos[-1] != last), F, m1.k)


def _last_row_left(m: PackedMatrix, j: int) -> bool:
    return any(m.rows[-1][:j])


def codendriform_left(m: PackedMatrix) -> Element:
    """Nontrivial coproduct terms whose left factor keeps the last row of ``m``."""
    _need_nonempty(m)
    cuts = [j for j in column_cuts(m)[1:-1] if _last_row_left(m, j)]
    return Element(((_split(m, j), 1) for j in cuts), FF, m.k)


def codendriform_right(m: PackedMatrix) -> Element:
    """Nontrivial coproduct terms whose right factor keeps the last row of ``m``."""
    _need_nonempty(m)
    cuts = [j for j in column_cuts(m)[1:-1] if not _last_row_left(m, j)]
    return Element(((_split(m, j), 1) for j in cuts), FF, m.k)


def codendriform_bar(m: PackedMatrix) -> Element:
    return codendriform_left(m) + codendriform_right(m)


# -- linear extensions -----------------------------------------------------------

def multiply(x: Element, y: Element, product: Product = product_F) -> Element:
    """Bilinear extension of a product on basis keys."""
    acc: dict = {}
    basis = x.basis
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            img = product(a, b)
            basis = img.basis
            c = ca * cb
            for key, c2 in img.terms.items():
                acc[key] = acc.get(key, 0) + c * c2
    return Element(acc, basis, x.k if x.k is not None else y.k)


def tensor_multiply(x: Element, y: Element, product: Product = product_F) -> Element:
    """Componentwise product of two rank-2 tensors."""
    acc: dict = {}
    for (a1, a2), ca in x.terms.items():
        for (b1, b2), cb in y.terms.items():
            p1, p2 = product(a1, b1), product(a2, b2)
            c = ca * cb
            for k1, c1 in p1.terms.items():
                for k2, c2 in p2.terms.items():
                    acc[(k1, k2)] = acc.get((k1, k2), 0) + c * c1 * c2
    return Element(acc, x.basis, x.k)


def apply_on_factor(f: Callable[[PackedMatrix], Element], t: Element, position: int) -> Element:
    """Apply ``f`` to one factor of a tensor, splicing the result flat into the key."""
    acc: dict = {}
    rank = None
    for key, c in t.terms.items():
        img = f(key[position])
        for k2, c2 in img.terms.items():
            piece = k2 if isinstance(k2, tuple) else (k2,)
            new = key[:position] + piece + key[position + 1:]
            rank = len(new)
            acc[new] = acc.get(new, 0) + c * c2
    return Element(acc, tensor_basis(*[F] * (rank or 3)), t.k)


# -- axiom checker ----------------------------------------------------------------

@dataclass
class AxiomResult:
    axiom: str
    instances: int = 0
    status: str = "pass"
    counterexample: str | None = None

    def record(self, ok: bool, witness: Callable[[], str]) -> None:
        self.instances += 1
        if not ok and self.status == "pass":
            self.status = "fail"
            self.counterexample = witness()


@dataclass
class AxiomReport:
    k: int
    size_budget: int
    fault: str | None = None
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status == "pass" for r in self.results)

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            lines.append(f"{r.axiom}: {r.status} ({r.instances} instances)")
            if r.counterexample:
                lines.extend("    " + s for s in r.counterexample.splitlines())
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(asdict(self), ensure_ascii=False)


def _witness(*ms: PackedMatrix) -> Callable[[], str]:
    return lambda: "\n--\n".join(format_matrix(m) for m in ms)


def _nonempty(k: int, budget: int) -> dict[int, list[PackedMatrix]]:
    return {n: list(enumerate_packed(k, n)) for n in range(1, budget + 1)}


def _compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    for cut in combinations(range(1, total), parts - 1):
        bounds = (0, *cut, total)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def _tuples(strata: dict[int, list[PackedMatrix]], parts: int, budget: int):
    for total in range(parts, budget + 1):
        for sizes in _compositions(total, parts):
            yield from product(*(strata[s] for s in sizes))


def verify_axioms(k: int, size_budget: int, fault: str | None = None,
                  single_budget: int | None = None) -> AxiomReport:
    """Exhaustively check the Hopf, dendriform and codendriform identities.

    Binary and ternary identities range over all tuples of nonempty matrices
    whose sizes sum to at most ``size_budget``; unary identities (coproduct
    side) range over all matrices of size at most ``single_budget``, which
    defaults to ``size_budget``.  ``fault`` substitutes a corrupted product
    from :data:`FAULTS`.
    """
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}; known: {sorted(FAULTS)}")
    prod = FAULTS[fault] if fault else product_F
    single_budget = size_budget if single_budget is None else single_budget
    strata = _nonempty(k, max(size_budget, single_budget))
    report = AxiomReport(k, size_budget, fault)

    def mul(x: Element, y: Element) -> Element:
        return multiply(x, y, prod)

    def f(m: PackedMatrix) -> Element:
        return Element({m: 1}, F, k)

    def left(a, b):
        full = prod(a, b)
        last = a.n + b.n - 1
        keep = {m for pos, m in _column_shuffles(a, b) if pos[-1] == last}
        return Element(((m, c) for m, c in full.terms.items() if m in keep), F, k)

    def right(a, b):
        full = prod(a, b)
        last = a.n + b.n - 1
        keep = {m for pos, m in _column_shuffles(a, b) if pos[-1] != last}
        return Element(((m, c) for m, c in full.terms.items() if m in keep), F, k)

    assoc = AxiomResult("associativity")
    d1, d2, d3 = AxiomResult("dendriform-1"), AxiomResult("dendriform-2"), AxiomResult("dendriform-3")
    for x, y, z in _tuples(strata, 3, size_budget):
        fx, fy, fz = f(x), f(y), f(z)
        xy, yz = prod(x, y), prod(y, z)
        assoc.record(mul(xy, fz) == mul(fx, yz), _witness(x, y, z))
        d1.record(multiply(multiply(fx, fy, left), fz, left) == multiply(fx, yz, left), _witness(x, y, z))
        d2.record(multiply(multiply(fx, fy, right), fz, left)
                  == multiply(fx, multiply(fy, fz, left), right), _witness(x, y, z))
        d3.record(multiply(xy, fz, right) == multiply(fx, multiply(fy, fz, right), right),
                  _witness(x, y, z))

    mult = AxiomResult("coproduct-multiplicativity")
    for x, y in _tuples(strata, 2, size_budget):
        lhs = Element(coproduct_terms(prod(x, y)), FF, k)
        rhs = tensor_multiply(coproduct_F(x), coproduct_F(y), prod)
        mult.record(lhs == rhs, _witness(x, y))

    coassoc = AxiomResult("coassociativity")
    anti = AxiomResult("antipode")
    c1, c2, c3 = AxiomResult("codendriform-1"), AxiomResult("codendriform-2"), AxiomResult("codendriform-3")
    singles = [m for n in range(1, single_budget + 1) for m in strata[n]]
    for m in singles:
        delta = coproduct_F(m)
        coassoc.record(apply_on_factor(coproduct_F, delta, 0) == apply_on_factor(coproduct_F, delta, 1),
                       _witness(m))
        conv = Element((), F, k)
        for (a, b), c in delta.terms.items():
            conv = conv + scale(c, multiply(antipode_F(a, prod), f(b), prod))
        anti.record(conv.is_zero(), _witness(m))
        dl, dr = codendriform_left(m), codendriform_right(m)
        c1.record(apply_on_factor(codendriform_left, dl, 0) == apply_on_factor(codendriform_bar, dl, 1),
                  _witness(m))
        c2.record(apply_on_factor(codendriform_right, dl, 0) == apply_on_factor(codendriform_left, dr, 1),
                  _witness(m))
        c3.record(apply_on_factor(codendriform_bar, dr, 0) == apply_on_factor(codendriform_right, dr, 1),
                  _witness(m))

    report.results = [assoc, coassoc, mult, anti, d1, d2, d3, c1, c2, c3]
    return report


def coproduct_terms(e: Element) -> dict:
    """Linear extension of :func:`coproduct_F` to an element over ``F``."""
    acc: dict = {}
    for m, c in e.terms.items():
        for key, c2 in coproduct_F(m).terms.items():
            acc[key] = acc.get(key, 0) + c * c2
    return acc


def iterate(op: Callable[[Element], Element], e: Element, times: int) -> Element:
    for _ in range(times):
        e = op(e)
    return e


def antipode(e: Element) -> Element:
    """Linear extension of :func:`antipode_F`."""
    acc: dict = {}
    for m, c in e.terms.items():
        for key, c2 in antipode_F(m).terms.items():
            acc[key] = acc.get(key, 0) + c * c2
    return Element(acc, F, e.k)


def product_sequence(ms: Sequence[PackedMatrix], product: Product = product_F) -> Element:
    """``F_{m_1} . ... . F_{m_r}`` (the unit for an empty sequence is not supported)."""
    out = Element({ms[0]: 1}, F, ms[0].k)
    for m in ms[1:]:
        out = multiply(out, Element({m: 1}, F, m.k), product)
    return out
