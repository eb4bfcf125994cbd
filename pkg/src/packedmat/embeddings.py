"""Colored permutations and uniform block permutations as packed matrices.

``alpha`` sends a colored permutation ``(sigma, c)`` to the matrix with entry
``c_j`` in row ``sigma_j`` of column ``j``.  ``beta`` sends a uniform block
permutation to the 0/1 matrix covering every block ``e x pi(e)``.  Both images
span Hopf subalgebras; the checks here verify this on small sizes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations, permutations, product as cartesian
from typing import Callable, Iterable, Iterator, Sequence

from .enumeration import enumerate_packed
from .hopf import coproduct_F, product_F
from .lincomb import Element
from .matrix import PackedMatrix
from .order import covers


# -- colored permutations ------------------------------------------------------

@dataclass(frozen=True)
class ColoredPermutation:
    sigma: tuple[int, ...]
    colors: tuple[int, ...]
    k: int = 1

    def __post_init__(self):
        n = len(self.sigma)
        if sorted(self.sigma) != list(range(1, n + 1)):
            raise ValueError(f"{self.sigma} is not a permutation of 1..{n}")
        if len(self.colors) != n:
            raise ValueError("one color per letter")
        if any(not 1 <= c <= self.k for c in self.colors):
            raise ValueError(f"colors must lie in 1..{self.k}")

    @classmethod
    def parse(cls, text: str, k: int | None = None) -> ColoredPermutation:
        """Read ``word:colors`` such as ``312:121``; colors default to all 1."""
        word, _, colors = text.strip().partition(":")
        sigma = tuple(int(ch) for ch in word)
        cols = tuple(int(ch) for ch in colors) if colors else (1,) * len(sigma)
        return cls(sigma, cols, k if k is not None else max(cols, default=1))

    @property
    def n(self) -> int:
        return len(self.sigma)

    def __str__(self):
        if not self.sigma:
            return ":"
        return "".join(map(str, self.sigma)) + ":" + "".join(map(str, self.colors))


def alpha(p: ColoredPermutation) -> PackedMatrix:
    n = p.n
    rows = [[0] * n for _ in range(n)]
    for j, (s, c) in enumerate(zip(p.sigma, p.colors)):
        rows[s - 1][j] = c
    return PackedMatrix._trusted(tuple(map(tuple, rows)), p.k)


def colored_permutations(n: int, k: int) -> Iterator[ColoredPermutation]:
    for sigma in permutations(range(1, n + 1)):
        for cols in cartesian(range(1, k + 1), repeat=n):
            yield ColoredPermutation(sigma, cols, k)


def shifted_shuffle(p1: ColoredPermutation, p2: ColoredPermutation) -> list[ColoredPermutation]:
    """Shuffles of ``p1`` with ``p2`` shifted up by ``n1``; colors stay with their letters."""
    if p1.k != p2.k:
        raise ValueError("colored permutations over different color sets")
    n1, n = p1.n, p1.n + p2.n
    a = list(zip(p1.sigma, p1.colors))
    b = [(s + n1, c) for s, c in zip(p2.sigma, p2.colors)]
    out = []
    for pos in _positions(n, n1):
        ia, ib = iter(a), iter(b)
        letters = [next(ia) if j in pos else next(ib) for j in range(n)]
        out.append(ColoredPermutation(tuple(s for s, _ in letters), tuple(c for _, c in letters), p1.k))
    return out


def _positions(n: int, n1: int) -> Iterator[frozenset[int]]:
    for pos in combinations(range(n), n1):
        yield frozenset(pos)


def colored_shuffle_correspondence(p1: ColoredPermutation, p2: ColoredPermutation) -> bool:
    """``alpha`` carries the shifted shuffle onto the product of fundamental elements."""
    lhs = product_F(alpha(p1), alpha(p2))
    rhs = Element(((alpha(p), 1) for p in shifted_shuffle(p1, p2)), "F", p1.k)
    return lhs == rhs


def _apply_adjacent(sigma: tuple[int, ...], i: int) -> tuple[int, ...]:
    s = list(sigma)
    s[i], s[i + 1] = s[i + 1], s[i]
    return tuple(s)


def weak_order_check(n: int) -> tuple[bool, int]:
    """Compare covers of permutation matrices with right weak order covers.

    Returns whether they agree and the total number of cover relations.
    """
    ok, edges = True, 0
    for sigma in permutations(range(1, n + 1)):
        m = alpha(ColoredPermutation(sigma, (1,) * n))
        ups = {alpha(ColoredPermutation(_apply_adjacent(sigma, i), (1,) * n))
               for i in range(n - 1) if sigma[i] < sigma[i + 1]}
        got = set(covers(m))
        ok = ok and got == ups
        edges += len(got)
    return ok, edges


# -- uniform block permutations -------------------------------------------------

Block = frozenset[int]
_BLOCK = re.compile(r"\{([^}]*)\}\s*->\s*\{([^}]*)\}")


def _block(text: str) -> Block:
    return frozenset(int(x) for x in text.replace(" ", "").split(",") if x)


@dataclass(frozen=True)
class UniformBlockPermutation:
    """Bijection between the blocks of two set partitions of ``[n]`` preserving block sizes."""

    blocks: tuple[tuple[Block, Block], ...]

    def __post_init__(self):
        pairs = tuple(sorted(((frozenset(d), frozenset(c)) for d, c in self.blocks),
                             key=lambda p: min(p[0])))
        object.__setattr__(self, "blocks", pairs)
        n = sum(len(d) for d, _ in pairs)
        for side in (0, 1):
            seen = [x for p in pairs for x in p[side]]
            if sorted(seen) != list(range(1, n + 1)):
                raise ValueError("blocks must partition 1..n on both sides")
        if any(not d or len(d) != len(c) for d, c in pairs):
            raise ValueError("each block and its image must have the same positive size")

    @classmethod
    def parse(cls, text: str) -> UniformBlockPermutation:
        """Read ``{1,4,5}->{2,5,6}; {2}->{1}; {3,6}->{3,4}``."""
        text = text.strip()
        if text in ("", "empty"):
            return cls(())
        pairs = _BLOCK.findall(text)
        if not pairs or _BLOCK.sub("", text).replace(";", "").strip():
            raise ValueError(f"cannot parse uniform block permutation {text!r}")
        return cls(tuple((_block(d), _block(c)) for d, c in pairs))

    @property
    def n(self) -> int:
        return sum(len(d) for d, _ in self.blocks)

    def inverse(self) -> UniformBlockPermutation:
        return UniformBlockPermutation(tuple((c, d) for d, c in self.blocks))

    def __str__(self):
        def fmt(b: Block) -> str:
            return "{" + ",".join(map(str, sorted(b))) + "}"
        return "; ".join(f"{fmt(d)}->{fmt(c)}" for d, c in self.blocks) or "empty"


def beta(u: UniformBlockPermutation) -> PackedMatrix:
    n = u.n
    rows = [[0] * n for _ in range(n)]
    for dom, img in u.blocks:
        for j in dom:
            for i in img:
                rows[i - 1][j - 1] = 1
    return PackedMatrix._trusted(tuple(map(tuple, rows)), 1)


def _components(m: PackedMatrix) -> list[tuple[set[int], set[int]]]:
    """Connected components of the support as (rows, columns), 0-based."""
    n = m.n
    row_of = {i: {j for j in range(n) if m.rows[i][j]} for i in range(n)}
    col_of = {j: {i for i in range(n) if m.rows[i][j]} for j in range(n)}
    seen: set[int] = set()
    out = []
    for start in range(n):
        if start in seen:
            continue
        rows, cols, todo = {start}, set(), [("r", start)]
        seen.add(start)
        while todo:
            kind, x = todo.pop()
            nbrs = row_of[x] if kind == "r" else col_of[x]
            for y in nbrs:
                if kind == "r" and y not in cols:
                    cols.add(y)
                    todo.append(("c", y))
                elif kind == "c" and y not in rows:
                    rows.add(y)
                    seen.add(y)
                    todo.append(("r", y))
        out.append((rows, cols))
    return out


def is_ubp_support(m: PackedMatrix) -> bool:
    """Whether every component of the support is a square complete bipartite block."""
    if m.k != 1:
        return False
    for rows, cols in _components(m):
        if len(rows) != len(cols):
            return False
        if any(not m.rows[i][j] for i in rows for j in cols):
            return False
    return True


def ubp_from_support(m: PackedMatrix) -> UniformBlockPermutation:
    if not is_ubp_support(m):
        raise ValueError("matrix is not in the image of beta")
    return UniformBlockPermutation(tuple(
        (frozenset(j + 1 for j in cols), frozenset(i + 1 for i in rows))
        for rows, cols in _components(m)))


def enumerate_ubp(n: int) -> Iterator[UniformBlockPermutation]:
    """Uniform block permutations of size ``n``, read off the packed matrices they index."""
    for m in enumerate_packed(1, n):
        if is_ubp_support(m):
            yield ubp_from_support(m)


# -- image closure ---------------------------------------------------------------

@dataclass
class ImageReport:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_text(self) -> str:
        lines = [f"{self.name}: {'PASS' if self.passed else 'FAIL'} ({self.checks} checks)"]
        lines += ["  " + f.replace("\n", "/") for f in self.failures]
        return "\n".join(lines)


def is_permutation_support(m: PackedMatrix) -> bool:
    return all(sum(1 for x in r if x) == 1 for r in m.rows) and all(
        sum(1 for x in c if x) == 1 for c in m.columns)


def one_per_column(m: PackedMatrix) -> bool:
    return all(sum(1 for x in c if x) == 1 for c in m.columns)


def is_symmetric(m: PackedMatrix) -> bool:
    return m.rows == tuple(zip(*m.rows))


PREDICATES: dict[str, Callable[[PackedMatrix], bool]] = {
    "ubp": is_ubp_support,
    "permutation": is_permutation_support,
    "one-per-column": one_per_column,
    "symmetric": is_symmetric,
}


def image_closure_check(predicate: Callable[[PackedMatrix], bool], size_budget: int, k: int = 1,
                        name: str = "image", limit: int = 10) -> ImageReport:
    """Whether the span of the matrices accepted by ``predicate`` is closed.

    Products of pairs with ``n1 + n2 <= size_budget`` and coproducts up to the
    same size are expanded; every resulting matrix must be accepted again.
    """
    rep = ImageReport(f"{name} closure (n <= {size_budget}, k={k})")
    image = {n: [m for m in enumerate_packed(k, n) if predicate(m)] for n in range(size_budget + 1)}

    def fail(msg: str) -> None:
        if len(rep.failures) < limit:
            rep.failures.append(msg)

    for n1 in range(1, size_budget):
        for n2 in range(1, size_budget - n1 + 1):
            for m1, m2 in cartesian(image[n1], image[n2]):
                for m in product_F(m1, m2).support():
                    rep.checks += 1
                    if not predicate(m):
                        fail(f"product of {m1} and {m2} contains {m}")
    for n in range(size_budget + 1):
        for m in image[n]:
            for a, b in coproduct_F(m).support():
                rep.checks += 1
                if not (predicate(a) and predicate(b)):
                    fail(f"coproduct of {m} contains {a} (x) {b}")
    return rep


def injective(values: Iterable) -> bool:
    seen = list(values)
    return len(seen) == len(set(seen))


def ubp_counts(n_max: int) -> list[int]:
    return [sum(1 for _ in enumerate_ubp(n)) for n in range(n_max + 1)]


def transpose_inverse_holds(us: Sequence[UniformBlockPermutation]) -> bool:
    return all(beta(u).transpose() == beta(u.inverse()) for u in us)
