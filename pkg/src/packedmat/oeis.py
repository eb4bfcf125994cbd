"""Offline cross-checks of computed sequences against vendored OEIS prefixes."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Callable

from .asm import asm_count, io_closed_forms, quotient_dims
from .embeddings import ubp_counts
from .enumeration import count_packed, count_packed_by_size, count_packed_by_weight


@dataclass(frozen=True)
class Prefix:
    anum: str
    offset: int
    terms: tuple[int, ...]
    note: str


def load_prefixes() -> dict[str, Prefix]:
    text = resources.files("packedmat").joinpath("data/oeis_prefixes.txt").read_text()
    out = {}
    for line in text.splitlines():
        body, _, note = line.partition("#")
        if not body.strip():
            continue
        anum, offset, terms = body.split()
        out[anum] = Prefix(anum, int(offset), tuple(int(t) for t in terms.split(",")), note.strip())
    return out


def _packed_triangle() -> list[int]:
    return [count_packed(1, n, w) for n in range(1, 4) for w in range(n, n * n + 1)]


# How to compute each sequence; lengths stay within what runs in a few seconds.
COMPUTED: dict[str, Callable[[], list[int]]] = {
    "A055599": _packed_triangle,
    "A048291": lambda: [count_packed_by_size(1, n) for n in range(7)],
    "A104602": lambda: [count_packed_by_weight(1, w) for w in range(9)],
    "A023998": lambda: ubp_counts(4),
    "A005130": lambda: [asm_count(n) for n in range(7)],
    "A033638": lambda: [quotient_dims("io", n) for n in range(7)],
    "A152947": lambda: [quotient_dims("nw", n) for n in range(7)],
    "A116701": lambda: [quotient_dims("io,nw", n) for n in range(7)],
}


@dataclass
class SequenceCheck:
    anum: str
    computed: list[int]
    expected: tuple[int, ...]
    note: str = ""

    @property
    def matches(self) -> bool:
        n = len(self.computed)
        return n <= len(self.expected) and list(self.expected[:n]) == self.computed

    def line(self) -> str:
        status = "match" if self.matches else "MISMATCH"
        shown = ",".join(map(str, self.computed))
        out = f"{self.anum}: {status} on {len(self.computed)} terms [{shown}]"
        if not self.matches:
            want = ",".join(map(str, self.expected[:len(self.computed)]))
            out += f" expected [{want}]"
        if self.note:
            out += f"; {self.note}"
        return out


def io_formula_report(n_max: int = 6) -> dict[str, bool]:
    """Which ``io`` closed form reproduces the enumerated quotient dimensions for ``n <= n_max``."""
    enumerated = [quotient_dims("io", n) for n in range(n_max + 1)]
    names = io_closed_forms(0).keys()
    return {name: [io_closed_forms(n)[name] for n in range(n_max + 1)] == enumerated for name in names}


def oeis_check() -> list[SequenceCheck]:
    prefixes = load_prefixes()
    out = []
    for anum, compute in COMPUTED.items():
        note = ""
        if anum == "A033638":
            formulas = io_formula_report()
            note = "closed forms: " + ", ".join(
                f"{name} {'agrees' if ok else 'disagrees'}" for name, ok in formulas.items())
        out.append(SequenceCheck(anum, compute(), prefixes[anum].terms, note))
    return out
