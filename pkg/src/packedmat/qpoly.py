"""Integer polynomials in ``q`` and the q-analogues used by the ASM statistics."""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable


class QPoly:
    """Polynomial with integer coefficients; ``coeffs[i]`` multiplies ``q**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> QPoly:
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly([other])
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: QPoly) -> QPoly:
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return QPoly((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    def __sub__(self, other: QPoly) -> QPoly:
        return self + QPoly(-x for x in other.coeffs)

    def __mul__(self, other: QPoly | int) -> QPoly:
        if isinstance(other, int):
            return QPoly(x * other for x in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def divmod(self, other: QPoly) -> tuple[QPoly, QPoly]:
        """Long division by a polynomial with leading coefficient +-1."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        lead = other.coeffs[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must be monic up to sign")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [0] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * lead
            if c:
                quot[i - dq] = c
                for j, y in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * y
        return QPoly(quot), QPoly(rem)

    def exact_div(self, other: QPoly) -> QPoly:
        quot, rem = self.divmod(other)
        if rem.coeffs:
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return quot

    def __call__(self, q: int):
        return sum(c * q ** i for i, c in enumerate(self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if mono and abs(c) == 1:
                parts.append(("-" if c < 0 else "") + mono)
            else:
                parts.append(f"{c}{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def q_int(n: int) -> QPoly:
    """``[n]_q = 1 + q + ... + q^(n-1)``; ``[0]_q = 0``."""
    return QPoly([1] * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPoly:
    out = QPoly([1])
    for i in range(1, n + 1):
        out = out * q_int(i)
    return out


def q_multinomial(n: int, n1: int, n2: int) -> QPoly:
    """Gaussian binomial ``[n]_q! / ([n1]_q! [n2]_q!)`` with ``n = n1 + n2``."""
    if n1 < 0 or n2 < 0 or n1 + n2 != n:
        raise ValueError("q_multinomial needs n = n1 + n2 with n1, n2 >= 0")
    return q_factorial(n).exact_div(q_factorial(n1) * q_factorial(n2))


def q_multinomial_by_recurrence(n: int, n1: int, n2: int) -> QPoly:
    """Independent Pascal-recurrence evaluation, kept as a cross-check."""
    if n1 == 0 or n2 == 0:
        return QPoly([1])
    return (q_multinomial_by_recurrence(n - 1, n1 - 1, n2)
            + QPoly.monomial(n1) * q_multinomial_by_recurrence(n - 1, n1, n2 - 1))


def binomial_at_one(n: int, n1: int) -> int:
    return comb(n, n1)
