from __future__ import annotations

import pytest
from hypothesis import strategies as st

from packedmat.enumeration import enumerate_packed
from packedmat.matrix import PackedMatrix


def P(rows, k: int = 1) -> PackedMatrix:
    return PackedMatrix(rows, k)


def packed(k: int = 1, max_n: int = 3, min_n: int = 0):
    """Strategy drawing a packed matrix uniformly from the small strata."""
    pool = [m for n in range(min_n, max_n + 1) for m in enumerate_packed(k, n)]
    return st.sampled_from(pool)


@pytest.fixture
def small_k1():
    return [m for n in range(4) for m in enumerate_packed(1, n)]


ACCEPTANCE: dict[int, tuple[bool, str, str]] = {}


@pytest.fixture
def criterion():
    """Run one acceptance criterion, record its outcome and fail the test if it fails."""

    def check(number: int, title: str, fn):
        try:
            ok, detail = fn()
        except Exception as exc:  # recorded as a failure, then re-raised by the assert below
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        ACCEPTANCE[number] = (bool(ok), title, detail)
        assert ok, f"criterion {number} ({title}) failed: {detail}"

    return check


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, title, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}  [{detail}]")
