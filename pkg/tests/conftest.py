from __future__ import annotations

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from matraseg import BinaryImage, format_regions

settings.register_profile(
    "default",
    max_examples=200,
    deadline=None,
    database=None,
    # the acceptance harness replays class-based properties on its own instance
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large, HealthCheck.differing_executors],
)
settings.load_profile("default")

ACCEPTANCE_LOG: list[tuple[str, bool, str]] = []


@st.composite
def ink_arrays(draw, min_side=1, max_side=16):
    h = draw(st.integers(min_side, max_side))
    w = draw(st.integers(min_side, max_side))
    return draw(hnp.arrays(np.bool_, (h, w)))


@st.composite
def binary_images(draw, min_side=1, max_side=16):
    return BinaryImage(draw(ink_arrays(min_side, max_side)))


@st.composite
def words_with_upper_ink(draw):
    h = draw(st.integers(4, 24))
    w = draw(st.integers(1, 12))
    ink = draw(hnp.arrays(np.bool_, (h, w)))
    regions = format_regions(h)
    if not ink[: regions.r2[1] + 1].any():
        ink = ink.copy()
        ink[draw(st.integers(0, regions.r2[1])), draw(st.integers(0, w - 1))] = True
    return BinaryImage(ink)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def acceptance():
    """Record one criterion's verdict for the end-of-run summary."""

    def record(name: str, passed: bool, detail: str = ""):
        ACCEPTANCE_LOG.append((name, bool(passed), detail))
        print(f"[{'PASS' if passed else 'FAIL'}] {name}: {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LOG:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE_LOG:
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {name}: {detail}")
