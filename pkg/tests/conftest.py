import random

import pytest
from hypothesis import settings, strategies as st

from klrc.cartan import cartan
from klrc.partitions import Charge

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@st.composite
def datum_and_k(draw, max_ell=6):
    ell = draw(st.integers(2, max_ell))
    return cartan(ell), draw(st.integers(0, ell))


@st.composite
def partitions(draw, max_size=9):
    n = draw(st.integers(0, max_size))
    parts = []
    while n:
        p = draw(st.integers(1, min(n, parts[-1] if parts else n)))
        parts.append(p)
        n -= p
    return tuple(parts)


@st.composite
def charges(draw, max_ell=4):
    ell = draw(st.integers(2, max_ell))
    return Charge(draw(st.integers(-3 * ell, 3 * ell)), ell)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
