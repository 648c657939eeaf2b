import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from clifflame.scalars import QuadScalar

ACCEPTANCE_RESULTS = []


def record_acceptance(number, title, ok, detail=""):
    ACCEPTANCE_RESULTS.append((number, title, ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(ACCEPTANCE_RESULTS, key=lambda r: r[0]):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)


small_fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30)


@st.composite
def quad_scalars(draw):
    return QuadScalar(draw(small_fractions), draw(small_fractions))


@pytest.fixture
def rng():
    return random.Random(20240531)


def frac(s):
    return Fraction(s)
