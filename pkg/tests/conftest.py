import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from sympbf import MultilinearPBF, SymmetricCoeffs, from_symmetric, make_delta, make_xor

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

small_rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)


@st.composite
def sparse_functions(draw, max_n=6, max_terms=12):
    n = draw(st.integers(0, max_n))
    masks = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=max_terms))
    return MultilinearPBF(n, {m: draw(small_rationals) for m in masks})


@st.composite
def symmetric_coeffs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    return SymmetricCoeffs(draw(st.lists(small_rationals, min_size=n + 1, max_size=n + 1)))


@pytest.fixture
def delta3():
    return make_delta(3)


@pytest.fixture
def xor3():
    return make_xor(3)


def random_rational(rng: random.Random, lo=-10, hi=10, max_den=12) -> Fraction:
    q = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * q, hi * q), q)


# (criterion number, title, passed, detail) appended by test_acceptance.py
ACCEPTANCE_LOG: list[tuple[int, str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LOG:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, ok, detail in sorted(ACCEPTANCE_LOG):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num:2d}. {title}: {detail}")
