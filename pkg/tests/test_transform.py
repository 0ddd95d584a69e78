import itertools
import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sympbf import (SeriesCoeffs, SymmetricCoeffs, a_from_c, build_B, c_from_a, eval_boolean,
                    eval_series, from_symmetric, hamming_profile, stirling2, value_table)

from conftest import random_rational, small_rationals, symmetric_coeffs


def set_partitions(j):
    """Restricted growth strings: every set partition of {0..j-1} once."""
    def rec(prefix, top):
        if len(prefix) == j:
            yield prefix
            return
        for b in range(top + 2):
            yield from rec(prefix + [b], max(top, b))
    if j == 0:
        yield []
        return
    yield from rec([0], 0)


def stirling_by_enumeration(j, i):
    return sum(1 for p in set_partitions(j) if len(set(p)) == i)


def surjection_multinomial(j, i):
    """sum over compositions k_1..k_i > 0 of j of j!/prod k!."""
    total = 0
    for ks in itertools.product(range(1, j + 1), repeat=i):
        if sum(ks) == j:
            total += math.factorial(j) // math.prod(math.factorial(k) for k in ks)
    return total


@pytest.mark.parametrize("j, i, expected", [(3, 2, 3), (4, 2, 7), (5, 5, 1), (0, 0, 1), (4, 0, 0), (2, 3, 0)])
def test_stirling2_values(j, i, expected):
    assert stirling2(j, i) == expected


def test_stirling2_against_partition_enumeration():
    for j in range(8):
        for i in range(j + 1):
            assert stirling2(j, i) == stirling_by_enumeration(j, i)


def test_stirling2_rejects_negative():
    with pytest.raises(ValueError):
        stirling2(-1, 0)


def test_build_B_small():
    assert build_B(3).entries == ((1, 1, 1), (0, 2, 6), (0, 0, 6))
    assert build_B(1).entries == ((1,),)
    with pytest.raises(ValueError):
        build_B(0)


@pytest.mark.parametrize("n", range(1, 13))
def test_build_B_structure(n):
    B = build_B(n)
    for i in range(1, n + 1):
        assert B.entry(i, i) == math.factorial(i)
        for j in range(1, n + 1):
            if i > j:
                assert B.entry(i, j) == 0
            assert B.entry(i, j) >= 0


@pytest.mark.parametrize("n", range(1, 7))
def test_build_B_matches_multinomial_sum(n):
    B = build_B(n)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            assert B.entry(i, j) == surjection_multinomial(j, i)


def test_a_from_c_worked_examples():
    assert a_from_c(SeriesCoeffs([1, F(-3, 2), F(1, 2), 0])).a == (1, -1, 1, 0)
    assert a_from_c(SeriesCoeffs([0, F(10, 3), -3, F(2, 3)])).a == (0, 1, -2, 4)
    assert a_from_c(SeriesCoeffs([F(7, 2), 0, 0, 0])).a == (F(7, 2), 0, 0, 0)


def test_c_from_a_worked_examples():
    assert c_from_a(SymmetricCoeffs([1, -1, 1, 0])).c == (1, F(-3, 2), F(1, 2), 0)
    assert c_from_a(SymmetricCoeffs([0, 1, -2, 4])).c == (0, F(10, 3), -3, F(2, 3))


@pytest.mark.parametrize("n", [2, 3, 6])
def test_c_from_a_ising(n):
    J, h = F(3, 2), F(-1, 5)
    a = [0] * (n + 1)
    a[1], a[2] = h, J / 2
    c = c_from_a(SymmetricCoeffs(a))
    assert c.c == (0, h - J / 4, J / 4) + (0,) * (n - 2)


def test_eval_series_examples():
    delta_c = SeriesCoeffs([1, F(-3, 2), F(1, 2), 0])
    assert eval_series(delta_c, 1) == 0
    assert eval_series(delta_c, 0) == 1
    assert eval_series(SeriesCoeffs([F(5, 7), 3, 9]), 0) == F(5, 7)
    with pytest.raises(ValueError):
        eval_series(delta_c, 4)


@given(st.integers(0, 12).flatmap(lambda n: st.lists(small_rationals, min_size=n + 1, max_size=n + 1)))
def test_bijection(vec):
    c = SeriesCoeffs(vec)
    assert c_from_a(a_from_c(c)) == c
    a = SymmetricCoeffs(vec)
    assert a_from_c(c_from_a(a)) == a


@given(symmetric_coeffs(max_n=8))
def test_series_agrees_with_function(a):
    c = c_from_a(a)
    f = from_symmetric(a)
    table = value_table(f)
    for bits, v in enumerate(table):
        assert eval_series(c, bin(bits).count("1")) == v
    assert all(eval_series(c, w) == hamming_profile(a)[w] for w in range(a.n + 1))


def test_series_agrees_exhaustive_n10():
    rng = random.Random(7)
    a = SymmetricCoeffs([random_rational(rng) for _ in range(11)])
    c = c_from_a(a)
    f = from_symmetric(a)
    for bits in range(1 << 10):
        assert eval_boolean(f, format(bits, "010b")) == eval_series(c, bin(bits).count("1"))


def test_uniqueness_under_perturbation():
    rng = random.Random(11)
    for n in range(1, 9):
        c = [random_rational(rng) for _ in range(n + 1)]
        base = a_from_c(SeriesCoeffs(c))
        for l in range(n + 1):
            bumped = list(c)
            bumped[l] += F(1, 3)
            assert a_from_c(SeriesCoeffs(bumped)) != base
