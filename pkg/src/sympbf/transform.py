"""Change of basis between the elementary-symmetric coefficients ``a`` and
the power-of-Hamming-weight coefficients ``c`` of a symmetric function.

With ``w = x_1 + ... + x_n`` and idempotent variables, ``w**j`` expands into
the elementary symmetric sums ``e_i`` with multiplicity ``i! * S(j, i)``, so

    a_0 = c_0,    a_i = sum_{j >= i} i! S(j, i) c_j      (1 <= i <= n).

The matrix ``B[i, j] = i! S(j, i)`` is upper triangular with diagonal
``i!``, hence invertible over the rationals by back-substitution.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ._rational import as_fraction

__all__ = [
    "SymmetricCoeffs",
    "SeriesCoeffs",
    "StirlingMatrix",
    "stirling2",
    "build_B",
    "a_from_c",
    "c_from_a",
    "eval_series",
]


def _coerce_vector(values) -> tuple[Fraction, ...]:
    vec = tuple(as_fraction(v) for v in values)
    if not vec:
        raise ValueError("coefficient vector must have length n + 1 >= 1")
    return vec


@dataclass(frozen=True)
class SymmetricCoeffs:
    """Coefficients ``(a_0, ..., a_n)`` of the elementary symmetric sums."""

    a: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", _coerce_vector(self.a))

    @property
    def n(self) -> int:
        return len(self.a) - 1

    def __len__(self):
        return len(self.a)

    def __getitem__(self, s):
        return self.a[s]


@dataclass(frozen=True)
class SeriesCoeffs:
    """Coefficients ``(c_0, ..., c_n)`` of powers of the Hamming weight.

    Trailing zeros are kept so that ``len(c) == n + 1``.
    """

    c: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", _coerce_vector(self.c))

    @property
    def n(self) -> int:
        return len(self.c) - 1

    def __len__(self):
        return len(self.c)

    def __getitem__(self, l):
        return self.c[l]


# Rows of S(j, .) grown on demand; guarded so concurrent first use is safe.
_S_ROWS: list[list[int]] = [[1]]
_S_LOCK = threading.Lock()


def _stirling_row(j: int) -> list[int]:
    if j < len(_S_ROWS):
        return _S_ROWS[j]
    with _S_LOCK:
        while len(_S_ROWS) <= j:
            prev = _S_ROWS[-1]
            m = len(_S_ROWS)
            row = [0] * (m + 1)
            for i in range(1, m + 1):
                row[i] = i * (prev[i] if i < m else 0) + prev[i - 1]
            _S_ROWS.append(row)
    return _S_ROWS[j]


def stirling2(j: int, i: int) -> int:
    """Stirling number of the second kind ``S(j, i)``.

    Uses ``S(j, i) = i S(j-1, i) + S(j-1, i-1)`` with ``S(0, 0) = 1``.

    >>> stirling2(4, 2)
    7
    """
    if j < 0 or i < 0:
        raise ValueError("stirling2 is defined for non-negative arguments")
    if i > j:
        return 0
    return _stirling_row(j)[i]


@dataclass(frozen=True)
class StirlingMatrix:
    """The ``n x n`` matrix ``B[i, j] = i! S(j, i)`` (stored 0-based)."""

    n: int
    entries: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        """1-based access matching ``B[i, j]``."""
        return self.entries[i - 1][j - 1]

    def to_numpy(self) -> np.ndarray:
        # object dtype keeps the integers exact for large n
        return np.array(self.entries, dtype=object)


@lru_cache(maxsize=64)
def build_B(n: int) -> StirlingMatrix:
    if n < 1:
        raise ValueError("build_B requires n >= 1")
    rows = tuple(
        tuple(math.factorial(i) * stirling2(j, i) if j >= i else 0
              for j in range(1, n + 1))
        for i in range(1, n + 1)
    )
    return StirlingMatrix(n, rows)


def a_from_c(c: SeriesCoeffs) -> SymmetricCoeffs:
    """Map series coefficients to symmetric coefficients, ``a = B c``."""
    n = c.n
    if n == 0:
        return SymmetricCoeffs(c.c)
    B = build_B(n).entries
    a = [c[0]]
    for i in range(n):
        row = B[i]
        a.append(sum((row[j] * c[j + 1] for j in range(i, n)), Fraction(0)))
    return SymmetricCoeffs(a)


def c_from_a(a: SymmetricCoeffs) -> SeriesCoeffs:
    """Solve ``B c = a`` by back-substitution from ``c_n`` down to ``c_1``."""
    n = a.n
    if n == 0:
        return SeriesCoeffs(a.a)
    B = build_B(n).entries
    c = [Fraction(0)] * (n + 1)
    c[0] = a[0]
    for i in range(n - 1, -1, -1):
        row = B[i]
        acc = a[i + 1] - sum((row[j] * c[j + 1] for j in range(i + 1, n)), Fraction(0))
        c[i + 1] = acc / row[i]
    return SeriesCoeffs(c)


def eval_series(c: SeriesCoeffs, weight: int) -> Fraction:
    """Value ``sum_l c_l * weight**l`` at an integer Hamming weight."""
    if not 0 <= weight <= c.n:
        raise ValueError(f"weight {weight} outside [0, {c.n}]")
    acc = Fraction(0)
    for coeff in reversed(c.c):
        acc = acc * weight + coeff
    return acc
