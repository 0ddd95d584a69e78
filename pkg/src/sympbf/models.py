"""Example function families and the diagonal matrix embedding.

The Ising constructor puts ``J/2`` on every *unordered* pair, which is the
reading under which ``H = (J/4) (w + 4h/J - 1) w`` holds with ``w`` the
Hamming weight.  The second kernel level ``1 - 4h/J`` is Boolean-feasible
exactly when ``h/J = k/4`` for an integer ``k`` in ``[1 - n, 1]``; non-integer
``k`` only produces a fractional root.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import config
from ._rational import as_fraction
from .core import MultilinearPBF, from_symmetric, symmetric_from_profile, value_table
from .transform import SymmetricCoeffs

__all__ = [
    "IsingParams",
    "DiagonalEmbedding",
    "make_delta",
    "make_xor",
    "make_ising",
    "ising_kernel_condition",
    "embed_diagonal",
    "flatten",
]

BIT_ORDER = "x1-msb"


@dataclass(frozen=True)
class IsingParams:
    n: int
    J: Fraction
    h: Fraction = Fraction(0)

    def __post_init__(self):
        J, h = as_fraction(self.J), as_fraction(self.h)
        if J == 0:
            raise ValueError("coupling J must be nonzero")
        if self.n < 1:
            raise ValueError("Ising model needs n >= 1")
        object.__setattr__(self, "J", J)
        object.__setattr__(self, "h", h)

    @property
    def second_root(self) -> Fraction:
        return 1 - 4 * self.h / self.J


@dataclass(frozen=True)
class DiagonalEmbedding:
    """Diagonal of the ``2**n x 2**n`` operator ``sum_I f(I) |I><I|``.

    Index ``I`` is the input read as a binary number with x_1 most
    significant.
    """

    n: int
    diag: tuple[Fraction, ...]
    order: str = BIT_ORDER

    def __post_init__(self):
        vals = tuple(as_fraction(v) for v in self.diag)
        if len(vals) != 1 << self.n:
            raise ValueError(f"diagonal needs {1 << self.n} entries, got {len(vals)}")
        if self.order != BIT_ORDER:
            raise ValueError(f"unsupported bit order {self.order!r}")
        object.__setattr__(self, "diag", vals)

    def to_numpy(self) -> np.ndarray:
        return np.array([float(v) for v in self.diag])

    def matrix(self) -> np.ndarray:
        return np.diag(self.to_numpy())


def make_delta(k: int) -> MultilinearPBF:
    """1 on the all-zeros and all-ones inputs of ``k`` variables, else 0."""
    if k < 2:
        raise ValueError("delta needs k >= 2")
    profile = [1] + [0] * (k - 1) + [1]
    return from_symmetric(symmetric_from_profile(profile))


def make_xor(n: int) -> MultilinearPBF:
    """Parity of ``n`` bits, built from its Hamming profile."""
    if n < 1:
        raise ValueError("xor needs n >= 1")
    return from_symmetric(symmetric_from_profile([w % 2 for w in range(n + 1)]))


def make_ising(p: IsingParams) -> MultilinearPBF:
    a = [Fraction(0)] * (p.n + 1)
    a[1] = p.h
    if p.n >= 2:
        a[2] = p.J / 2
    return from_symmetric(SymmetricCoeffs(a))


def ising_kernel_condition(p: IsingParams) -> list[int]:
    """Integers ``k`` with ``h/J = k/4`` and ``1 - k`` a Hamming level.

    Returns ``[k]`` when the second root ``1 - 4h/J`` lies in ``{0..n}``
    (``k = 1`` coincides with the ever-present level 0), else ``[]``.
    """
    ratio = 4 * p.h / p.J
    if ratio.denominator != 1:
        return []
    k = int(ratio)
    return [k] if 1 - p.n <= k <= 1 else []


def embed_diagonal(f: MultilinearPBF, limit: int | None = None) -> DiagonalEmbedding:
    config.check_enumerable(f.n, limit)
    return DiagonalEmbedding(f.n, value_table(f, limit))


def flatten(d: DiagonalEmbedding) -> MultilinearPBF:
    """Multilinear polynomial agreeing with ``d`` on every Boolean input.

    Moebius inversion over the subset lattice,
    ``c(I) = sum_{J subset I} (-1)^{|I|-|J|} d[J]``.
    """
    coeffs = list(d.diag)
    size = len(coeffs)
    step = 1
    while step < size:
        for base in range(0, size, step << 1):
            for k in range(base + step, base + (step << 1)):
                coeffs[k] -= coeffs[k - step]
        step <<= 1
    return MultilinearPBF(d.n, dict(enumerate(coeffs)))
