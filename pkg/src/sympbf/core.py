"""Multilinear representation of pseudo-Boolean functions.

A function f: {0,1}^n -> R is stored as its unique multilinear polynomial
``sum_I c(I) prod_{i in I} x_i``.  Subsets ``I`` of ``{1, ..., n}`` are
bitmasks with **x_1 as the most significant bit**: variable ``i`` lives in
bit ``n - i``.  The same order indexes Boolean points and value tables, so a
bitmask read as a binary string ``x_1 x_2 ... x_n`` is the input itself.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from . import config
from ._rational import as_fraction, fraction_str
from .errors import DimensionError, NotSymmetricError
from .transform import SymmetricCoeffs

__all__ = [
    "MultilinearPBF",
    "BooleanPoint",
    "HammingProfile",
    "var_bit",
    "subset_to_mask",
    "mask_to_subset",
    "eval_boolean",
    "eval_real",
    "value_table",
    "is_symmetric",
    "symmetry_witness",
    "to_symmetric",
    "from_symmetric",
    "hamming_profile",
    "symmetric_from_profile",
    "affine_part",
    "is_almost_positive",
    "is_nonnegative",
]


def var_bit(n: int, i: int) -> int:
    """Bit value of 1-based variable ``i`` among ``n``."""
    if not 1 <= i <= n:
        raise ValueError(f"variable index {i} outside [1, {n}]")
    return 1 << (n - i)


def subset_to_mask(n: int, variables: Iterable[int]) -> int:
    mask = 0
    for i in variables:
        mask |= var_bit(n, i)
    return mask


def mask_to_subset(n: int, mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(1, n + 1) if mask >> (n - i) & 1)


@dataclass(frozen=True, eq=False)
class MultilinearPBF:
    """Sparse multilinear polynomial over ``n`` Boolean variables.

    Zero coefficients are dropped on construction, so two instances compare
    equal exactly when they define the same function.
    """

    n: int
    terms: Mapping[int, Fraction]

    def __post_init__(self):
        n = int(self.n)
        if not 0 <= n <= config.MAX_VARIABLES:
            raise ValueError(f"n must lie in [0, {config.MAX_VARIABLES}], got {n}")
        full = 1 << n
        clean = {}
        for mask, coeff in dict(self.terms).items():
            mask = int(mask)
            if not 0 <= mask < full:
                raise ValueError(f"subset mask {mask:#x} does not fit in {n} bits")
            q = as_fraction(coeff)
            if q:
                clean[mask] = clean.get(mask, Fraction(0)) + q
                if not clean[mask]:
                    del clean[mask]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", MappingProxyType(dict(sorted(clean.items()))))

    @classmethod
    def from_subsets(cls, n: int, terms: Mapping[Iterable[int], object]) -> "MultilinearPBF":
        """Build from ``{(1, 2): 3, (): 1}``-style maps with 1-based indices."""
        out: dict[int, Fraction] = {}
        for variables, coeff in terms.items():
            mask = subset_to_mask(n, variables)
            out[mask] = out.get(mask, Fraction(0)) + as_fraction(coeff)
        return cls(n, out)

    @classmethod
    def zero(cls, n: int) -> "MultilinearPBF":
        return cls(n, {})

    @classmethod
    def constant(cls, n: int, value) -> "MultilinearPBF":
        return cls(n, {0: value})

    @property
    def degree(self) -> int:
        """Largest monomial size; -1 for the zero function."""
        return max((m.bit_count() for m in self.terms), default=-1)

    def coefficient(self, variables: Iterable[int]) -> Fraction:
        return self.terms.get(subset_to_mask(self.n, variables), Fraction(0))

    def subsets(self) -> dict[tuple[int, ...], Fraction]:
        return {mask_to_subset(self.n, m): c for m, c in self.terms.items()}

    def __eq__(self, other):
        if not isinstance(other, MultilinearPBF):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    def _check_same_n(self, other: "MultilinearPBF"):
        if other.n != self.n:
            raise DimensionError(f"variable counts differ: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, MultilinearPBF):
            return NotImplemented
        self._check_same_n(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return MultilinearPBF(self.n, out)

    def __neg__(self):
        return MultilinearPBF(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultilinearPBF):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, MultilinearPBF):
            return NotImplemented
        s = as_fraction(scalar)
        return MultilinearPBF(self.n, {m: s * c for m, c in self.terms.items()})

    __rmul__ = __mul__

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mask, c in sorted(self.terms.items(), key=lambda kv: (kv[0].bit_count(), -kv[0])):
            mono = "*".join(f"x{i}" for i in mask_to_subset(self.n, mask))
            coeff = fraction_str(c)
            parts.append(coeff if not mono else (mono if c == 1 else "-" + mono if c == -1 else f"{coeff}*{mono}"))
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class BooleanPoint:
    """A point of {0,1}^n; ``bits`` uses the x_1-most-significant order."""

    n: int
    bits: int

    def __post_init__(self):
        if self.n < 0 or not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits {self.bits} do not fit in {self.n} variables")

    @classmethod
    def parse(cls, value) -> "BooleanPoint":
        """Accept ``"101"`` or a sequence such as ``[1, 0, 1]``."""
        if isinstance(value, BooleanPoint):
            return value
        if isinstance(value, str):
            s = value.strip()
            if set(s) - {"0", "1"}:
                raise ValueError(f"not a bit string: {value!r}")
            return cls(len(s), int(s, 2) if s else 0)
        seq = list(value)
        if any(v not in (0, 1) for v in seq):
            raise ValueError(f"not a 0/1 sequence: {value!r}")
        bits = 0
        for v in seq:
            bits = bits << 1 | int(v)
        return cls(len(seq), bits)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(self.bits >> (self.n - i) & 1 for i in range(1, self.n + 1))

    def __str__(self):
        return format(self.bits, f"0{self.n}b") if self.n else ""


@dataclass(frozen=True)
class HammingProfile:
    """Values of a symmetric function by Hamming weight, ``values[w]``."""

    n: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(as_fraction(v) for v in self.values)
        if len(vals) != self.n + 1:
            raise ValueError(f"profile needs {self.n + 1} values, got {len(vals)}")
        object.__setattr__(self, "values", vals)

    def __getitem__(self, w):
        return self.values[w]


def eval_boolean(f: MultilinearPBF, x) -> Fraction:
    """Exact value of ``f`` at a Boolean point (sum of coefficients of the
    monomials contained in the support of ``x``)."""
    x = BooleanPoint.parse(x)
    if x.n != f.n:
        raise DimensionError(f"point has {x.n} bits, function has {f.n} variables")
    bits = x.bits
    return sum((c for m, c in f.terms.items() if m & bits == m), Fraction(0))


def eval_real(f: MultilinearPBF, r: Sequence) -> float | Fraction:
    """Multilinear extension of ``f`` at a real vector.

    Exact (``Fraction``) when every entry of ``r`` is an int or Fraction,
    float otherwise.
    """
    r = list(r)
    if len(r) != f.n:
        raise DimensionError(f"vector has length {len(r)}, function has {f.n} variables")
    exact = all(isinstance(v, (int, Fraction)) and not isinstance(v, bool) for v in r)
    vals = r if exact else [float(v) for v in r]
    acc = Fraction(0) if exact else 0.0
    for mask, c in f.terms.items():
        term = c if exact else float(c)
        for i in mask_to_subset(f.n, mask):
            term *= vals[i - 1]
        acc += term
    return acc


def value_table(f: MultilinearPBF, limit: int | None = None) -> tuple[Fraction, ...]:
    """All ``2**n`` values, indexed by bitmask, via the subset-sum (zeta)
    transform on integers scaled by the common denominator."""
    config.check_enumerable(f.n, limit)
    den = math.lcm(*(c.denominator for c in f.terms.values())) if f.terms else 1
    table = [0] * (1 << f.n)
    for m, c in f.terms.items():
        table[m] = c.numerator * (den // c.denominator)
    size = len(table)
    step = 1
    while step < size:
        for base in range(0, size, step << 1):
            for k in range(base + step, base + (step << 1)):
                table[k] += table[k - step]
        step <<= 1
    return tuple(Fraction(v, den) for v in table)


def symmetry_witness(f: MultilinearPBF):
    """Two equal-size subsets with different coefficients, or ``None``."""
    by_size: dict[int, list[int]] = {}
    for m in f.terms:
        by_size.setdefault(m.bit_count(), []).append(m)
    for s, masks in sorted(by_size.items()):
        first = masks[0]
        for m in masks[1:]:
            if f.terms[m] != f.terms[first]:
                return mask_to_subset(f.n, first), mask_to_subset(f.n, m)
        if len(masks) < math.comb(f.n, s):
            present = set(masks)
            for combo in itertools.combinations(range(1, f.n + 1), s):
                if subset_to_mask(f.n, combo) not in present:
                    return mask_to_subset(f.n, first), combo
    return None


def is_symmetric(f: MultilinearPBF) -> bool:
    """Coefficient criterion: every monomial of a given size carries the same
    coefficient (absent monomials count as zero)."""
    return symmetry_witness(f) is None


def to_symmetric(f: MultilinearPBF) -> SymmetricCoeffs:
    witness = symmetry_witness(f)
    if witness is not None:
        I, J = witness
        raise NotSymmetricError(
            f"not symmetric: c{set(I) or '{}'} = {fraction_str(f.coefficient(I))} "
            f"but c{set(J) or '{}'} = {fraction_str(f.coefficient(J))}",
            witness=witness,
        )
    a = [Fraction(0)] * (f.n + 1)
    for m, c in f.terms.items():
        a[m.bit_count()] = c
    return SymmetricCoeffs(a)


def from_symmetric(a: SymmetricCoeffs) -> MultilinearPBF:
    n = a.n
    terms = {}
    for s, coeff in enumerate(a.a):
        if coeff:
            for combo in itertools.combinations(range(n), s):
                terms[sum(1 << b for b in combo)] = coeff
    return MultilinearPBF(n, terms)


def hamming_profile(a: SymmetricCoeffs) -> HammingProfile:
    """``values[w] = sum_s a_s * C(w, s)``: a weight-``w`` input contains
    ``C(w, s)`` monomials of size ``s``."""
    vals = [sum((a[s] * math.comb(w, s) for s in range(w + 1)), Fraction(0))
            for w in range(a.n + 1)]
    return HammingProfile(a.n, vals)


def symmetric_from_profile(profile: HammingProfile | Sequence) -> SymmetricCoeffs:
    """Inverse of :func:`hamming_profile` by binomial inversion."""
    vals = profile.values if isinstance(profile, HammingProfile) else [as_fraction(v) for v in profile]
    return SymmetricCoeffs(
        sum(((-1) ** (s - w) * math.comb(s, w) * vals[w] for w in range(s + 1)), Fraction(0))
        for s in range(len(vals))
    )


def affine_part(f: MultilinearPBF) -> MultilinearPBF:
    return MultilinearPBF(f.n, {m: c for m, c in f.terms.items() if m.bit_count() <= 1})


def is_almost_positive(f: MultilinearPBF) -> bool:
    """All coefficients of degree >= 2 are non-negative."""
    return all(c >= 0 for m, c in f.terms.items() if m.bit_count() >= 2)


def is_nonnegative(f: MultilinearPBF, limit: int | None = None) -> bool:
    return min(value_table(f, limit)) >= 0
