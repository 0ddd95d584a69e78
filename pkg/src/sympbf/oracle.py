"""Exhaustive reference computations.

Kept deliberately naive and independent of the fast paths in ``core``,
``factor`` and ``models``: only the ``MultilinearPBF`` container and its raw
term map are used.  Everything here refuses ``n`` above the enumeration
limit rather than sampling.
"""
from __future__ import annotations

import math
from fractions import Fraction

from . import config
from .core import MultilinearPBF
from .errors import EnumerationLimitError

__all__ = [
    "brute_values",
    "brute_kernel_size",
    "brute_extrema",
    "brute_symmetric_check",
]


def brute_values(f: MultilinearPBF, limit: int | None = None) -> list[Fraction]:
    """Value at every input, summing the monomials that are 1 there.

    A monomial ``prod_{i in I} x_i`` is 1 at ``x`` exactly when ``I`` is a
    submask of ``x``.  Per input, either every stored term is tested or every
    submask of ``x`` is looked up, whichever list is shorter.
    """
    config.check_enumerable(f.n, limit)
    # integer numerators over a common denominator keep this exact and fast
    den = math.lcm(*(c.denominator for c in f.terms.values())) if f.terms else 1
    scaled = {m: c.numerator * (den // c.denominator) for m, c in f.terms.items()}
    items = list(scaled.items())
    out = []
    for x in range(1 << f.n):
        total = 0
        if len(items) <= 1 << bin(x).count("1"):
            for mask, coeff in items:
                if mask & x == mask:
                    total += coeff
        else:
            sub = x
            while True:
                total += scaled.get(sub, 0)
                if sub == 0:
                    break
                sub = (sub - 1) & x
        out.append(Fraction(total, den))
    return out


def brute_kernel_size(f: MultilinearPBF, limit: int | None = None) -> int:
    return sum(1 for v in brute_values(f, limit) if v == 0)


def brute_extrema(f: MultilinearPBF, limit: int | None = None) -> tuple[Fraction, Fraction]:
    vals = brute_values(f, limit)
    return min(vals), max(vals)


def brute_symmetric_check(f: MultilinearPBF, limit: int = 10) -> bool:
    """True iff the value table is constant on every Hamming-weight class."""
    if f.n > limit:
        raise EnumerationLimitError(f"symmetry check limited to n <= {limit}, got {f.n}")
    seen: dict[int, Fraction] = {}
    for index, v in enumerate(brute_values(f, limit)):
        w = bin(index).count("1")
        if seen.setdefault(w, v) != v:
            return False
    return True

