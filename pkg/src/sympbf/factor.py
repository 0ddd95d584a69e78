"""Product factorization ``f = K * prod_l (lambda_l - w)`` of a symmetric
function written as a polynomial ``Q`` in the Hamming weight ``w``, and the
kernel classification that follows from its roots.

Roots are found in two stages.  Rational roots are extracted exactly
(integer levels first, then rational-root-theorem candidates) and deflated
out of ``Q``.  Whatever is left is solved in closed form for degree 1 and 2,
or by Durand-Kerner simultaneous iteration followed by one Newton step.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from ._rational import as_fraction, fraction_str
from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import RootFindingError
from .transform import SeriesCoeffs, eval_series

__all__ = [
    "UnivariatePoly",
    "FactoredForm",
    "KernelReport",
    "FactorizationResiduals",
    "to_univariate",
    "find_roots",
    "classify_kernel",
    "kernel_report",
    "verify_factorization",
    "residual_bound",
]

# Rational-root candidates are only enumerated when both the constant and the
# leading integer coefficient stay below this; divisor search is trial division.
_DIVISOR_SEARCH_LIMIT = 10**10


@dataclass(frozen=True)
class UnivariatePoly:
    """Polynomial with exact rational coefficients, ``coeffs[k]`` for ``X**k``.

    Trailing zeros are trimmed; the zero polynomial has ``coeffs == ()`` and
    ``degree is None``.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = [as_fraction(v) for v in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0.0
        for coeff in reversed(self.coeffs):
            acc = acc * x + (coeff if isinstance(acc, Fraction) else float(coeff))
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c:
                mono = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
                coeff = fraction_str(c)
                parts.append(coeff if not mono else (mono if c == 1 else "-" + mono if c == -1 else f"{coeff}*{mono}"))
        return " + ".join(parts).replace("+ -", "- ")


def to_univariate(c: SeriesCoeffs) -> UnivariatePoly:
    """Substitute the Hamming weight by a single variable ``X``."""
    return UnivariatePoly(c.c)


@dataclass(frozen=True)
class FactoredForm:
    """``Q(X) = K * prod_l (lambda_l - X)``.

    ``K = (-1)**degree * leading(Q)``, so the identity holds literally.
    Roots found exactly are kept as Fractions in ``exact_roots``; the rest are
    complex doubles in ``numeric_roots``.  Both are sorted and repeat roots by
    multiplicity.
    """

    K: Fraction
    exact_roots: tuple[Fraction, ...]
    numeric_roots: tuple[complex, ...]
    degree: int

    def __post_init__(self):
        if len(self.exact_roots) + len(self.numeric_roots) != self.degree:
            raise ValueError("root count must equal the degree")

    @property
    def roots(self) -> tuple[complex, ...]:
        """All roots as complex numbers, ordered by (real, imag)."""
        allr = [complex(r) for r in self.exact_roots] + list(self.numeric_roots)
        return tuple(sorted(allr, key=lambda z: (z.real, z.imag)))

    @property
    def is_exact(self) -> bool:
        return not self.numeric_roots

    def multiplicities(self) -> list[tuple[Fraction | complex, int]]:
        out: list[tuple[Fraction | complex, int]] = []
        for group in (self.exact_roots, self.numeric_roots):
            for r in group:
                if out and out[-1][0] == r:
                    out[-1] = (r, out[-1][1] + 1)
                else:
                    out.append((r, 1))
        return out

    def expand(self) -> np.ndarray:
        """Coefficients (lowest power first) of ``K * prod (lambda_l - X)``."""
        poly = np.array([1.0 + 0j])
        for lam in self.roots:
            # multiply by (lam - X)
            nxt = np.zeros(len(poly) + 1, dtype=complex)
            nxt[:-1] += lam * poly
            nxt[1:] -= poly
            poly = nxt
        return float(self.K) * poly

    def __call__(self, x):
        if self.is_exact and isinstance(x, (int, Fraction)):
            acc = self.K
            for r in self.exact_roots:
                acc *= r - x
            return acc
        acc = complex(self.K)
        for r in self.roots:
            acc *= r - x
        return acc


@dataclass(frozen=True)
class KernelReport:
    """Which Hamming-weight levels a symmetric function vanishes on.

    ``boolean_roots`` are the distinct integer levels in ``[0, n]``;
    ``multiplicity`` records how often each occurs among the roots.
    ``kernel_size`` counts each level once, ``C(n, level)`` points each.
    ``whole_cube`` marks the zero function, whose kernel is all of {0,1}^n.
    """

    n: int
    boolean_roots: tuple[int, ...]
    multiplicity: tuple[tuple[int, int], ...]
    fractional_roots: tuple[Fraction | complex, ...]
    kernel_size: int
    hyperplanes: tuple[str, ...]
    whole_cube: bool = False


@dataclass(frozen=True)
class FactorizationResiduals:
    """Per-weight deviation between the factored form and the exact series."""

    deviations: tuple[float, ...]
    max_deviation: float
    exact: bool


def residual_bound(q: UnivariatePoly, root: complex, tol: float) -> float:
    """Admissible ``|Q(root)|`` for a double-precision root.

    Equals ``tol * max(1, max|coeff|)`` for roots in the unit disc and grows
    with ``|root|**degree`` outside it, where the value of ``Q`` at the
    nearest double cannot be smaller than its rounding error.
    """
    scale = max(1.0, max(abs(float(c)) for c in q.coeffs))
    return tol * scale * max(1.0, abs(root)) ** q.degree


# --------------------------------------------------------------------------
# exact stage


def _integer_coeffs(coeffs: Sequence[Fraction]) -> list[int]:
    den = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    g = math.gcd(*ints)
    return [v // g for v in ints] if g else ints


def _is_root(ints: Sequence[int], p: int, q: int) -> bool:
    # sum a_k p^k q^(d-k) == 0 is Q(p/q) == 0 scaled by q^d
    d = len(ints) - 1
    acc = 0
    qpow = 1
    ppow = [1]
    for _ in range(d):
        ppow.append(ppow[-1] * p)
    for k in range(d, -1, -1):
        acc += ints[k] * ppow[k] * qpow
        qpow *= q
    return acc == 0


def _deflate(ints: list[int], p: int, q: int) -> list[int]:
    """Divide by ``(q X - p)``; exact since ``p/q`` is a root."""
    d = len(ints) - 1
    out = [0] * d
    # synthetic division from the top: ints[k] = q*out[k-1] - p*out[k]
    carry = 0
    for k in range(d, 0, -1):
        val = ints[k] + p * carry
        if val % q:
            raise ArithmeticError("inexact deflation")
        out[k - 1] = val // q
        carry = out[k - 1]
    return out


def _divisors(m: int) -> list[int]:
    m = abs(m)
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def _extract_rational_roots(coeffs: Sequence[Fraction], levels: int):
    """Pull every rational root out of ``coeffs`` that can be found cheaply.

    Returns the exact roots (with multiplicity) and the integer coefficients
    of the deflated remainder.
    """
    ints = _integer_coeffs(coeffs)
    roots: list[Fraction] = []
    while len(ints) > 1 and ints[0] == 0:
        roots.append(Fraction(0))
        ints = ints[1:]

    def take(p, q):
        nonlocal ints
        while len(ints) > 1 and _is_root(ints, p, q):
            ints = _deflate(ints, p, q)
            roots.append(Fraction(p, q))

    for level in range(1, levels + 1):
        take(level, 1)
    if len(ints) > 3:
        lead, const = ints[-1], ints[0]
        if abs(lead) <= _DIVISOR_SEARCH_LIMIT and abs(const) <= _DIVISOR_SEARCH_LIMIT:
            for q in _divisors(lead):
                for p in _divisors(const):
                    if math.gcd(p, q) != 1:
                        continue
                    for sp in (p, -p):
                        if len(ints) <= 3:
                            break
                        take(sp, q)
    return roots, ints


def _exact_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _solve_small(ints: list[int]):
    """Closed forms for degree 1 and 2; returns (exact, numeric)."""
    if len(ints) == 2:
        return [Fraction(-ints[0], ints[1])], []
    c0, b, a = (Fraction(v) for v in ints)
    disc = b * b - 4 * a * c0
    s = _exact_sqrt(disc)
    if s is not None:
        return sorted([(-b - s) / (2 * a), (-b + s) / (2 * a)]), []
    af, bf, cf = float(a), float(b), float(c0)
    sq = cmath.sqrt(float(disc))
    # avoid cancellation: q = -(b + sign(b) sqrt(disc)) / 2
    qv = -0.5 * (bf + (sq if bf >= 0 else -sq))
    if qv == 0:
        return [], [0j, 0j]
    return [], [qv / af, cf / qv]


# --------------------------------------------------------------------------
# numeric stage


def _horner(poly_hi: np.ndarray, z: np.ndarray) -> np.ndarray:
    acc = np.zeros_like(z)
    for coeff in poly_hi:
        acc = acc * z + coeff
    return acc


def _durand_kerner(ints: list[int], tol: Tolerances) -> np.ndarray:
    """All roots of the integer polynomial ``ints`` (lowest power first)."""
    d = len(ints) - 1
    lead = float(ints[-1])
    monic = np.array([float(v) / lead for v in reversed(ints)], dtype=complex)
    # Fujiwara-style radius: every root lies within 2 max |a_k|^(1/(d-k))
    radius = 2.0 * max(abs(monic[k]) ** (1.0 / k) for k in range(1, d + 1))
    radius = max(radius, 1e-3)
    angles = 2.0 * np.pi * np.arange(d) / d + 0.4
    z = radius * np.exp(1j * angles)
    absmonic = np.abs(monic)
    eps = np.finfo(float).eps
    best, best_res = z.copy(), np.inf
    for _ in range(tol.max_iter):
        pz = _horner(monic, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        denom = diff.prod(axis=1)
        denom[denom == 0] = eps
        w = pz / denom
        z = z - w
        res = np.abs(_horner(monic, z))
        noise = 8 * d * eps * _horner(absmonic, np.abs(z))
        if res.max() < best_res:
            best, best_res = z.copy(), res.max()
        step_small = np.all(np.abs(w) < tol.step * np.maximum(1.0, np.abs(z)))
        if step_small or np.all(res <= noise):
            return z
    res = np.abs(_horner(monic, best))
    raise RootFindingError(
        f"Durand-Kerner did not converge in {tol.max_iter} iterations",
        iterates=best.tolist(),
        residuals=res.tolist(),
    )


def _newton_polish(ints: list[int], z: np.ndarray) -> np.ndarray:
    coeffs = np.array([float(v) for v in reversed(ints)], dtype=complex)
    dcoeffs = np.polyder(coeffs)
    pz = _horner(coeffs, z)
    dpz = _horner(dcoeffs, z)
    out = z.copy()
    ok = dpz != 0
    cand = z[ok] - pz[ok] / dpz[ok]
    better = np.abs(_horner(coeffs, cand)) < np.abs(pz[ok])
    out[np.flatnonzero(ok)[better]] = cand[better]
    return out


def _merge_clusters(z: Sequence[complex], radius: float) -> list[complex]:
    remaining = list(z)
    out: list[complex] = []
    while remaining:
        seed = remaining.pop(0)
        group = [seed]
        changed = True
        while changed:
            changed = False
            for r in list(remaining):
                if any(abs(r - g) < radius for g in group):
                    group.append(r)
                    remaining.remove(r)
                    changed = True
        centre = sum(group) / len(group)
        out.extend([centre] * len(group))
    return out


def _clean(z: complex) -> complex:
    z = complex(z)
    if abs(z.imag) <= 1e-12 * max(1.0, abs(z)):
        z = complex(z.real, 0.0)
    return z


def find_roots(q: UnivariatePoly, levels: int | None = None,
               tol: Tolerances | None = None) -> FactoredForm:
    """Factor ``Q(X) = K * prod (lambda_l - X)``.

    ``levels`` bounds the integer Hamming levels ``0..levels`` probed
    exactly before anything else (defaults to the degree).

    >>> f = find_roots(UnivariatePoly([1, Fraction(-3, 2), Fraction(1, 2)]))
    >>> f.K, f.exact_roots
    (Fraction(1, 2), (Fraction(1, 1), Fraction(2, 1)))
    """
    tol = tol or DEFAULT_TOLERANCES
    if q.is_zero:
        raise ValueError("the zero polynomial has no factorization")
    d = q.degree
    if d < 1:
        raise ValueError("a constant polynomial has no roots")
    K = q.leading * (-1) ** d
    levels = d if levels is None else max(int(levels), 0)

    exact, ints = _extract_rational_roots(q.coeffs, levels)
    numeric: list[complex] = []
    if len(ints) in (2, 3):
        more_exact, numeric = _solve_small(ints)
        exact += more_exact
    elif len(ints) > 3:
        z = _durand_kerner(ints, tol)
        z = _newton_polish(ints, z)
        numeric = _merge_clusters([complex(v) for v in z], tol.cluster)

    numeric = [_clean(z) for z in numeric]
    for z in numeric:
        res = abs(q(z))
        if not res <= residual_bound(q, z, tol.residual):
            raise RootFindingError(
                f"root {z} leaves residual {res:.3e}",
                iterates=numeric,
                residuals=[abs(q(v)) for v in numeric],
            )
    return FactoredForm(
        K=K,
        exact_roots=tuple(sorted(exact)),
        numeric_roots=tuple(sorted(numeric, key=lambda z: (z.real, z.imag))),
        degree=d,
    )


def _hyperplane(level: int) -> str:
    return f"sum x_l = {level}"


def classify_kernel(fact: FactoredForm, n: int, tol: Tolerances | None = None) -> KernelReport:
    """Split roots into Boolean-feasible integer levels in ``[0, n]`` and
    fractional (or complex) roots."""
    tol = tol or DEFAULT_TOLERANCES
    counts: dict[int, int] = {}
    fractional: list[Fraction | complex] = []
    for r in fact.exact_roots:
        if r.denominator == 1 and 0 <= r <= n:
            counts[int(r)] = counts.get(int(r), 0) + 1
        else:
            fractional.append(r)
    for z in fact.numeric_roots:
        level = round(z.real)
        if abs(z - level) <= tol.integer and abs(z.imag) <= tol.integer and 0 <= level <= n:
            counts[level] = counts.get(level, 0) + 1
        else:
            fractional.append(z)
    levels = tuple(sorted(counts))
    return KernelReport(
        n=n,
        boolean_roots=levels,
        multiplicity=tuple((lv, counts[lv]) for lv in levels),
        fractional_roots=tuple(fractional),
        kernel_size=sum(math.comb(n, lv) for lv in levels),
        hyperplanes=tuple(_hyperplane(lv) for lv in levels),
    )


def kernel_report(c: SeriesCoeffs, tol: Tolerances | None = None) -> tuple[FactoredForm | None, KernelReport]:
    """Factor and classify in one go, including the degenerate cases.

    The zero function yields ``whole_cube=True`` and no factorization; a
    nonzero constant yields an empty kernel and no factorization.
    """
    n = c.n
    q = to_univariate(c)
    if q.is_zero:
        return None, KernelReport(n, tuple(range(n + 1)), (), (), 2 ** n,
                                  ("all of {0,1}^n",), whole_cube=True)
    if q.degree == 0:
        return None, KernelReport(n, (), (), (), 0, ())
    fact = find_roots(q, levels=n, tol=tol)
    return fact, classify_kernel(fact, n, tol)


def verify_factorization(fact: FactoredForm, c: SeriesCoeffs) -> FactorizationResiduals:
    """Compare the factored form against the exact series at every weight."""
    devs = []
    for w in range(c.n + 1):
        target = eval_series(c, w)
        if fact.is_exact:
            devs.append(abs(fact(w) - target))
        else:
            devs.append(abs(fact(w) - float(target)))
    return FactorizationResiduals(
        deviations=tuple(float(d) for d in devs),
        max_deviation=float(max(devs)) if devs else 0.0,
        exact=fact.is_exact,
    )
