"""Shared limits and numeric tolerances.

Every function that enumerates {0,1}^n or compares floats takes an optional
per-call override; ``None`` means "use the value here".
"""
from __future__ import annotations

from dataclasses import dataclass

MAX_VARIABLES = 63
ENUMERATION_LIMIT = 24


@dataclass(frozen=True)
class Tolerances:
    step: float = 1e-13        # Durand-Kerner stopping criterion on max update
    residual: float = 1e-9     # |Q(root)| <= residual * max(1, max|coeff|)
    integer: float = 1e-6      # distance for matching a root to an integer level
    cluster: float = 1e-6      # roots closer than this are merged
    max_iter: int = 500


DEFAULT_TOLERANCES = Tolerances()


def enumeration_limit(limit: int | None = None) -> int:
    return ENUMERATION_LIMIT if limit is None else int(limit)


def check_enumerable(n: int, limit: int | None = None) -> None:
    from .errors import EnumerationLimitError

    lim = enumeration_limit(limit)
    if n > lim:
        raise EnumerationLimitError(
            f"refusing to enumerate 2^{n} inputs (limit is n <= {lim})")
