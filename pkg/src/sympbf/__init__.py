"""Symmetric pseudo-Boolean functions.

Represent functions {0,1}^n -> Q exactly as multilinear polynomials, move a
symmetric function between its elementary-symmetric coefficients ``a`` and
its power-of-Hamming-weight coefficients ``c`` (a Stirling-number change of
basis), factor the resulting univariate polynomial as
``K * prod (lambda_l - w)`` and read the kernel off the integer roots.

Modules
-------
core       MultilinearPBF, evaluation, symmetry, Hamming profiles
transform  Stirling matrix, ``a <-> c`` conversion
factor     root finding, FactoredForm, KernelReport
models     delta, XOR, Ising constructors; diagonal embedding / flattening
oracle     brute-force references used by tests and ``sympbf verify``
cli        the ``sympbf`` command
"""
from .config import DEFAULT_TOLERANCES, ENUMERATION_LIMIT, Tolerances
from .core import *  # noqa: F401,F403
from .errors import (DimensionError, EnumerationLimitError, NotSymmetricError,
                     RootFindingError)
from .factor import *  # noqa: F401,F403
from .models import *  # noqa: F401,F403
from .oracle import *  # noqa: F401,F403
from .transform import *  # noqa: F401,F403

__version__ = "0.1.0"
