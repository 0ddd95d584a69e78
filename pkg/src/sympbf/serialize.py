"""JSON wire formats.

A function document carries exactly one of

* ``{"n": 3, "terms": [{"vars": [1, 2], "coeff": "1/2"}, ...]}``
* ``{"symmetric_a": ["1", "-1", "1", "0"]}``
* ``{"series_c": ["1", "-3/2", "1/2", "0"]}``
* ``{"model": {"name": "delta" | "xor" | "ising", "params": {...}}}``

Rationals travel as ``"p/q"`` strings (integers are also accepted on input);
floats are written with ``repr``, which round-trips exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any

from ._rational import fraction_str
from .core import MultilinearPBF, from_symmetric, mask_to_subset, subset_to_mask, to_symmetric
from .models import BIT_ORDER, DiagonalEmbedding, IsingParams, make_delta, make_ising, make_xor
from .transform import SeriesCoeffs, SymmetricCoeffs, a_from_c

VARIANTS = ("terms", "symmetric_a", "series_c", "model")


class SpecError(ValueError):
    """Malformed function or diagonal document."""


def parse_rational(value, what="coefficient") -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise SpecError(f"{what} must be an integer or a 'p/q' string, got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise SpecError(f"cannot parse {what} {value!r}") from exc


def _rational_list(values, what) -> list[Fraction]:
    if not isinstance(values, list) or not values:
        raise SpecError(f"{what} must be a non-empty list")
    return [parse_rational(v, what) for v in values]


def _int_param(params: dict, key: str) -> int:
    v = params.get(key)
    if isinstance(v, bool) or not isinstance(v, int):
        raise SpecError(f"model parameter {key!r} must be an integer, got {v!r}")
    return v


@dataclass(frozen=True)
class ParsedSpec:
    """A parsed function document.

    Symmetric variants keep their coefficient vector so that large ``n`` never
    has to be expanded into monomials unless the function itself is needed.
    """

    kind: str
    n: int
    terms: MultilinearPBF | None = None
    a: SymmetricCoeffs | None = None
    model: dict | None = None

    @cached_property
    def function(self) -> MultilinearPBF:
        return self.terms if self.terms is not None else from_symmetric(self.a)

    def symmetric(self) -> SymmetricCoeffs:
        """Raises ``NotSymmetricError`` for non-symmetric term maps."""
        return self.a if self.a is not None else to_symmetric(self.terms)


def parse_function_spec(doc: Any) -> ParsedSpec:
    if not isinstance(doc, dict):
        raise SpecError("function spec must be a JSON object")
    present = [k for k in VARIANTS if k in doc]
    if len(present) != 1:
        raise SpecError(f"exactly one of {', '.join(VARIANTS)} is required, found {present or 'none'}")
    kind = present[0]
    n_given = doc.get("n")
    if n_given is not None and (isinstance(n_given, bool) or not isinstance(n_given, int) or n_given < 0):
        raise SpecError(f"n must be a non-negative integer, got {n_given!r}")

    if kind == "terms":
        if n_given is None:
            raise SpecError("'terms' requires an explicit n")
        entries = doc["terms"]
        if not isinstance(entries, list):
            raise SpecError("'terms' must be a list")
        out: dict[int, Fraction] = {}
        for entry in entries:
            if not isinstance(entry, dict) or "vars" not in entry or "coeff" not in entry:
                raise SpecError(f"term entries need 'vars' and 'coeff': {entry!r}")
            variables = entry["vars"]
            if (not isinstance(variables, list)
                    or any(isinstance(v, bool) or not isinstance(v, int) for v in variables)):
                raise SpecError(f"'vars' must be a list of integers: {variables!r}")
            if variables != sorted(set(variables)):
                raise SpecError(f"'vars' must be strictly increasing: {variables!r}")
            if variables and not (1 <= variables[0] and variables[-1] <= n_given):
                raise SpecError(f"variable index outside [1, {n_given}]: {variables!r}")
            mask = subset_to_mask(n_given, variables)
            if mask in out:
                raise SpecError(f"duplicate monomial {variables!r}")
            out[mask] = parse_rational(entry["coeff"])
        f = MultilinearPBF(n_given, out)
        return ParsedSpec("terms", n_given, terms=f)

    if kind in ("symmetric_a", "series_c"):
        vec = _rational_list(doc[kind], kind)
        if n_given is not None and n_given != len(vec) - 1:
            raise SpecError(f"n = {n_given} disagrees with {kind} of length {len(vec)}")
        a = SymmetricCoeffs(vec) if kind == "symmetric_a" else a_from_c(SeriesCoeffs(vec))
        return ParsedSpec(kind, len(vec) - 1, a=a)

    model = doc["model"]
    if not isinstance(model, dict) or "name" not in model:
        raise SpecError("'model' needs a 'name'")
    name, params = model["name"], model.get("params", {})
    if not isinstance(params, dict):
        raise SpecError("model 'params' must be an object")
    try:
        if name == "delta":
            f = make_delta(_int_param(params, "k"))
        elif name == "xor":
            f = make_xor(_int_param(params, "n"))
        elif name == "ising":
            p = IsingParams(_int_param(params, "n"),
                            parse_rational(params.get("J"), "J"),
                            parse_rational(params.get("h", 0), "h"))
            f = make_ising(p)
        else:
            raise SpecError(f"unknown model {name!r}")
    except SpecError:
        raise
    except ValueError as exc:
        raise SpecError(str(exc)) from exc
    if n_given is not None and n_given != f.n:
        raise SpecError(f"n = {n_given} disagrees with model size {f.n}")
    return ParsedSpec("model", f.n, terms=f, a=to_symmetric(f), model=model)


def rationals(values) -> list[str]:
    return [fraction_str(v) for v in values]


def terms_doc(f: MultilinearPBF) -> dict:
    return {
        "n": f.n,
        "terms": [
            {"vars": list(mask_to_subset(f.n, m)), "coeff": fraction_str(c)}
            for m, c in sorted(f.terms.items(), key=lambda kv: (kv[0].bit_count(), -kv[0]))
        ],
    }


def function_spec_doc(spec: ParsedSpec) -> dict:
    """Serialize a parsed document back to its own variant."""
    if spec.kind == "terms":
        return terms_doc(spec.terms)
    if spec.kind == "symmetric_a":
        return {"symmetric_a": rationals(spec.a.a)}
    if spec.kind == "series_c":
        from .transform import c_from_a

        return {"series_c": rationals(c_from_a(spec.a).c)}
    return {"model": spec.model}


def complex_pair(z) -> list[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def diagonal_doc(d: DiagonalEmbedding) -> dict:
    return {
        "n": d.n,
        "order": d.order,
        "diag": [int(v) if v.denominator == 1 else float(v) for v in d.diag],
        "diag_exact": rationals(d.diag),
    }


def parse_diagonal(doc: Any) -> DiagonalEmbedding:
    if not isinstance(doc, dict) or "diag" not in doc:
        raise SpecError("diagonal document needs a 'diag' array")
    order = doc.get("order", BIT_ORDER)
    if order != BIT_ORDER:
        raise SpecError(f"unsupported bit order {order!r}")
    if "diag_exact" in doc:
        values = [parse_rational(v, "diagonal entry") for v in doc["diag_exact"]]
    else:
        raw = doc["diag"]
        if not isinstance(raw, list):
            raise SpecError("'diag' must be a list")
        values = []
        for v in raw:
            if isinstance(v, bool) or not isinstance(v, (int, float, str)):
                raise SpecError(f"bad diagonal entry {v!r}")
            # decimal literal of a float, not its binary expansion
            values.append(Fraction(repr(v)) if isinstance(v, float) else parse_rational(v, "diagonal entry"))
    size = len(values)
    n = size.bit_length() - 1
    if size == 0 or 1 << n != size:
        raise SpecError(f"diagonal length {size} is not a power of two")
    if "n" in doc and doc["n"] != n:
        raise SpecError(f"n = {doc['n']} disagrees with diagonal length {size}")
    return DiagonalEmbedding(n, values)
