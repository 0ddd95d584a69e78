"""``sympbf`` command line.

    sympbf <convert|factor|eval|embed|verify> [-i FILE] [-o FILE] [--verify]
           [--tol-residual R] [--tol-int T] [--max-n N] [--flatten] [--at X]

One JSON document in (stdin or ``-i``), one JSON document out (stdout or
``-o``).  Exit codes: 0 ok, 1 parse/input error, 2 not symmetric, 3 root
finder failed, 4 enumeration limit exceeded, 5 verification mismatch.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import replace
from fractions import Fraction

from . import config
from ._rational import fraction_str
from .core import (BooleanPoint, eval_boolean, eval_real, hamming_profile, is_symmetric,
                   value_table)
from .errors import (DimensionError, EnumerationLimitError, NotSymmetricError,
                     RootFindingError)
from .factor import kernel_report, verify_factorization
from .models import embed_diagonal, flatten
from .oracle import brute_kernel_size, brute_symmetric_check, brute_values
from .serialize import (SpecError, complex_pair, diagonal_doc, parse_diagonal,
                        parse_function_spec, parse_rational, rationals, terms_doc)
from .transform import c_from_a

EXIT_OK, EXIT_PARSE, EXIT_ASYMMETRIC, EXIT_ROOTS, EXIT_LIMIT, EXIT_VERIFY = range(6)


class VerificationFailed(Exception):
    def __init__(self, report):
        super().__init__("verification failed")
        self.report = report


def _tolerances(args):
    tol = config.DEFAULT_TOLERANCES
    if args.tol_residual is not None:
        tol = replace(tol, residual=args.tol_residual)
    if args.tol_int is not None:
        tol = replace(tol, integer=args.tol_int)
    return tol


def _symmetric_block(spec):
    a = spec.symmetric()
    c = c_from_a(a)
    return a, c, {
        "symmetric": True,
        "a": rationals(a.a),
        "c": rationals(c.c),
        "hamming_profile": rationals(hamming_profile(a).values),
    }


def _factor_block(c, tol):
    fact, kernel = kernel_report(c, tol)
    if fact is None:
        factorization = {"degree": 0 if not kernel.whole_cube else None,
                         "note": "zero function; kernel is all of {0,1}^n" if kernel.whole_cube
                         else "no roots; empty kernel"}
    else:
        factorization = {
            "degree": fact.degree,
            "K": complex_pair(fact.K),
            "K_exact": fraction_str(fact.K),
            "roots": [complex_pair(z) for z in fact.roots],
            "exact_roots": rationals(fact.exact_roots),
        }
    frac_exact = [r for r in kernel.fractional_roots if isinstance(r, Fraction)]
    kernel_doc = {
        "boolean_roots": list(kernel.boolean_roots),
        "multiplicity": [list(p) for p in kernel.multiplicity],
        "fractional_roots": sorted((complex_pair(z) for z in kernel.fractional_roots)),
        "fractional_roots_exact": rationals(sorted(frac_exact)),
        "kernel_size": kernel.kernel_size,
        "hyperplanes": list(kernel.hyperplanes),
        "whole_cube": kernel.whole_cube,
    }
    return fact, kernel, factorization, kernel_doc


def _check(name, passed, **detail):
    return {"name": name, "passed": bool(passed), **detail}


def run_checks(spec, expect, tol, limit):
    """Oracle cross-checks for a parsed document; returns a list of check records."""
    f = spec.function
    checks = []
    brute = brute_values(f, limit)
    fast = value_table(f, limit)
    mismatches = sum(1 for u, v in zip(brute, fast) if u != v)
    checks.append(_check("values", mismatches == 0, mismatches=mismatches))

    symmetric = is_symmetric(f)
    if f.n <= 10:
        semantic = brute_symmetric_check(f)
        checks.append(_check("symmetry", semantic == symmetric,
                             coefficient=symmetric, semantic=semantic))
    if symmetric:
        a, c, _ = _symmetric_block(spec)
        profile = hamming_profile(a).values
        bad = [i for i, v in enumerate(brute) if v != profile[bin(i).count("1")]]
        checks.append(_check("hamming_profile", not bad, mismatches=len(bad)))
        fact, kernel = kernel_report(c, tol)
        oracle_size = sum(1 for v in brute if v == 0)
        checks.append(_check("kernel_size", oracle_size == kernel.kernel_size,
                             oracle=oracle_size, factored=kernel.kernel_size))
        if fact is not None:
            res = verify_factorization(fact, c)
            scale = max([1.0] + [abs(float(v)) for v in profile])
            checks.append(_check("factorization_residual",
                                 res.max_deviation <= tol.residual * scale,
                                 max_deviation=res.max_deviation, exact=res.exact))
    else:
        a = c = kernel = fact = None

    for key, want in (expect or {}).items():
        if key == "kernel_size":
            got = brute_kernel_size(f, limit)
            checks.append(_check("expect.kernel_size", got == want, expected=want, oracle=got))
        elif key in ("a", "c") and symmetric:
            vec = a.a if key == "a" else c.c
            want_q = [parse_rational(v, key) for v in want]
            checks.append(_check(f"expect.{key}", list(vec) == want_q,
                                 expected=rationals(want_q), got=rationals(vec)))
        elif key == "exact_roots" and symmetric:
            got = list(fact.exact_roots) if fact else []
            want_q = sorted(parse_rational(v, key) for v in want)
            checks.append(_check("expect.exact_roots", got == want_q,
                                 expected=rationals(want_q), got=rationals(got)))
        elif key == "K" and symmetric:
            got = fact.K if fact else None
            want_q = parse_rational(want, "K")
            checks.append(_check("expect.K", got == want_q, expected=fraction_str(want_q),
                                 got=None if got is None else fraction_str(got)))
        else:
            checks.append(_check(f"expect.{key}", False, error="unsupported or inapplicable key"))
    return checks


def _verification(spec, doc, tol, limit):
    checks = run_checks(spec, doc.get("expect"), tol, limit)
    return {"passed": all(ch["passed"] for ch in checks), "checks": checks}


def cmd_convert(doc, args):
    spec = parse_function_spec(doc)
    _, _, block = _symmetric_block(spec)
    report = {"command": "convert", "input": doc, "n": spec.n, **block}
    return _maybe_verify(report, spec, doc, args)


def cmd_factor(doc, args):
    spec = parse_function_spec(doc)
    tol = _tolerances(args)
    _, c, block = _symmetric_block(spec)
    _, _, factorization, kernel_doc = _factor_block(c, tol)
    report = {"command": "factor", "input": doc, "n": spec.n, **block,
              "factorization": factorization, "kernel": kernel_doc}
    return _maybe_verify(report, spec, doc, args)


def _parse_point(raw):
    if isinstance(raw, str):
        if set(raw) <= {"0", "1"}:
            return BooleanPoint.parse(raw)
        try:
            return [float(v) for v in raw.split(",")]
        except ValueError as exc:
            raise SpecError(f"cannot parse evaluation point {raw!r}") from exc
    if isinstance(raw, list):
        if all(type(v) is int and v in (0, 1) for v in raw):
            return BooleanPoint.parse(raw)
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in raw):
            return [float(v) for v in raw]
    raise SpecError(f"cannot parse evaluation point {raw!r}")


def cmd_eval(doc, args):
    raw = args.at if args.at is not None else doc.get("input")
    if raw is None:
        raise SpecError("eval needs a point: --at or an 'input' field")
    spec_doc = {k: v for k, v in doc.items() if k != "input"}
    spec = parse_function_spec(spec_doc)
    point = _parse_point(raw)
    f = spec.function
    if isinstance(point, BooleanPoint):
        value = eval_boolean(f, point)
        out = {"kind": "boolean", "point": str(point), "weight": point.weight,
               "value": fraction_str(value)}
    else:
        out = {"kind": "multilinear_extension", "point": point, "value": float(eval_real(f, point))}
    report = {"command": "eval", "input": doc, "n": spec.n, **out}
    return _maybe_verify(report, spec, doc, args)


def cmd_embed(doc, args):
    if args.flatten:
        d = parse_diagonal(doc)
        f = flatten(d)
        return {"command": "flatten", **terms_doc(f)}
    spec = parse_function_spec(doc)
    d = embed_diagonal(spec.function, args.max_n)
    return {"command": "embed", **diagonal_doc(d)}


def cmd_verify(doc, args):
    spec = parse_function_spec(doc)
    config.check_enumerable(spec.n, args.max_n)
    verification = _verification(spec, doc, _tolerances(args), args.max_n)
    report = {"command": "verify", "input": doc, "n": spec.n, **verification}
    if not verification["passed"]:
        raise VerificationFailed(report)
    return report


def _maybe_verify(report, spec, doc, args):
    if not args.verify:
        return report
    config.check_enumerable(spec.n, args.max_n)
    report["verification"] = _verification(spec, doc, _tolerances(args), args.max_n)
    if not report["verification"]["passed"]:
        raise VerificationFailed(report)
    return report


COMMANDS = {
    "convert": cmd_convert,
    "factor": cmd_factor,
    "eval": cmd_eval,
    "embed": cmd_embed,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sympbf",
        description="Transform, factor and kernel-classify symmetric pseudo-Boolean functions.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("-i", "--input", metavar="FILE", help="input JSON (default: stdin)")
    parser.add_argument("-o", "--output", metavar="FILE", help="output JSON (default: stdout)")
    parser.add_argument("--verify", action="store_true", help="add oracle cross-checks to the report")
    parser.add_argument("--tol-residual", type=float, default=None, metavar="R")
    parser.add_argument("--tol-int", type=float, default=None, metavar="T")
    parser.add_argument("--max-n", type=int, default=None, metavar="N",
                        help=f"enumeration limit (default {config.ENUMERATION_LIMIT})")
    parser.add_argument("--flatten", action="store_true",
                        help="embed: read a diagonal array and print its multilinear form")
    parser.add_argument("--at", default=None, metavar="X",
                        help="eval: bit string like 101 or comma-separated reals")
    return parser


def dumps(report) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def _write(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".sympbf-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _fail(code: int, message: str) -> int:
    print(f"sympbf: {message}", file=sys.stderr)
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.input:
            with open(args.input, encoding="utf-8") as fh:
                doc = json.load(fh)
        else:
            doc = json.load(sys.stdin)
    except (OSError, json.JSONDecodeError) as exc:
        return _fail(EXIT_PARSE, f"cannot read input: {exc}")

    try:
        report = COMMANDS[args.command](doc, args)
    except NotSymmetricError as exc:
        return _fail(EXIT_ASYMMETRIC, str(exc))
    except RootFindingError as exc:
        return _fail(EXIT_ROOTS, str(exc))
    except EnumerationLimitError as exc:
        return _fail(EXIT_LIMIT, str(exc))
    except VerificationFailed as exc:
        failed = [ch for ch in exc.report.get("verification", exc.report)["checks"] if not ch["passed"]]
        sys.stderr.write(dumps({"failed_checks": failed}))
        return EXIT_VERIFY
    except (SpecError, DimensionError, ValueError) as exc:
        return _fail(EXIT_PARSE, str(exc))

    _write(dumps(report), args.output)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
