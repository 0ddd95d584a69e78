import io
import json
import sys
from fractions import Fraction as F

import pytest

from sympbf import cli
from sympbf.serialize import SpecError, function_spec_doc, parse_diagonal, parse_function_spec

DELTA3 = {"model": {"name": "delta", "params": {"k": 3}}}
XOR3 = {"model": {"name": "xor", "params": {"n": 3}}}


def run(cmd, doc, *flags, tmp_path=None, monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(doc)))
    code = cli.main([cmd, *flags])
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


@pytest.fixture
def sympbf(monkeypatch, capsys):
    def _run(cmd, doc, *flags):
        return run(cmd, doc, *flags, monkeypatch=monkeypatch, capsys=capsys)
    return _run


def test_convert_delta(sympbf):
    code, rep, _ = sympbf("convert", DELTA3)
    assert code == 0
    assert rep["c"] == ["1", "-3/2", "1/2", "0"]
    assert rep["a"] == ["1", "-1", "1", "0"]
    assert rep["hamming_profile"] == ["1", "0", "0", "1"]


def test_convert_constant_and_xor(sympbf):
    code, rep, _ = sympbf("convert", {"symmetric_a": ["5", "0", "0"]})
    assert code == 0 and rep["a"] == rep["c"] == ["5", "0", "0"]
    _, rep, _ = sympbf("convert", XOR3)
    assert rep["a"] == ["0", "1", "-2", "4"]


def test_convert_non_symmetric_exit_2(sympbf):
    doc = {"n": 2, "terms": [{"vars": [1], "coeff": 1}, {"vars": [2], "coeff": "2"}]}
    code, rep, err = sympbf("convert", doc)
    assert code == 2 and rep is None
    assert "{1}" in err and "{2}" in err


@pytest.mark.parametrize("doc", [
    {"n": 2},
    {"symmetric_a": ["1"], "series_c": ["1"]},
    {"n": 2, "terms": [{"vars": [3], "coeff": 1}]},
    {"n": 2, "terms": [{"vars": [2, 1], "coeff": 1}]},
    {"symmetric_a": ["1/0"]},
    {"symmetric_a": [0.5]},
    {"model": {"name": "torus", "params": {}}},
    {"model": {"name": "ising", "params": {"n": 3, "J": "0"}}},
])
def test_parse_errors_exit_1(sympbf, doc):
    code, _, err = sympbf("convert", doc)
    assert code == 1 and err


def test_bad_json_exit_1(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO("{not json"))
    assert cli.main(["convert"]) == 1


def test_factor_delta(sympbf):
    code, rep, _ = sympbf("factor", DELTA3)
    assert code == 0
    fac = rep["factorization"]
    assert fac["exact_roots"] == ["1", "2"] and fac["K_exact"] == "1/2"
    assert fac["roots"] == [[1.0, 0.0], [2.0, 0.0]]
    assert rep["kernel"]["kernel_size"] == 6


def test_factor_ising(sympbf):
    doc = {"model": {"name": "ising", "params": {"n": 5, "J": "1", "h": "0"}}}
    _, rep, _ = sympbf("factor", doc)
    assert rep["factorization"]["exact_roots"] == ["0", "1"]
    assert rep["factorization"]["K_exact"] == "1/4"


def test_factor_xor_fractional(sympbf):
    _, rep, _ = sympbf("factor", XOR3)
    assert rep["kernel"]["fractional_roots_exact"] == ["5/2"]
    assert rep["kernel"]["boolean_roots"] == [0, 2]


def test_factor_constant(sympbf):
    code, rep, _ = sympbf("factor", {"symmetric_a": ["3", "0", "0"]})
    assert code == 0
    assert rep["factorization"]["note"] == "no roots; empty kernel"
    assert rep["kernel"]["kernel_size"] == 0


def test_factor_root_failure_exit_3(sympbf):
    code, _, err = sympbf("factor", {"series_c": ["1", "2", "3", "4", "5", "7"]}, "--tol-residual", "1e-300")
    assert code == 3 and "residual" in err


def test_factor_tolerance_flags(sympbf):
    # X^2 - 4X + (4 - 2e-8): irrational roots 2 +- 1.41e-4
    doc = {"series_c": ["199999999/50000000", "-4", "1"]}
    _, rep, _ = sympbf("factor", doc)
    assert rep["kernel"]["kernel_size"] == 0
    _, rep, _ = sympbf("factor", doc, "--tol-int", "0.01")
    assert rep["kernel"]["boolean_roots"] == [2]
    assert rep["kernel"]["multiplicity"] == [[2, 2]]
    assert rep["kernel"]["kernel_size"] == 1


def test_eval(sympbf):
    code, rep, _ = sympbf("eval", DELTA3, "--at", "111")
    assert code == 0 and rep["value"] == "1" and rep["kind"] == "boolean"
    _, rep, _ = sympbf("eval", {**DELTA3, "input": [0.5, 0.5, 0.5]})
    assert rep["kind"] == "multilinear_extension"
    assert 0 <= rep["value"] <= 1 and rep["value"] == pytest.approx(0.25)
    _, rep, _ = sympbf("eval", {"symmetric_a": ["7/3", "1", "-1"]}, "--at", "00")
    assert rep["value"] == "7/3"


def test_eval_length_mismatch_exit_1(sympbf):
    code, _, _ = sympbf("eval", DELTA3, "--at", "10")
    assert code == 1


def test_embed_and_flatten(sympbf):
    _, rep, _ = sympbf("embed", DELTA3)
    assert rep["diag"] == [1, 0, 0, 0, 0, 0, 0, 1] and rep["order"] == "x1-msb"
    _, rep, _ = sympbf("embed", {"model": {"name": "xor", "params": {"n": 2}}})
    assert rep["diag"] == [0, 1, 1, 0]
    _, back, _ = sympbf("embed", {"diag": [0, 1, 1, 0], "order": "x1-msb"}, "--flatten")
    assert parse_function_spec({"n": back["n"], "terms": back["terms"]}).function == \
        parse_function_spec({"model": {"name": "xor", "params": {"n": 2}}}).function


def test_embed_round_trip_fractions(sympbf):
    doc = {"n": 2, "terms": [{"vars": [], "coeff": "1/3"}, {"vars": [1, 2], "coeff": "-5/7"}]}
    _, emb, _ = sympbf("embed", doc)
    _, back, _ = sympbf("embed", emb, "--flatten")
    assert parse_function_spec({"n": 2, "terms": back["terms"]}).function == parse_function_spec(doc).function


def test_embed_limit_exit_4(sympbf):
    code, _, _ = sympbf("embed", {"model": {"name": "xor", "params": {"n": 6}}}, "--max-n", "5")
    assert code == 4


def test_verify_pass(sympbf):
    code, rep, _ = sympbf("verify", DELTA3)
    assert code == 0 and rep["passed"]
    assert {c["name"] for c in rep["checks"]} >= {"values", "symmetry", "kernel_size", "factorization_residual"}


def test_verify_planted_fault_exit_5(sympbf):
    doc = {"symmetric_a": ["1", "-1", "2", "0"], "expect": {"kernel_size": 6}}
    code, rep, err = sympbf("verify", doc)
    assert code == 5 and rep is None
    failed = json.loads(err)["failed_checks"]
    assert failed[0]["name"] == "expect.kernel_size"


def test_verify_random_ising_n8(sympbf):
    doc = {"model": {"name": "ising", "params": {"n": 8, "J": "-7/3", "h": "5/6"}},
           "expect": {"K": "-7/12"}}
    code, rep, _ = sympbf("verify", doc)
    assert code == 0 and rep["passed"]


def test_verify_non_symmetric_terms(sympbf):
    doc = {"n": 3, "terms": [{"vars": [1, 3], "coeff": "2"}]}
    code, rep, _ = sympbf("verify", doc)
    assert code == 0 and rep["passed"]


def test_factor_with_verify_flag(sympbf):
    code, rep, _ = sympbf("factor", XOR3, "--verify")
    assert code == 0 and rep["verification"]["passed"]


def test_output_file_atomic(tmp_path, monkeypatch, capsys):
    target = tmp_path / "out.json"
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(DELTA3)))
    assert cli.main(["factor", "-o", str(target)]) == 0
    first = target.read_bytes()
    # a failing run must leave the previous file untouched and no temp files behind
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps({"n": 2, "terms": [{"vars": [1], "coeff": 1}]})))
    assert cli.main(["factor", "-o", str(target)]) == 2
    assert target.read_bytes() == first
    assert [p.name for p in tmp_path.iterdir()] == ["out.json"]


def test_input_file_and_determinism(tmp_path, monkeypatch, capsys):
    src = tmp_path / "in.json"
    src.write_text(json.dumps({"series_c": ["1", "-3", "0", "1"]}))
    outs = []
    for name in ("a.json", "b.json"):
        assert cli.main(["factor", "-i", str(src), "-o", str(tmp_path / name), "--verify"]) == 0
        outs.append((tmp_path / name).read_bytes())
    assert outs[0] == outs[1]


@pytest.mark.parametrize("doc", [
    DELTA3,
    {"n": 3, "terms": [{"vars": [], "coeff": "1/2"}, {"vars": [2, 3], "coeff": -4}]},
    {"symmetric_a": ["0", "2/3", "-1"]},
    {"series_c": ["1", "-3/2", "1/2", "0"]},
])
def test_spec_json_round_trip(doc):
    spec = parse_function_spec(doc)
    again = parse_function_spec(json.loads(json.dumps(function_spec_doc(spec))))
    assert again.function == spec.function


def test_diagonal_float_entries():
    d = parse_diagonal({"diag": [0.5, 1, 0, 0.1]})
    assert d.diag == (F(1, 2), 1, 0, F(1, 10))
    with pytest.raises(SpecError):
        parse_diagonal({"diag": [1, 2, 3]})
