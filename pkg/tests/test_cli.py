import json

import pytest
from hypothesis import given, strategies as st

from ffclass import acceptance
from ffclass.classgroup import cg_enumerate
from ffclass.cli import (DEFAULT_SEED, PolySyntaxError, UsageError, classify_json,
                         default_seed, main, parse_form, parse_ideal, parse_poly,
                         table_from_json)
from ffclass.errors import FFClassError
from ffclass.poly import Poly, format_poly
from strategies import alpha_st

EX1 = ["--p", "3", "--alpha", "x^3+x+1"]


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("text,p,coeffs", [
    ("x^3+x+1", 3, (1, 1, 0, 1)), ("4x^3+4*x", 5, (0, 4, 0, 4)), ("0", 3, ()),
    ("2 - x", 5, (2, 4)), ("-x^2 + 7", 3, (1, 0, 2)), ("x^2+x^2", 5, (0, 0, 2)),
    ("3x", 3, ()),
])
def test_parse_poly(text, p, coeffs):
    assert parse_poly(text, p).coeffs == coeffs


@pytest.mark.parametrize("text,pos", [("", 0), ("x^", 1), ("x+*2", 2), ("2*", 0),
                                      ("x x", 2), ("x+", 2), ("^2", 0), ("y", 0)])
def test_parse_poly_syntax_errors(text, pos):
    with pytest.raises(PolySyntaxError) as ei:
        parse_poly(text, 5)
    assert ei.value.pos == pos


def test_parse_literals():
    alpha = parse_poly("x^3+x+1", 3)
    assert str(parse_ideal("x;2", 3, alpha)) == "(x;2)"
    assert str(parse_form("x, 2, 2x^2+2", 3)) == "(x,2,2x^2+2)"
    with pytest.raises(UsageError):
        parse_ideal("x,2", 3, alpha)
    with pytest.raises(UsageError):
        parse_form("x;2", 3)
    with pytest.raises(FFClassError):
        parse_ideal("x;0", 3, alpha)


@given(st.sampled_from((3, 5, 7)), st.lists(st.integers(-20, 20), max_size=7))
def test_serialize_parse_idempotent(p, coeffs):
    f = Poly(coeffs, p)
    s = format_poly(f)
    assert parse_poly(s, p) == f
    assert format_poly(parse_poly(s, p)) == s


def test_seed_from_environment(monkeypatch):
    monkeypatch.delenv("FFCLASS_SEED", raising=False)
    assert default_seed() == DEFAULT_SEED
    monkeypatch.setenv("FFCLASS_SEED", "7")
    assert default_seed() == 7


def test_classify_text(capsys):
    code, out, _ = run_cli(capsys, "classify", *EX1)
    assert code == 0
    assert "class number 4" in out and "Z/4" in out and "genera: 2" in out


def test_classify_json_schema(capsys):
    code, out, _ = run_cli(capsys, "classify", *EX1, "--json")
    data = json.loads(out)
    assert code == 0
    assert {"p", "alpha", "classes", "invariant_factors", "num_genera", "cl_merged"} <= set(data)
    assert set(data["classes"][0]) == {"u", "v", "form", "order", "genus", "principal"}
    assert data["invariant_factors"] == [4] and data["num_genera"] == 2


@pytest.mark.parametrize("alpha,p", [("x^3+x+1", 3), ("x^3+x", 5), ("x^5+2x+1", 3)])
def test_text_and_json_agree(capsys, alpha, p):
    _, text, _ = run_cli(capsys, "classify", "--p", str(p), "--alpha", alpha)
    _, js, _ = run_cli(capsys, "classify", "--p", str(p), "--alpha", alpha, "--output", "json")
    data = json.loads(js)
    assert f"class number {len(data['classes'])}," in text
    for i, c in enumerate(data["classes"]):
        row = next(line for line in text.splitlines() if line.split()[:1] == [str(i)])
        assert f"{c['u']};{c['v']}" in row and "(" + ",".join(c["form"]) + ")" in row
        assert str(c["order"]) in row.split() and ("yes" if c["principal"] else "no") in row
    assert f"genera: {data['num_genera']}" in text
    assert str(data["cl_merged"]) in text


def test_json_round_trip(tmp_path, capsys):
    _, out, _ = run_cli(capsys, "classify", "--p", "5", "--alpha", "x^3+x", "--json")
    path = tmp_path / "table.json"
    path.write_text(out)
    _, again, _ = run_cli(capsys, "classify", "--p", "5", "--alpha", "x^3+x", "--json",
                          "--table", str(path))
    assert json.loads(again) == json.loads(out)


@given(alpha_st())
def test_table_from_json_reproduces_table(alpha):
    data = classify_json(cg_enumerate(alpha))
    assert classify_json(table_from_json(json.loads(json.dumps(data)))) == data


def test_compose_identity(capsys):
    code, out, _ = run_cli(capsys, "compose", *EX1, "--i1", "x;2", "--i2", "x;1")
    assert code == 0 and "= (1;0)" in out and "identity" in out


def test_equiv(capsys):
    code, out, _ = run_cli(capsys, "equiv", *EX1, "--f1", "x,2,2x^2+2", "--f2", "x,1,2x^2+2")
    assert code == 0 and "not properly equivalent" in out


def test_reduce_and_genus(capsys):
    code, out, _ = run_cli(capsys, "reduce", *EX1, "--form", "2x^2+2,1,x", "--json")
    assert code == 0 and json.loads(out)["reduced"] == ["x", "2", "2x^2+2"]
    code, out, _ = run_cli(capsys, "genus", *EX1, "--form", "x-1,0,2x^2+2x+1", "--json")
    assert code == 0 and json.loads(out)["principal"] is True


def test_elliptic_and_oracle(capsys):
    code, out, _ = run_cli(capsys, "elliptic", "--p", "5", "--alpha", "x^3+x", "--json")
    data = json.loads(out)
    assert code == 0 and data["isomorphism_ok"] and data["n_points"] == 4
    code, out, _ = run_cli(capsys, "oracle", *EX1, "--degree-bound", "3", "--json")
    assert code == 0 and json.loads(out)["orbit_count"] == 4


@pytest.mark.parametrize("argv", [
    ["classify", "--p", "3", "--alpha", "x^3+2x^2+x"],   # not squarefree
    ["classify", "--p", "9", "--alpha", "x^3+x+1"],      # not prime
    ["compose", *EX1, "--i1", "x;0", "--i2", "1;0"],     # invalid ideal
    ["reduce", *EX1, "--form", "x,1,x"],                 # wrong determinant
    ["reduce", *EX1, "--form", "2,0,x^3+x+1"],           # not positive
    ["oracle", *EX1, "--degree-bound", "1"],
])
def test_math_errors_exit_1(capsys, argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 1 and err.startswith("ffclass:") and out == ""


@pytest.mark.parametrize("argv", [
    ["classify", "--p", "3", "--alpha", "x^^3"],
    ["compose", *EX1, "--i1", "x;2"],
    ["equiv", *EX1, "--f1", "x;2", "--f2", "x,1,2x^2+2"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run_cli(capsys, *argv)
    assert code == 2 and "usage error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as ei:
        main(["frobnicate"])
    assert ei.value.code == 2
    capsys.readouterr()


def test_selftest_plumbing(monkeypatch, capsys):
    calls = []

    def fake_run_all(seed, quick):
        calls.append((seed, quick))
        return [acceptance.CriterionResult("C1", "one", True, 0.1, "ok"),
                acceptance.CriterionResult("C2", "two", False, 0.2, "bad", ["boom"])]

    monkeypatch.setattr(acceptance, "run_all", fake_run_all)
    monkeypatch.delenv("FFCLASS_SEED", raising=False)
    code, out, _ = run_cli(capsys, "selftest", "--seed", "5", "--quick")
    assert code == 1 and calls == [(5, True)]
    assert out.splitlines() == ["[PASS] C1 one (0.10 s): ok", "[FAIL] C2 two (0.20 s): bad"]
    code, out, _ = run_cli(capsys, "selftest", "--output", "json")
    assert json.loads(out)["criteria"][1]["failures"] == ["boom"]
    assert calls[-1] == (DEFAULT_SEED, False)
