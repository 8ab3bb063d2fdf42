import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest
from hypothesis import given, settings

from monodec import ImproperIdealError, ParseError, parse_ideal, parse_monomial
from monodec.cli import run
from monodec.errors import DimensionError

from conftest import ideals

TRIANGLE = "(x1*x2, x1*x3, x2*x3)"


def test_parse_examples():
    I = parse_ideal("(x1^2*x3, x2)")
    assert I.dim == 3 and [list(g) for g in I.exponent_vectors] == [[0, 1, 0], [2, 0, 1]]
    assert str(parse_ideal("(x1, x1^2)")) == "(x1)"
    with pytest.raises(ImproperIdealError):
        parse_ideal("(1)")


@pytest.mark.parametrize("text, pos", [
    ("(x0)", 2), ("(x1^0)", 4), ("(x1,)", 4), ("x1", 0), ("(x1) x2", 5), ("(x1*)", 4),
    ("(y1)", 1), ("(x1 x2)", 4), ("(0, x1)", 1), ("(2)", 1),
])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_ideal(text)
    assert info.value.pos == pos


def test_parse_dim_and_whitespace():
    I = parse_ideal(" ( x1 ^ 2 , x2*x1 ) ", dim=4)
    assert I.dim == 4 and str(I) == "(x1^2, x1*x2)"
    assert parse_ideal("(0)", dim=3).is_zero()
    assert parse_ideal("(x1*x1)") == parse_ideal("(x1^2)")
    with pytest.raises(DimensionError):
        parse_ideal("(x3)", dim=2)
    assert parse_monomial("1", dim=2).is_one()
    assert str(parse_monomial("x2^3*x1")) == "x1*x2^3"


@settings(max_examples=1000)
@given(ideals(max_dim=5, max_gens=6, max_exp=5))
def test_parse_render_roundtrip(I):
    assert parse_ideal(str(I), dim=I.dim) == I


def out(*argv, stdin=None):
    return run(argv, stdin=stdin)


def test_cli_documented_examples():
    assert out("decompose", TRIANGLE) == (0, "(x1, x2) /\\ (x1, x3) /\\ (x2, x3)\n", "")
    code, text, _ = out("eq-powers", TRIANGLE, "--k", "2")
    assert code == 0
    assert text.splitlines()[1].startswith("2 | false | false")
    assert out("radical", "(x1^3*x2, x2^2)") == (0, "(x2)\n", "")


def test_cli_verbs_text():
    assert out("ass", "(x1^2, x1*x2)")[1] == "{1}\n{1, 2}\n"
    assert out("minass", "(x1^2, x1*x2)")[1] == "{1}\n"
    assert out("irreducible", "(x1^2, x3)")[1] == "true\n"
    assert out("power", "(x1, x2)", "--k", "2")[1] == "(x1^2, x1*x2, x2^2)\n"
    assert out("symbolic", TRIANGLE, "--k", "2")[1] == "(x1*x2*x3, x1^2*x2^2, x1^2*x3^2, x2^2*x3^2)\n"
    assert out("closure", "(x1^2, x2^2)")[1] == "(x1^2, x1*x2, x2^2)\n"
    assert out("member", "(x1^2, x2)", "x1^3*x2")[1] == "true\n"
    assert out("member", "(x1*x2, x2*x3)", "x1*x3")[1] == "false\n"
    assert out("normal", "(x1^2, x2^2)", "--K", "1")[1].startswith("normal up to K=1: false")
    assert out("decompose", "(x1^2, x1*x2)", "--unicode")[1] == "(x1) ∩ (x1^2, x2)\n"
    assert out("decompose", "-", stdin=io.StringIO("(x1*x2)\n"))[1] == "(x1) /\\ (x2)\n"
    assert out("decompose", "(x1)", "--dim", "3", "--json")[1] == \
        '{"components": [{"indices": [1], "exponents": [1]}]}\n'
    code, text, _ = out("verify-variants", TRIANGLE)
    assert code == 0 and text.startswith("ok: 8 variants agree")


def test_cli_exit_codes():
    assert out("decompose", "(0)")[0] == 2
    assert out("decompose", "(1)")[0] == 1
    assert out("decompose", "(x1")[0] == 1
    assert out("bogus", "(x1)")[0] == 1
    assert out("power", "(x1)")[0] == 1  # missing --k
    assert out("power", "(x1)", "--k", "0")[0] == 1
    assert out("eq-powers", "(x1^2, x2)", "--K", "2", "--criterion")[0] == 2
    assert out("decompose", "(x3)", "--dim", "2")[0] == 1
    assert out("eq-powers", TRIANGLE, "--k", "1", "--K", "2")[0] == 1


@pytest.mark.parametrize("argv", [
    ("decompose", TRIANGLE), ("radical", "(x1^3*x2, x2^2)"), ("ass", "(x1^2, x1*x2)"),
    ("minass", "(x1^2, x1*x2)"), ("irreducible", "(x1*x2)"), ("power", TRIANGLE, "--k", "2"),
    ("symbolic", TRIANGLE, "--k", "2"), ("symbolic", "(x1^2, x1*x2)", "--k", "2"),
    ("closure", "(x1^2, x2^3)"), ("normal", "(x1*x2, x2*x3)", "--K", "2"),
    ("member", "(x1^2, x2)", "x1*x2"), ("eq-powers", TRIANGLE, "--K", "2", "--criterion"),
    ("verify-variants", "(x1^2*x2, x1*x3^2, x2*x3)"),
])
def test_cli_verify_and_schema(argv):
    code, text, err = out(*argv, "--verify")
    assert code == 0, err
    code, text, err = out(*argv, "--json")
    assert code == 0, err
    schema = json.loads(resources.files("monodec").joinpath(
        "schema/monodec-output.v1.schema.json").read_text())
    ref = schema["x-verbs"][argv[0]]
    jsonschema.validate(json.loads(text), {**schema, "$ref": ref})


def test_cli_deterministic_bytes():
    args = ("eq-powers", TRIANGLE, "--K", "3", "--criterion", "--json")
    first = out(*args)
    assert all(out(*args) == first for _ in range(3))


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "monodec.cli", "decompose", TRIANGLE],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == "(x1, x2) /\\ (x1, x3) /\\ (x2, x3)\n"
