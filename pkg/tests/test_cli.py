import json
import random
import shutil
import subprocess
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from conftest import TOWERS, W, W1
from linfield import io
from linfield.cli import main
from linfield.dickson import DicksonMatrix, adjugate, adjugate_poly, determinant, inverse_poly, matrix_rep
from linfield.linearized import LinPoly, compose, evaluate, image_basis, kernel_basis, rank_bruteforce
from linfield.moore_trace import compact_form, dual_basis, to_trace_form_dualside, to_trace_form_full
from linfield.skew import SkewPoly, factor_chain, rgcd

FIELDS = Path(__file__).resolve().parents[1] / "fields"
GF4 = str(FIELDS / "gf4.json")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out.strip()


def e(a):
    return io.dump_elem(TOWERS["gf4"], a)


# expected documents for the GF(4) worked examples, with w = [[0],[1]]
GOLDEN = [
    (["rank", "--poly", '[["0","1"],["1","0"]]'], {"rank": 1}),
    (["invert", "--poly", "identity"], {"poly": [e(1), e(0)]}),
    (["invert", "--poly", '["w", 0]'], {"poly": [e(W1), e(0)]}),
    (["eval", "--poly", "L_a", "--x", "w"], {"value": e(0)}),
    (["eval", "--poly", "L_a", "--x", "1"], {"value": e(W1)}),
    (["compose", "--poly", "[0, 1]", "--poly2", '["w", 0]'], {"poly": [e(0), e(W1)]}),
    (["det", "--poly", "L_a"], {"det": e(0)}),
    (["kernel", "--poly", "L_a"], {"basis": [e(W)], "dimension": 1}),
    (["image", "--poly", "L_a"], {"basis": [e(W1)], "dimension": 1}),
    (
        ["adjugate", "--poly", "L_a"],
        {"poly": [e(W1), e(1)], "matrix": [[e(W1), e(1)], [e(1), e(W)]]},
    ),
    (["trace-rep", "--poly", "L_a", "--form", "1"], {"form": 1, "pairs": [[e(1), e(W1)], [e(W), e(W1)]]}),
    (["trace-rep", "--poly", "L_a", "--form", "3"], {"form": 3, "pairs": [[e(W1), e(W1)]]}),
    (
        ["factor", "--poly", "L_a"],
        {"permutation": [e(1), e(0)], "gammas": [e(W)], "factors": [[e(1), e(0)], [e(W), e(1)]]},
    ),
    (["skew-gcd", "--poly", "L_a"], {"gcd": [e(W), e(1)], "degree": 1}),
    (["dual-basis", "--basis", '["1", "w"]'], {"dual": [e(W1), e(1)]}),
    (["matrix-rep", "--poly", '["w", 0]', "--basis", '["1", "w"]'], {"matrix": [[e(0), e(1)], [e(1), e(1)]]}),
]


@pytest.mark.parametrize("argv,expected", GOLDEN, ids=[" ".join(g[0][:1] + g[0][2:3]) for g in GOLDEN])
def test_golden(capsys, argv, expected):
    code, out = run(capsys, argv[0], "--field", GF4, *argv[1:])
    assert code == 0
    assert out == io.dumps(expected)


def test_not_a_permutation(capsys):
    code, out = run(capsys, "invert", "--field", GF4, "--poly", "L_a")
    assert code == 1 and json.loads(out)["error"] == "NotAPermutation"


@pytest.mark.parametrize(
    "argv,error",
    [
        (["rank", "--field", GF4, "--poly", "[1]"], "TowerMismatch"),
        (["factor", "--field", GF4, "--poly", "identity"], "WrongRank"),
        (["dual-basis", "--field", GF4, "--basis", "[1, 1]"], "NotABasis"),
        (["subfield-check", "--field", GF4, "--poly", "L_a", "--m", "3"], "NotADivisor"),
        (["eval", "--field", GF4, "--poly", "L_a", "--x", "[[2],[0]]"], "TowerMismatch"),
    ],
)
def test_domain_errors_exit_1(capsys, argv, error):
    code, out = run(capsys, *argv)
    assert code == 1 and json.loads(out)["error"] == error


@pytest.mark.parametrize(
    "argv",
    [
        ["rank", "--field", GF4, "--poly", "{not json"],
        ["rank", "--field", GF4, "--poly", "nosuchpoly"],
        ["rank", "--field", GF4],
        ["rank", "--field", "/nonexistent.json", "--poly", "identity"],
        ["trace-rep", "--field", GF4, "--poly", "L_a", "--form", "4"],
        ["bogus"],
    ],
)
def test_malformed_exit_2(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == 2 and json.loads(out)["error"] == "MalformedInput"


def test_reducible_field_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"p": 2, "f": [1, 1], "g": [[1], [0], [1]]}')
    code, out = run(capsys, "rank", "--field", str(path), "--poly", "identity")
    assert code == 1 and json.loads(out)["error"] == "ReduciblePolynomial"


def test_poly_from_file(tmp_path, capsys):
    path = tmp_path / "p.json"
    path.write_text('{"coeffs": ["w", "1"]}')
    assert run(capsys, "rank", "--field", GF4, "--poly", f"@{path}") == (0, '{"rank":1}')


def test_json_indent(capsys):
    code, out = run(capsys, "rank", "--field", GF4, "--poly", "L_a", "--json-indent", "2")
    assert out == '{\n  "rank": 1\n}'


def _library_payload(name, doc, L, L2, basis, x):
    F = doc.tower
    if name == "eval":
        return {"value": io.dump_elem(F, evaluate(L, x))}
    if name == "compose":
        return {"poly": io.dump_poly(compose(L, L2))}
    if name == "rank":
        return {"rank": rank_bruteforce(L)}
    if name == "det":
        return {"det": io.dump_elem(F, determinant(DicksonMatrix.from_poly(L)))}
    if name == "adjugate":
        return {
            "poly": io.dump_poly(adjugate_poly(L)),
            "matrix": io.dump_matrix(F, adjugate(DicksonMatrix.from_poly(L)).full()),
        }
    if name == "kernel":
        b = kernel_basis(L)
        return {"basis": io.dump_elems(F, b), "dimension": len(b)}
    if name == "image":
        b = image_basis(L)
        return {"basis": io.dump_elems(F, b), "dimension": len(b)}
    if name == "trace-rep-1":
        return {"form": 1, "pairs": io.dump_trace_form(to_trace_form_full(L, basis))}
    if name == "trace-rep-2":
        return {"form": 2, "pairs": io.dump_trace_form(to_trace_form_dualside(L, basis))}
    if name == "trace-rep-3":
        return {"form": 3, "pairs": io.dump_trace_form(compact_form(L))}
    if name == "dual-basis":
        return {"dual": io.dump_elems(F, dual_basis(F, basis))}
    if name == "matrix-rep":
        return {"matrix": io.dump_matrix(F, matrix_rep(L, basis))}
    if name == "skew-gcd":
        d = rgcd(SkewPoly(F, L.coeffs), SkewPoly(F, L2.coeffs))
        return {"gcd": io.dump_skew(d), "degree": d.degree}
    raise AssertionError(name)


COMMANDS = ["eval", "compose", "rank", "det", "adjugate", "kernel", "image", "trace-rep-1",
            "trace-rep-2", "trace-rep-3", "dual-basis", "matrix-rep", "skew-gcd"]


@pytest.mark.parametrize("field_name", ["gf8", "gf9", "gf16_over_gf4"])
@pytest.mark.parametrize("command", COMMANDS)
def test_cli_equals_library(capsys, field_name, command):
    path = str(FIELDS / f"{field_name}.json")
    doc = io.load_field(path)
    F = doc.tower
    rng = random.Random(f"{field_name}{command}")
    from linfield.laws import random_basis
    from linfield.linearized import random_poly

    for _ in range(5):
        L, L2 = random_poly(F, rng), random_poly(F, rng)
        basis, x = random_basis(F, rng), F.random_element(rng)
        argv = ["trace-rep" if command.startswith("trace-rep") else command]
        argv += ["--field", path, "--poly", json.dumps(io.dump_poly(L)), "--poly2", json.dumps(io.dump_poly(L2))]
        argv += ["--basis", json.dumps(io.dump_elems(F, basis)), "--x", json.dumps(io.dump_elem(F, x))]
        if command.startswith("trace-rep"):
            argv += ["--form", command[-1]]
        code, out = run(capsys, *argv)
        assert code == 0
        assert out == io.dumps(_library_payload(command, doc, L, L2, basis, x))


@pytest.mark.parametrize("field_name", ["gf8", "gf9"])
def test_invert_factor_and_subfield_commands(capsys, field_name):
    path = str(FIELDS / f"{field_name}.json")
    F = io.load_field(path).tower
    rng = random.Random(field_name)
    from linfield.linearized import random_poly

    for _ in range(20):
        L = random_poly(F, rng)
        poly = json.dumps(io.dump_poly(L))
        code, out = run(capsys, "invert", "--field", path, "--poly", poly)
        k = rank_bruteforce(L)
        if k == F.n:
            assert code == 0 and out == io.dumps({"poly": io.dump_poly(inverse_poly(L))})
        else:
            assert code == 1
        code, out = run(capsys, "factor", "--field", path, "--poly", poly)
        if k == F.n - 1:
            chain = factor_chain(L)
            assert code == 0 and json.loads(out)["gammas"] == io.dump_elems(F, chain.gammas)
        else:
            assert code == 1 and json.loads(out)["error"] == "WrongRank"
        code, out = run(capsys, "subfield-check", "--field", path, "--poly", poly, "--m", "1")
        doc = json.loads(out)
        assert code == 0 and doc["subfield"] == doc["alpha_pattern"] == doc["block_circulant"]


@given(st.data())
def test_serialization_round_trip(data):
    name = data.draw(st.sampled_from(["gf4", "gf8", "gf9", "gf16_4", "gf64"]))
    F = TOWERS[name]
    cs = data.draw(st.tuples(*[st.integers(0, F.order - 1)] * F.n))
    L = LinPoly(F, cs)
    text = io.dumps(io.dump_poly(L))
    assert io.parse_poly(F, json.loads(text)) == L
    for a in cs:
        assert io.parse_elem(F, json.loads(io.dumps(io.dump_elem(F, a)))) == a
    tf = compact_form(L)
    assert io.parse_trace_form(F, json.loads(io.dumps(io.dump_trace_form(tf)))) == tf
    s = SkewPoly(F, cs)
    assert io.parse_skew(F, json.loads(io.dumps(io.dump_skew(s)))) == s
    assert io.field_from_json(io.field_to_json(F)).tower == F


def test_digit_string_elements():
    F = TOWERS["gf16_4"]
    # "01" is the GF(4) element u; ["0", "1"] is v
    assert io.parse_elem(F, ["01"]) == 2
    assert io.parse_elem(F, ["0", "1"]) == 4
    assert io.parse_elem(F, [[1, 1], [0, 1]]) == 3 + 2 * 4


@pytest.mark.skipif(shutil.which("linfield") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(
        ["linfield", "invert", "--field", GF4, "--poly", "L_a"], capture_output=True, text=True
    )
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["error"] == "NotAPermutation"
