"""Script parsing, rendering round trips, the runner and the CLI."""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from pertinax.errors import ConductorTooSmall, ParseError
from pertinax.frontend.parser import parse
from pertinax.frontend.runner import run
from pertinax.galgebra import make_downup, make_skew_symmetric
from pertinax.scalars import cyclotomic_field

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
GOLDEN = Path(__file__).resolve().parent / "golden"


def fixture_text(name):
    return (FIXTURES / name).read_text()


def test_parse_structure():
    script = parse(fixture_text("kxy_swap.ptx"))
    assert script.field.m == 2
    assert len(script.algebras) == 1
    assert len(script.groups) == 1
    assert len(script.pairs) == 1
    assert [t.kind for t in script.tasks] == ["verify", "radical", "pertinency"]


@pytest.mark.parametrize("name", sorted(p.name for p in FIXTURES.glob("*.ptx")))
def test_render_reparse_round_trip(name):
    script = parse(fixture_text(name))
    again = parse(script.render())
    assert again == script
    # stable under a second cycle as well
    assert parse(again.render()) == again


def test_poly_string_round_trip(Q3, QQ):
    """Printing an element and reparsing it reproduces the terms exactly."""
    cases = []
    S = make_skew_symmetric(Q3, 3, 6)
    z = Q3.primitive_root(3)
    x, y, w = S.gens()
    cases.append((S, x * y * 3 - w * w * z))
    cases.append((S, S.one() * z + x))
    cases.append((S, (x + y * z) * (x - y)))
    cases.append((S, S.zero()))
    D = make_downup(QQ, 1, -1, 6)
    dx, dy = D.gens()
    cases.append((D, dx * dx * dy - dy * dx * dx * 2))
    from fractions import Fraction

    cases.append((D, dx * Fraction(-1, 2) + dy * Fraction(3, 7)))
    for algebra, elem in cases:
        text = str(elem)
        script = parse(
            "field cyclotomic(%d);\nalgebra R = commutative(1);\n"
            "group G = matrices { g: [[-1]]; };\npair P = ([%s], [1]);\n"
            % (algebra.field.m, text)
        )
        expr = script.pairs["P"].left[0]
        back = algebra.element(expr.eval(algebra.alphabet, algebra.field))
        assert back == elem, text


def test_scalar_rendering_round_trip(Q12):
    from pertinax import kernel

    import random

    rng = random.Random(4)
    for _ in range(50):
        raw = kernel.q_normalize(
            [rng.randint(-9, 9) for _ in range(Q12.phi)], rng.randint(1, 9)
        )
        s = Q12.from_raw(raw)
        script = parse(
            "field cyclotomic(12);\nalgebra R = commutative(1);\n"
            "group G = matrices { g: [[-1]]; };\npair P = ([(%s)*x], [1]);\n" % s
        )
        expr = script.pairs["P"].left[0]
        val = expr.terms[0].scalar.eval(Q12)
        assert val == s, str(s)


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse("algebra R = commutative(2)")  # missing semicolon
    assert err.value.line == 1
    with pytest.raises(ParseError) as err:
        parse("algebra R = commutative(2);\ntask radical R G;\n")
    assert err.value.line == 2  # undeclared group
    with pytest.raises(ParseError):
        parse("pair P = ([x], [x]);\ntask verify P R G;\n")
    with pytest.raises(ParseError):
        parse("algebra R = commutative(2);\ntask radical R R;\n")
    with pytest.raises(ParseError):
        parse(
            "algebra R = commutative(2);\ngroup G = matrices { g: [[0,1],[1,0]]; };\n"
            "task radical R G strategies=bogus;\n"
        )


def test_undeclared_generator_in_pair():
    text = (
        "field cyclotomic(2);\nalgebra R = commutative(2);\n"
        "group G = matrices { g: [[0,1],[1,0]]; };\n"
        "pair P = ([x, q], [x, y]);\ntask verify P R G;\n"
    )
    with pytest.raises(ParseError) as err:
        parse(text)
    assert "q" in str(err.value)


def test_conductor_validation_at_parse_time():
    text = "field cyclotomic(2);\nalgebra R = commutative(2);\n" "group G = matrices { g: [[(z3), 0], [0, 1]]; };\n"
    with pytest.raises(ConductorTooSmall):
        parse(text)


def test_empty_task_list_is_valid():
    script = parse("field cyclotomic(2);\nalgebra R = commutative(2);\n")
    report, code = run(script)
    assert code == 0
    assert report["tasks"] == []


def _strip_times(report):
    clone = json.loads(json.dumps(report))
    for t in clone["tasks"]:
        t.pop("time_ms", None)
    return clone


def test_report_determinism_and_threads():
    script = parse(fixture_text("kxy_negid.ptx"))
    r1, c1 = run(script, maxdeg=8)
    r2, c2 = run(parse(fixture_text("kxy_negid.ptx")), maxdeg=8)
    assert c1 == c2 == 0
    assert json.dumps(_strip_times(r1)) == json.dumps(_strip_times(r2))
    r3, _ = run(parse(fixture_text("kxy_negid.ptx")), maxdeg=8, threads=3)
    b1 = json.dumps(_strip_times(r1))
    b3 = json.dumps(_strip_times(r3))
    # thread count is echoed in the flags but must not affect results
    assert b1.replace('"threads": 1', '"threads": 3') == b3


@pytest.mark.parametrize("name", ["kxy_swap", "km1xyz_omega"])
def test_golden_reports(name):
    script = parse(fixture_text(name + ".ptx"))
    report, _ = run(script)
    got = json.dumps(_strip_times(report), indent=2) + "\n"
    golden_path = GOLDEN / (name + ".json")
    assert golden_path.exists(), "golden file missing; regenerate with tests/make_golden.py"
    assert got == golden_path.read_text()


def test_verify_failure_exit_code():
    text = (
        "field cyclotomic(2);\nalgebra R = commutative(2);\n"
        "group G = matrices { s: [[0,1],[1,0]]; };\n"
        "pair BAD = ([x], [x]);\ntask verify BAD R G;\n"
    )
    report, code = run(parse(text))
    assert code == 2
    result = report["tasks"][0]["result"]
    assert result["pertinent"] is False
    assert result["violating_g"] == 1
    assert result["residue"]


def _cli(args):
    env = dict(os.environ)
    return subprocess.run(
        [sys.executable, "-m", "pertinax.frontend.cli", *args],
        capture_output=True,
        text=True,
        env=env,
        cwd=str(FIXTURES.parent),
    )


def test_cli_run_and_check():
    proc = _cli(["check", "fixtures/kxy_swap.ptx"])
    assert proc.returncode == 0 and "OK" in proc.stdout
    proc = _cli(["run", "fixtures/kxy_swap.ptx", "--maxdeg", "6"])
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["schema"] == 1
    assert payload["tasks"][2]["result"]["pertinency"] == {"value": 1, "kind": "estimate"}


def test_cli_exit_codes(tmp_path):
    bad = tmp_path / "bad.ptx"
    bad.write_text("algebra R = commutative(2)")
    assert _cli(["run", str(bad)]).returncode == 1
    assert _cli(["run", str(tmp_path / "missing.ptx")]).returncode == 1
    nonpert = tmp_path / "nonpert.ptx"
    nonpert.write_text(
        "field cyclotomic(2);\nalgebra R = commutative(2);\n"
        "group G = matrices { s: [[0,1],[1,0]]; };\n"
        "pair BAD = ([x], [x]);\ntask verify BAD R G;\n"
    )
    proc = _cli(["run", str(nonpert)])
    assert proc.returncode == 2
    assert json.loads(proc.stdout)["tasks"][0]["result"]["pertinent"] is False
    # a mathematical error aborts with task context on stderr
    nonauto = tmp_path / "nonauto.ptx"
    nonauto.write_text(
        "field cyclotomic(2);\nalgebra R = commutative(2);\n"
        "group G = matrices { s: [[1,1],[0,1]]; };\n"
        "task radical R G;\n"
    )
    proc = _cli(["run", str(nonauto)])
    assert proc.returncode == 2
    assert "NotFiniteWithinBound" in proc.stderr or "NotAnAutomorphism" in proc.stderr


def test_cli_json_output_file(tmp_path):
    out = tmp_path / "report.json"
    proc = _cli(["run", "fixtures/kx_sign.ptx", "--json", str(out), "--text"])
    assert proc.returncode == 0
    payload = json.loads(out.read_text())
    assert payload["tasks"][0]["result"]["semisimple"] is False
    assert "witness" in proc.stdout


def test_task_maxdeg_overrides_flag():
    text = (
        "field cyclotomic(2);\nalgebra R = commutative(2);\n"
        "group G = matrices { s: [[0,1],[1,0]]; };\n"
        "task radical R G maxdeg=5;\ntask radical R G;\n"
    )
    report, _ = run(parse(text), maxdeg=7)
    assert report["tasks"][0]["result"]["maxdeg"] == 5
    assert report["tasks"][1]["result"]["maxdeg"] == 7
    assert len(report["tasks"][0]["result"]["dims_R"]) == 6
    assert len(report["tasks"][1]["result"]["dims_R"]) == 8


def test_presentation_with_empty_relations_is_free():
    text = (
        "field cyclotomic(2);\n"
        "algebra F = presentation { gens: a, b; rels: ; };\n"
        "group G = matrices { s: [[0,1],[1,0]]; };\n"
        "task semisimple F G maxdeg=4;\n"
    )
    report, code = run(parse(text))
    assert code == 0
    result = report["tasks"][0]["result"]
    assert result["semisimple"] is False  # a - b witnesses in degree 1
    assert result["witness_degree"] == 1
