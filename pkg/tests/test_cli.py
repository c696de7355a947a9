import json
import os
import pathlib
import subprocess
import sys

import jsonschema
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graal.cli import ParseError, format_problem, main, parse_problem, run_command

ROOT = pathlib.Path(__file__).resolve().parent.parent
DATA = ROOT / "data"
SCHEMA = json.loads((ROOT / "docs" / "report.schema.json").read_text())


def test_parse_example():
    pf = parse_problem((DATA / "surface.graal").read_text())
    assert pf.variables == ["x", "y", "z"]
    assert len(pf.H) == 1 and len(pf.J) == 2
    x, y, z = pf.ring.gens
    assert pf.H[0] == y**2 + x**3 - x**2 * z**2


def test_parse_zero_H():
    pf = parse_problem("ring x over QQ; H = 0; J = x;")
    assert pf.H == []


def test_parse_missing_semicolon():
    with pytest.raises(ParseError) as e:
        parse_problem("ring x, y over QQ;\nH = 0\nJ = x;\n")
    assert e.value.line == 3


@pytest.mark.parametrize(
    "text, line, col",
    [
        ("ring x over QQ;\nH = 0;\nJ = q;\n", 3, 5),
        ("ring x, x over QQ;\nH = 0;\nJ = x;\n", 1, 9),
        ("ring x over QQ;\nH = 0;\nJ = x + ;\n", 3, 9),
        ("ring x over QQ;\nH = 0;\nJ = 1/0;\n", 3, 7),
    ],
)
def test_parse_errors_carry_position(text, line, col):
    with pytest.raises(ParseError) as e:
        parse_problem(text)
    assert (e.value.line, e.value.col) == (line, col)


def test_parse_syntax_features():
    pf = parse_problem("ring x, y over QQ; # comment\nH = 0; J = 2x y^2 - 3/4*(x - y)^2, y;\nI = x;\nseed = 3;")
    x, y = pf.ring.gens
    assert pf.J[0] == 2 * x * y**2 - (x - y) ** 2 * pf.ring.field(0.75)
    assert pf.seed == 3
    assert pf.I == [x]


@pytest.mark.parametrize("name", sorted(p.name for p in DATA.glob("*.graal")))
def test_round_trip_files(name):
    pf = parse_problem((DATA / name).read_text())
    assert parse_problem(format_problem(pf)) == pf


names = st.lists(st.from_regex(r"[a-z][a-z0-9_]{0,3}", fullmatch=True), min_size=1, max_size=3, unique=True)


@st.composite
def problems(draw):
    vs = draw(names)
    if "over" in vs or "ring" in vs or "intersect" in vs:
        vs = ["v%d" % i for i in range(len(vs))]

    def poly():
        terms = []
        for _ in range(draw(st.integers(1, 3))):
            c = draw(st.integers(-9, 9).filter(bool))
            d = draw(st.integers(1, 5))
            mon = "*".join("%s^%d" % (v, draw(st.integers(0, 3))) for v in vs)
            terms.append("%d/%d*%s" % (c, d, mon))
        return " + ".join(terms)

    lines = ["ring %s over QQ;" % ", ".join(vs), "H = %s;" % poly(), "J = %s, %s;" % (poly(), poly())]
    if draw(st.booleans()):
        lines.append("I = intersect([%s], [%s]);" % (poly(), poly()))
    return "\n".join(lines)


@settings(max_examples=60)
@given(problems())
def test_round_trip_random(text):
    pf = parse_problem(text)
    assert parse_problem(format_problem(pf)) == pf


# --- running commands -------------------------------------------------------------


def test_dim_command():
    pf = parse_problem((DATA / "surface.graal").read_text())
    assert run_command("dim", pf)["result"]["dim"] == 1


def test_regular_command():
    pf = parse_problem((DATA / "surface_parabola.graal").read_text())
    assert run_command("regular", pf)["result"]["regular"] is True


def test_resolve_command():
    pf = parse_problem((DATA / "twisted.graal").read_text())
    assert run_command("resolve", pf)["result"]["ranks"] == [1, 2, 1]


CASES = [(c, f) for c in ("gr", "dim", "regular", "sop") for f in ("surface.graal", "twisted.graal")] + [
    (c, "twisted.graal") for c in ("hilbert", "resolve")
] + [("hilbert", "line.graal"), ("resolve", "line.graal")]


@pytest.mark.parametrize("cmd, name", CASES)
def test_reports_validate(cmd, name, capsys):
    assert main([cmd, str(DATA / name), "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    jsonschema.validate(report, SCHEMA)
    assert report["command"] == cmd


@pytest.mark.parametrize("cmd", ["gr", "sop"])
def test_seed_determinism(cmd, capsys):
    outs = []
    for _ in range(2):
        assert main([cmd, str(DATA / "twisted.graal"), "--json", "--seed", "11"]) == 0
        r = json.loads(capsys.readouterr().out)
        r.pop("timings")
        outs.append(json.dumps(r, sort_keys=True))
    assert outs[0] == outs[1]


def test_text_output(capsys):
    assert main(["regular", str(DATA / "surface.graal")]) == 0
    out = capsys.readouterr().out
    assert "regular: False" in out


def test_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.graal"
    bad.write_text("ring x over QQ;\nH = 0\n")
    assert main(["dim", str(bad)]) == 1
    assert main(["dim", str(tmp_path / "missing.graal")]) == 1
    outside = tmp_path / "outside.graal"
    outside.write_text("ring x, y over QQ;\nH = x;\nJ = y;\n")
    assert main(["dim", str(outside)]) == 1
    assert main(["hilbert", str(DATA / "surface.graal")]) == 1
    assert "line 3" in capsys.readouterr().err


def test_verification_failure_exit_code(monkeypatch, capsys):
    import graal.cli as cli

    monkeypatch.setattr(cli, "check_initial_forms", lambda gp: False)
    monkeypatch.setenv("GRAAL_VERIFY", "1")
    assert main(["dim", str(DATA / "surface.graal")]) == 2
    monkeypatch.delenv("GRAAL_VERIFY")
    assert main(["dim", str(DATA / "surface.graal")]) == 0


def test_console_script():
    env = dict(os.environ, GRAAL_VERIFY="1")
    out = subprocess.run(
        [sys.executable, "-m", "graal.cli", "dim", str(DATA / "twisted.graal"), "--json"],
        capture_output=True, text=True, env=env, check=True,
    ).stdout
    assert json.loads(out)["result"]["dim"] == 3
