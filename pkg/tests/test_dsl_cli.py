"""The problem-description language and the command-line front end."""

import io
import json

import pytest

import cogroups as cg
from cogroups.cli import main as cli_main, run_command
from cogroups.dsl import ParseError, parse_spec, render_spec

POLY = "ring Q\ngenerator X degree 2\n"
TORSION = "ring Zmod 4\ngenerator x degree 3\n"
LOOP = """\
ring Q
generator y degree 1
generator x degree 2
coproduct x = y * y
"""


def test_parse_minimal():
    spec = parse_spec(POLY)
    assert str(spec.ring) == "Q"
    assert spec.module.names() == ("X",)
    assert spec.coproduct == {}
    assert spec.generator_summaries() == ["X degree 2"]


def test_parse_comments_blanks_and_ann():
    text = """
    # a torsion instance
    ring Z

    generator x degree 2 ann 3   # cyclic
    generator y degree 4 ann 4
    """
    spec = parse_spec(text)
    assert spec.module.generator("x").annihilator == 3
    assert spec.generator_summaries() == ["x degree 2 ann 3", "y degree 4 ann 4"]


def test_parse_coproduct_terms():
    spec = parse_spec(LOOP)
    assert spec.coproduct == {"x": ((1, "y", "y"),)}
    multi = parse_spec(
        "ring Q\n"
        "generator y degree 1\n"
        "generator w degree 1\n"
        "generator x degree 2\n"
        "coproduct x = y * w + -1 w * y\n"
    )
    assert multi.coproduct == {"x": ((1, "y", "w"), (-1, "w", "y"))}


def err(text):
    with pytest.raises(ParseError) as info:
        parse_spec(text)
    return info.value


def test_parse_error_positions():
    e = err("")
    assert (e.line, e.column) == (1, 1) and "missing ring" in e.message
    e = err("generator x degree 2")
    assert (e.line, e.column) == (1, 1) and "before ring" in e.message
    e = err("ring Z\nring Q")
    assert (e.line, e.column) == (2, 1) and "duplicate ring" in e.message
    e = err("ring Zmod 1")
    assert (e.line, e.column) == (1, 11)
    e = err("ring Fp 9")
    assert (e.line, e.column) == (1, 9) and "not prime" in e.message
    e = err("ring Z\ngenerator x degree 0")
    assert (e.line, e.column) == (2, 20) and "degree" in e.message
    e = err("ring Q\ngenerator x degree 2 ann 2")
    assert (e.line, e.column) == (2, 26) and "not legal" in e.message
    e = err("ring Q extra")
    assert (e.line, e.column) == (1, 8) and "unexpected" in e.message
    e = err("ring Z\ngenerator x degree")
    assert (e.line, e.column) == (2, 19) and "end of line" in e.message
    e = err("ring Z\nbogus stuff")
    assert (e.line, e.column) == (2, 1) and "unknown statement" in e.message
    e = err("ring Z\ngenerator x degree 2\ngenerator x degree 4")
    assert (e.line, e.column) == (3, 11) and "duplicate generator" in e.message


def test_parse_error_positions_in_coproducts():
    base = "ring Q\ngenerator x degree 2\ngenerator y degree 1\n"
    e = err(base + "coproduct x y * y")
    assert (e.line, e.column) == (4, 13) and "'='" in e.message
    e = err(base + "coproduct x = y * z")
    assert (e.line, e.column) == (4, 19) and "unknown generator" in e.message
    e = err(base + "coproduct x = y * x")
    assert (e.line, e.column) == (4, 15) and "imbalance" in e.message
    e = err(base + "coproduct zz = y * y")
    assert (e.line, e.column) == (4, 11) and "unknown generator" in e.message
    e = err(base + "coproduct x = y * y\ncoproduct x = y * y")
    assert (e.line, e.column) == (5, 11) and "duplicate coproduct" in e.message
    e = err("coproduct x = y * y")
    assert (e.line, e.column) == (1, 1) and "before ring" in e.message


def test_round_trips():
    texts = (
        POLY,
        TORSION,
        LOOP,
        "ring Zmod 4\n"
        "generator y degree 2\n"
        "generator x degree 4 ann 2\n"
        "coproduct x = 2 y * y\n",
        "ring Q\n"
        "generator y degree 1\n"
        "generator w degree 1\n"
        "generator x degree 2\n"
        "coproduct x = y * w + -1 w * y\n",
    )
    for text in texts:
        spec = parse_spec(text)
        rendered = render_spec(spec)
        assert parse_spec(rendered) == spec
        assert render_spec(parse_spec(rendered)) == rendered


def test_render_is_canonical():
    spec = parse_spec("ring Zmod 6   # comment\ngenerator   x   degree 2 ann 3\n")
    assert render_spec(spec) == "ring Zmod 6\ngenerator x degree 2 ann 3\n"


def test_run_command_rejects_unknown():
    with pytest.raises(ValueError):
        run_command(parse_spec(POLY), "make-coffee")


def test_run_command_verdicts_and_exit_codes():
    spec = parse_spec(POLY)
    rep = run_command(spec, "check-commutative", max_degree=8)
    assert rep.verdicts == [("graded-commutative", True)] and rep.exit_code == 0
    rep = run_command(parse_spec(TORSION), "nu-eq-chi", max_degree=8)
    assert rep.verdicts == [("nu-eq-chi", False)] and rep.exit_code == 1
    assert rep.witnesses == ["x^2: nu = x^2, chi = 3*x^2"]
    rep = run_command(parse_spec(LOOP), "check-cocommutative", max_degree=6)
    assert rep.exit_code == 1
    rep = run_command(parse_spec(LOOP), "check-cogroup", max_degree=5)
    assert rep.verdicts == [("cogroup-axioms", True)] and rep.exit_code == 0
    rep = run_command(parse_spec(POLY), "check-hopf", max_degree=8)
    assert rep.verdicts == [("hopf-antipode-laws", True)] and rep.exit_code == 0
    rep = run_command(parse_spec(POLY), "classify", max_degree=8)
    assert ("consistent", True) in rep.verdicts and rep.exit_code == 0


def test_run_command_antipode_tables():
    rep = run_command(parse_spec(TORSION), "antipode", max_degree=10)
    table = dict(rep.verdicts)
    assert table["chi(1)"] == "1"
    assert table["chi(x)"] == "3*x"
    assert table["chi(x^2)"] == "3*x^2"
    assert table["chi(x^3)"] == "x^3"
    rep = run_command(parse_spec(TORSION), "inverse", max_degree=10)
    table = dict(rep.verdicts)
    assert table["nu(x)"] == "3*x"
    assert table["nu(x^2)"] == "x^2"
    assert rep.exit_code == 0


def test_run_command_surjectivity_listing():
    rep = run_command(parse_spec(TORSION), "check-surjective", max_degree=8)
    names = [n for n, _ in rep.verdicts]
    assert names == [f"surjective-degree-{d}" for d in range(9)] + [
        "surjective-all-degrees"
    ]
    assert all(v for _, v in rep.verdicts)
    assert rep.exit_code == 0


def test_text_and_json_carry_identical_verdicts():
    spec = parse_spec(TORSION)
    for command in (
        "check-commutative",
        "check-cocommutative",
        "check-cogroup",
        "check-hopf",
        "nu-eq-chi",
        "check-surjective",
        "classify",
    ):
        rep = run_command(spec, command, max_degree=6)
        doc = json.loads(rep.render_json())
        text = rep.render_text()
        assert doc["exit_code"] == rep.exit_code
        assert f"exit-code: {rep.exit_code}" in text
        for entry in doc["verdicts"]:
            value = entry["value"]
            shown = {True: "true", False: "false", None: "n/a"}.get(value, str(value))
            assert f"{entry['name']}: {shown}" in text
        for w in doc["witnesses"]:
            assert f"witness: {w}" in text


def test_json_document_shape():
    rep = run_command(parse_spec(POLY), "classify", max_degree=6)
    doc = json.loads(rep.render_json())
    assert set(doc) == {
        "command",
        "ring",
        "generators",
        "max_degree",
        "verdicts",
        "witnesses",
        "exit_code",
    }
    assert doc["command"] == "classify"
    assert doc["ring"] == "Q"
    assert doc["generators"] == ["X degree 2"]
    assert doc["max_degree"] == 6


def test_cli_main_with_file(tmp_path, capsys):
    path = tmp_path / "poly.cog"
    path.write_text(POLY)
    rc = cli_main(["nu-eq-chi", str(path), "--max-degree", "8"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "nu-eq-chi: true" in out
    assert out.endswith("exit-code: 0\n")


def test_cli_main_json(tmp_path, capsys):
    path = tmp_path / "tor.cog"
    path.write_text(TORSION)
    rc = cli_main(["nu-eq-chi", str(path), "--max-degree", "8", "--json"])
    out = capsys.readouterr().out
    assert rc == 1
    doc = json.loads(out)
    assert doc["exit_code"] == 1
    assert doc["witnesses"] == ["x^2: nu = x^2, chi = 3*x^2"]


def test_cli_main_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(POLY))
    rc = cli_main(["check-commutative"])
    assert rc == 0
    assert "graded-commutative: true" in capsys.readouterr().out


def test_cli_main_error_paths(tmp_path, capsys):
    with pytest.raises(SystemExit) as info:
        cli_main(["make-coffee", "x.cog"])
    assert info.value.code == 2
    rc = cli_main(["classify", str(tmp_path / "missing.cog")])
    captured = capsys.readouterr()
    assert rc == 2 and "error:" in captured.err
    bad = tmp_path / "bad.cog"
    bad.write_text("ring Q\ngenerator x degree 0\n")
    rc = cli_main(["classify", str(bad)])
    captured = capsys.readouterr()
    assert rc == 2 and "line 2" in captured.err


def test_cli_seed_flag_is_accepted(tmp_path, capsys):
    path = tmp_path / "poly.cog"
    path.write_text(POLY)
    rc = cli_main(["classify", str(path), "--max-degree", "6", "--seed", "7"])
    assert rc == 0
    capsys.readouterr()
