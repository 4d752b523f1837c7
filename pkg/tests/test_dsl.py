import json

import pytest

from groupspec.dsl import DslError, Interpreter, parse_program, run_program
from groupspec import export as export_mod
from groupspec.fingroup import symmetric
from groupspec.gobject import identity_object
from groupspec.spectrum import spectrum


def test_parse_error_carries_line_and_col():
    with pytest.raises(DslError) as e:
        parse_program("group A = cyclic(2)\ngroup B = cyclic(x)\n")
    assert e.value.line == 2
    assert e.value.col > 1


def test_undefined_reference_rejected_at_parse_time():
    with pytest.raises(DslError, match="undefined reference"):
        parse_program("spec Nope\n")
    with pytest.raises(DslError, match="undefined reference"):
        parse_program("group A = cyclic(2)\nggroup X = (A -> B) via id\n")


def test_unknown_statement_and_trailing_tokens():
    with pytest.raises(DslError, match="unknown statement"):
        parse_program("frobnicate A\n")
    with pytest.raises(DslError, match="trailing"):
        parse_program("group A = cyclic(2) extra\n")


def test_comments_and_blank_lines_ignored():
    prog = parse_program("# nothing\n\ngroup A = cyclic(3)  # inline\n")
    assert len(prog.statements) == 1


def test_basic_program_runs():
    interp = run_program(
        "group S5 = sym(5)\n"
        "ggroup X = (S5 -> S5) via id\n"
        "spec X --variant t2 --prime-def quotient as S\n"
        "sections S whole\n"
        "stalk S 0\n"
    )
    text = "\n".join(interp.outputs)
    assert "2 primes" in text
    assert "order 120" in text


def test_spec_on_bare_group_uses_identity_object():
    interp = run_program("group Z2 = cyclic(2)\nspec Z2 --variant t2 as S\n")
    assert "1 primes" in interp.outputs[-1]


def test_word_and_variety_commands():
    interp = run_program(
        "group A5 = alt(5)\n"
        "word w over (A5, 1) = X1^2\n"
        "variety A5 1 w as V\n"
    )
    assert "16 points" in interp.outputs[-1]


def test_word_parse_failure_is_dsl_error():
    with pytest.raises(DslError):
        run_program("group A = cyclic(2)\nword w over (A, 1) = X9\n")


def test_morphism_and_glue_commands():
    interp = run_program(
        "group S5 = sym(5)\n"
        "ggroup X = (S5 -> S5) via id\n"
        "morphism (X -> X) via id --variant t2\n"
        "spec X --variant t2 as S\n"
        "glue S 0 S 0 as D\n"
        "sections D whole\n"
    )
    text = "\n".join(interp.outputs)
    assert "3 points" in text
    assert "order 120" in text


def test_check_command_reports_findings():
    interp = run_program("check t2-defs-diverge\n")
    assert sum("FINDING" in line for line in interp.outputs) == 2
    assert not interp.audit_failed


def test_export_json_roundtrip_and_determinism():
    obj = identity_object(symmetric(5), "S5")
    s = spectrum(obj, "t2")
    payload = export_mod.spectrum_to_json(s)
    assert payload == export_mod.spectrum_to_json(s)
    data = json.loads(payload)
    rebuilt = export_mod.spectrum_from_dict(data, obj)
    assert [P.members.members for P in rebuilt.primes] == [P.members.members for P in s.primes]


def test_export_dot_contains_specialization_edge():
    obj = identity_object(symmetric(5), "S5")
    dot = export_mod.spectrum_to_dot(spectrum(obj, "t2")).decode()
    assert "p0 -> p1" in dot
    assert '"{1}"' in dot and '"N60"' in dot


def test_export_via_program(tmp_path):
    out = tmp_path / "spec.json"
    interp = run_program(
        "group S5 = sym(5)\n"
        "ggroup X = (S5 -> S5) via id\n"
        "spec X --variant t2 as S\n"
        f"export S --format json --out {out}\n"
    )
    data = json.loads(out.read_text())
    assert data["carrier_order"] == 120
    assert len(data["primes"]) == 2
