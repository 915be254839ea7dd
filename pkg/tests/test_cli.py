"""Command-line interface: exit codes, output shapes, expression parsing."""

import json

import pytest

from lefalg.catalog import get, names
from lefalg.cli import CliError, load_algebra, parse_element_expr, run


def test_catalog_lists_every_name(capsys):
    assert run(["catalog"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == names()


def test_dims(capsys):
    assert run(["dims", "example2"]) == 0
    assert capsys.readouterr().out.strip() == "1 3 7 10 7 3 1"


def test_lef_dims_example3(capsys):
    assert run(["lef-dims", "example3"]) == 0
    assert capsys.readouterr().out.strip() == "1 2 3 4 5 5 4 2 1"


def test_check_sym_fails_on_example1(capsys):
    assert run(["check", "example1", "--sym"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out
    assert "k=2: 3 vs 4" in out


def test_check_hl_passes_on_gr25(capsys):
    assert run(["check", "Gr-2-5", "--hl", "--omega", "s[1]"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_check_uses_catalog_omega_by_default(capsys):
    assert run(["check", "example3", "--hl"]) == 1
    assert "k=0: rank 0 of 1" in capsys.readouterr().out


def test_check_pd(capsys):
    assert run(["check", "P3xP3", "--pd"]) == 0
    assert run(["check", "example2", "--pd"]) == 1


def test_check_rejects_bad_omega(capsys):
    assert run(["check", "Gr-2-5", "--hl", "--omega", "nonsense"]) == 2
    assert "error" in capsys.readouterr().err


def test_check_requires_exactly_one_predicate(capsys):
    assert run(["check", "example1"]) == 2
    capsys.readouterr()
    assert run(["check", "example1", "--sym", "--pd"]) == 2


def test_mul(capsys):
    assert run(["mul", "example1", "10c - e^1*1", "e^1*1"]) == 0
    assert capsys.readouterr().out.strip() == \
        "10*e^1*a + 30*e^1*b - e^2*1"


def test_mul_schubert(capsys):
    assert run(["mul", "Gr-2-5", "s[1]", "s[3,2]"]) == 0
    assert capsys.readouterr().out.strip() == "s[3,3]"


def test_mul_rejects_mixed_degrees(capsys):
    assert run(["mul", "example1", "c + e^2*1", "c"]) == 2
    assert "degree" in capsys.readouterr().err


def test_verify(capsys):
    assert run(["verify", "Gr-2-4"]) == 0
    assert "ok" in capsys.readouterr().out


def test_unknown_algebra_is_usage_error(capsys):
    assert run(["dims", "no-such-thing"]) == 2
    assert "unknown catalog name" in capsys.readouterr().err


def test_no_arguments_is_usage_error(capsys):
    assert run([]) == 2


def test_report_json_deterministic(capsys):
    assert run(["report", "example1", "--json"]) == 0
    first = capsys.readouterr().out
    assert run(["report", "example1", "--json"]) == 0
    second = capsys.readouterr().out
    assert first == second
    doc = json.loads(first)
    assert doc["name"] == "example1"
    assert doc["dims"] == [1, 2, 4, 4, 2, 1]
    assert doc["lefschetz_dims"] == [1, 2, 3, 4, 2, 1]
    assert doc["omega"] == "10*c - e^1*1"
    assert doc["predicates"]["symmetry"]["passed"] is False
    assert doc["predicates"]["symmetry"]["witness"] == "k=2: 3 vs 4"
    assert doc["primitive"]["valid"] is False


def test_report_plain_text(capsys):
    assert run(["report", "Gr-2-5"]) == 0
    out = capsys.readouterr().out
    assert "hard_lefschetz: PASS" in out
    assert "primitive dims: 1 0 0 0" in out


def test_build_and_reload(tmp_path, capsys):
    src = tmp_path / "x.build.json"
    out = tmp_path / "x.alg.json"
    src.write_text('{"product": [{"P": 1}, {"P": 2}]}')
    assert run(["build", str(src), "-o", str(out)]) == 0
    stdout = capsys.readouterr().out
    assert "dims 1 2 2 1" in stdout
    assert f"wrote {out}" in stdout
    # the written file is loadable by every other command
    assert run(["dims", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "1 2 2 1"


def test_build_syntax_error_exit_2(tmp_path, capsys):
    src = tmp_path / "bad.build.json"
    src.write_text('{"P": ')
    assert run(["build", str(src)]) == 2
    assert "syntax error" in capsys.readouterr().err


def test_build_type_error_exit_2(tmp_path, capsys):
    src = tmp_path / "bad.build.json"
    src.write_text('{"P": -1}')
    assert run(["build", str(src)]) == 2
    assert "type error" in capsys.readouterr().err


def test_build_missing_file_exit_2(tmp_path, capsys):
    assert run(["build", str(tmp_path / "absent.json")]) == 2
    assert capsys.readouterr().err


def test_expression_parser_forms():
    a = get("example1").algebra
    assert parse_element_expr(a, "c").coords == \
        a.by_label("c").coords
    assert parse_element_expr(a, "10c") == 10 * a.by_label("c")
    assert parse_element_expr(a, "10*c") == 10 * a.by_label("c")
    from fractions import Fraction
    assert parse_element_expr(a, "-2/3*c") == \
        a.by_label("c") * Fraction(-2, 3)
    assert parse_element_expr(a, "10c - e^1*1") == \
        10 * a.by_label("c") - a.by_label("e^1*1")
    assert parse_element_expr(a, "3").degree == 0
    g = get("Gr-2-5").algebra
    assert parse_element_expr(g, "s[2,1] + 2*s[3]") == \
        g.by_label("s[2,1]") + 2 * g.by_label("s[3]")


def test_expression_parser_errors():
    a = get("example1").algebra
    for bad in ("", "c + q", "1.5*c", "c + c^2", "* c"):
        with pytest.raises((CliError, ValueError)):
            parse_element_expr(a, bad)


def test_load_algebra_from_file(tmp_path):
    from lefalg.serialize import write_algebra
    path = tmp_path / "g.alg.json"
    write_algebra(get("Gr-2-4").algebra, str(path))
    assert load_algebra(str(path)) == get("Gr-2-4").algebra
    with pytest.raises(CliError):
        load_algebra("definitely-not-a-name")
