"""Subcommand behavior and exit codes, driven in-process."""

import json

import pytest

from torusquot.cli import main
from torusquot.fixtures import G216_FILE, S4_FILE

TRIVIAL2 = "conductor 1\ndegree 2\ngenerator perm\nmap 1 2\n"


@pytest.fixture
def s4_file(tmp_path):
    path = tmp_path / "s4.group"
    path.write_text(S4_FILE)
    return str(path)


def test_analyze_text_report(s4_file, capsys):
    code = main(["analyze", "--group", s4_file, "--pair",
                 "--form", "wedge 1:4 2:5 3:6"])
    out = capsys.readouterr().out
    assert code == 0
    assert "group order            24" in out
    assert "h2,0 (2-forms)         1" in out
    assert "form preserved         yes" in out


def test_analyze_json_matches_text(s4_file, capsys):
    code = main(["analyze", "--group", s4_file, "--pair",
                 "--form", "wedge 1:4 2:5 3:6", "--report", "json"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    code = main(["analyze", "--group", s4_file, "--pair",
                 "--form", "wedge 1:4 2:5 3:6"])
    text = capsys.readouterr().out
    assert code == 0
    # same values surface in both renderings
    assert f"group order            {data['group_order']}" in text
    assert f"h1,0 (1-forms)         {data['h10']}" in text
    assert f"h2,0 (2-forms)         {data['h20']}" in text
    assert data["verdict"] in text
    assert data["symplectic_class"] in text
    assert data["form_preserved"] is True
    assert data["primitive"] is True


def test_analyze_trivial_two_torus(tmp_path, capsys):
    path = tmp_path / "t2.group"
    path.write_text(TRIVIAL2)
    code = main(["analyze", "--group", str(path), "--report", "json"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["h10"] == 2
    assert data["h20"] == 1
    assert data["verdict"] == "TWO_TORUS"


def test_analyze_non_invariant_form_still_succeeds(s4_file, capsys):
    code = main(["analyze", "--group", s4_file, "--pair",
                 "--form", "wedge 1:2 3:4 5:6", "--report", "json"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["form_preserved"] is False


def test_analyze_form_degree_mismatch_is_input_error(s4_file, capsys):
    code = main(["analyze", "--group", s4_file, "--form", "wedge 1:4 2:5 3:6"])
    err = capsys.readouterr().err
    assert code == 2
    assert "wedge index" in err or "degree" in err


def test_analyze_form_file(tmp_path, s4_file, capsys):
    omega = tmp_path / "omega.form"
    omega.write_text("form wedge 1:4 2:5 3:6\n")
    code = main(["analyze", "--group", s4_file, "--pair", "--form", str(omega),
                 "--report", "json"])
    assert code == 0
    assert json.loads(capsys.readouterr().out)["form_preserved"] is True


def test_analyze_lattice_flag(s4_file, capsys):
    code = main(["analyze", "--group", s4_file, "--lattice", "1",
                 "--report", "json"])
    assert code == 0
    assert json.loads(capsys.readouterr().out)["lattice_preserved"] is True


def test_analyze_closure_limit_exit_3(s4_file, capsys):
    code = main(["analyze", "--group", s4_file, "--limit", "5"])
    assert code == 3
    assert "limit" in capsys.readouterr().err


def test_analyze_syntax_error_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.group"
    path.write_text("conductor 4\ndegree 1\ngenerator monomial\nmap 1\nscalars z^\n")
    code = main(["analyze", "--group", str(path)])
    err = capsys.readouterr().err
    assert code == 2
    assert "line 5" in err


def test_analyze_missing_file_exit_2(tmp_path, capsys):
    code = main(["analyze", "--group", str(tmp_path / "nope.group")])
    assert code == 2


def test_chartable_text(s4_file, capsys):
    code = main(["chartable", "--group", s4_file])
    out = capsys.readouterr().out
    assert code == 0
    assert "class" in out
    assert out.count("X") == 5


def test_chartable_json(s4_file, capsys):
    code = main(["chartable", "--group", s4_file, "--format", "json"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    degrees = sorted(chi["degree"] for chi in data["irreducibles"])
    assert degrees == [1, 1, 2, 3, 3]
    assert data["group_order"] == 24


def test_check_example_s4(capsys):
    code = main(["check-example", "s4"])
    out = capsys.readouterr().out
    assert code == 0
    assert "all 10 checks passed" in out
    assert "FAIL" not in out


def test_check_example_g216(capsys):
    code = main(["check-example", "g216"])
    out = capsys.readouterr().out
    assert code == 0
    assert "all 11 checks passed" in out


def test_check_example_g1280_reports_primitivity_mismatch(capsys):
    # the closure of the shipped degree-20 generators is not primitive:
    # its abelianization has order 5 and its Sylow 5-subgroup is cyclic.
    # the expected value stays at the recorded target, so this single
    # check fails and the command exits 1.
    code = main(["check-example", "g1280"])
    out = capsys.readouterr().out
    assert code == 1
    assert "FAIL  primitive: expected yes, got no" in out
    assert out.count("FAIL") == 1
    assert "PASS  group order: 1280" in out
    assert "PASS  fs indicator: -1" in out


def test_check_example_unknown_exit_2(capsys):
    code = main(["check-example", "nope"])
    assert code == 2
    assert "unknown example" in capsys.readouterr().err


def _write_catalog(tmp_path):
    (tmp_path / "s4.group").write_text(S4_FILE)
    (tmp_path / "c2.group").write_text(
        "conductor 1\ndegree 1\ngenerator dense\nrow -1\n")
    (tmp_path / "broken.group").write_text("conductor 1\ndegree 1\nrow 1\n")
    (tmp_path / "notes.txt").write_text("not a group file")


def test_search_catalog(tmp_path, capsys):
    _write_catalog(tmp_path)
    code = main(["search", "--catalog", str(tmp_path)])
    captured = capsys.readouterr()
    assert code == 0
    assert "c2.group: order 2, primitive: no" in captured.out
    assert "rejected" in captured.out
    assert "s4.group: order 24, primitive: yes" in captured.out
    assert "degree 3, type real, eigenvalue-1 all classes: yes, candidate: yes" \
        in captured.out
    assert "broken.group" in captured.err and "skipped" in captured.err


def test_search_max_order(tmp_path, capsys):
    _write_catalog(tmp_path)
    code = main(["search", "--catalog", str(tmp_path), "--max-order", "10"])
    captured = capsys.readouterr()
    assert code == 0
    assert "c2.group" in captured.out
    assert "s4.group" in captured.err  # skipped with a warning


def test_search_empty_catalog_exit_2(tmp_path, capsys):
    code = main(["search", "--catalog", str(tmp_path)])
    assert code == 2
    code = main(["search", "--catalog", str(tmp_path / "missing")])
    assert code == 2


def test_search_all_unreadable_exit_2(tmp_path, capsys):
    (tmp_path / "broken.group").write_text("conductor 1\n")
    code = main(["search", "--catalog", str(tmp_path)])
    capsys.readouterr()
    assert code == 2
