"""End-to-end command-line checks: exit codes, literal human output, and the
frozen JSON schema."""

import json

import pytest

from relext import cli
from relext.fixtures import fixture_path


EX1 = fixture_path("ex1.quiv")
EX2 = fixture_path("ex2.quiv")


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# -- info ----------------------------------------------------------------------


def test_info_human(capsys):
    code, out, err = run(capsys, "info", EX1, "C")
    assert code == 0 and err == ""
    assert "dim          11" in out
    assert "triangular   true" in out


def test_info_json(capsys):
    code, out, _ = run(capsys, "info", EX2, "Ctilde", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["dim"] == 16
    assert d["center_dim"] == 3
    assert d["zero_length"] > 0


# -- hh ------------------------------------------------------------------------


def test_hh_literal_dimension_line(capsys):
    code, out, _ = run(capsys, "hh", EX1, "Ctilde", "--degree", "1")
    assert code == 0
    assert "dim HH^1 = 2" in out
    assert out.count("representative") == 2


def test_hh_degree_zero(capsys):
    code, out, _ = run(capsys, "hh", EX2, "B", "--degree", "0")
    assert code == 0
    assert "dim HH^0 = 2" in out


def test_hh_json_with_oracle(capsys):
    code, out, _ = run(
        capsys, "hh", EX2, "Ctilde", "--format", "json", "--oracle"
    )
    assert code == 0
    d = json.loads(out)
    assert d["degrees"]["0"]["dim"] == 3
    assert d["degrees"]["1"]["dim"] == 3
    assert d["oracle"]["agrees"] is True
    assert d["oracle"]["bar_dims"] == {"0": 3, "1": 3}


def test_hh_oracle_human(capsys):
    code, out, _ = run(capsys, "hh", EX1, "B", "--oracle")
    assert code == 0
    assert "oracle" in out and "agree" in out


# -- hcoh ----------------------------------------------------------------------


def test_hcoh_human(capsys):
    code, out, _ = run(capsys, "hcoh", EX1, "B", "--arrows", "eps")
    assert code == 0
    assert "dim H^0 = 0" in out
    assert "dim H^1 = 1" in out


def test_hcoh_json(capsys):
    code, out, _ = run(
        capsys,
        "hcoh",
        EX2,
        "Ctilde",
        "--arrows",
        "eps,eps2",
        "--format",
        "json",
        "--oracle",
    )
    assert code == 0
    d = json.loads(out)
    assert d["degrees"]["0"]["dim"] == 2
    assert d["degrees"]["1"]["dim"] == 2
    assert d["oracle"]["agrees"] is True


def test_hcoh_unknown_arrow(capsys):
    code, out, err = run(capsys, "hcoh", EX1, "B", "--arrows", "zeta")
    assert code == 2
    assert err.startswith("error:")


# -- verify --------------------------------------------------------------------


def test_verify_human_all_pass(capsys):
    code, out, _ = run(
        capsys, "verify", EX2, "--base", "C", "--tilde", "Ctilde",
        "--split", "eps",
    )
    assert code == 0
    assert out.count("PASS") >= 4
    assert "FAIL" not in out
    assert "result: ALL PASS" in out


def test_verify_json_schema(capsys):
    code, out, _ = run(
        capsys, "verify", EX2, "--base", "C", "--tilde", "Ctilde",
        "--split", "eps", "--format", "json",
    )
    assert code == 0
    d = json.loads(out)
    assert d["command"] == "verify"
    assert d["hh1_C"] == 1 and d["hh1_B"] == 2 and d["hh1_Ctilde"] == 3
    assert d["h1_B_Eprime"] == 1
    assert d["curlyE_Esec_B"] == 0
    assert [r["pass"] for r in d["rows"]] == [True, True, True, True]
    assert set(d["phi_ranks"]) == {
        "deg0_B_to_C",
        "deg1_B_to_C",
        "deg0_Ctilde_to_B",
        "deg1_Ctilde_to_B",
    }


def test_verify_default_split_is_all_new_arrows(capsys):
    code, out, _ = run(
        capsys, "verify", EX1, "--base", "C", "--tilde", "Ctilde",
        "--format", "json",
    )
    assert code == 0
    d = json.loads(out)
    assert d["split"] == ["eps", "eps2"]
    assert d["all_pass"] is True


def test_verify_empty_split(capsys):
    code, out, _ = run(
        capsys, "verify", EX1, "--base", "C", "--tilde", "Ctilde",
        "--split", "", "--format", "json",
    )
    assert code == 0
    d = json.loads(out)
    assert d["split"] == []
    assert d["hh1_B"] == d["hh1_C"]


def test_verify_json_byte_stable(capsys):
    args = (
        "verify", EX2, "--base", "C", "--tilde", "Ctilde",
        "--split", "eps2", "--format", "json",
    )
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    assert first.endswith("\n")


# -- poset ---------------------------------------------------------------------


def test_poset_human(capsys):
    code, out, _ = run(capsys, "poset", EX1, "--base", "C", "--tilde", "Ctilde")
    assert code == 0
    assert "monotone" in out and "surjective" in out


def test_poset_json(capsys):
    code, out, _ = run(
        capsys, "poset", EX2, "--base", "C", "--tilde", "Ctilde",
        "--format", "json",
    )
    assert code == 0
    d = json.loads(out)
    assert [n["dim_hh1"] for n in d["nodes"]] == [1, 2, 2, 3]
    assert len(d["edges"]) == 4
    assert d["triangles_commute"] is True


# -- ext2 and cup ----------------------------------------------------------------


def test_ext2(capsys):
    code, out, _ = run(capsys, "ext2", EX1, "C", "--format", "json")
    assert code == 0
    assert json.loads(out)["ext2_dimension"] == 2


def test_cup(capsys):
    code, out, _ = run(capsys, "cup", EX2, "Ctilde", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["unit_law"] is True
    for pair in d["pairs"]:
        assert pair["product_is_cocycle"] is True
        assert pair["commutator_is_coboundary"] is True


# -- field override and failure modes -------------------------------------------


def test_field_override(capsys):
    code, out, _ = run(
        capsys, "hh", EX2, "Ctilde", "--field", "F7", "--format", "json"
    )
    assert code == 0
    d = json.loads(out)
    assert d["field"] == "F7"
    assert d["degrees"]["1"]["dim"] == 3


def test_bad_field_spec(capsys):
    code, _, err = run(capsys, "info", EX1, "C", "--field", "F4")
    assert code == 2 and err.startswith("error:")


def test_unknown_algebra_name(capsys):
    code, _, err = run(capsys, "info", EX1, "Z")
    assert code == 2
    assert "Z" in err and "available" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "info", "/nonexistent/path.quiv", "C")
    assert code == 2 and err.startswith("error:")


def test_parse_error_reports_line(capsys, tmp_path):
    bad = tmp_path / "bad.quiv"
    bad.write_text("algebra A\nvertices 1\narrow a 1 9\nend\n")
    code, _, err = run(capsys, "info", str(bad), "A")
    assert code == 2
    assert "line 3" in err


def test_unknown_split_arrow(capsys):
    code, _, err = run(
        capsys, "verify", EX1, "--base", "C", "--tilde", "Ctilde",
        "--split", "bogus",
    )
    assert code == 2 and err.startswith("error:")
