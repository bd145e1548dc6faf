"""Command-line interface: commands, formats, exit codes, determinism."""

import json
import os

import pytest

from polysaddle import cli
from polysaddle import bipoly as bp

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def problem(name):
    return os.path.join(ROOT, "problems", name)


def write_problem(tmp_path, payload, name="prob.json"):
    p = tmp_path / name
    p.write_text(json.dumps(payload))
    return str(p)


def run(capsys, *argv):
    code = cli.main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out + cap.err


# construct

def test_construct_cusp_json(capsys):
    code, out = run(capsys, "construct", problem("cusp_level.json"), "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["schema_version"] == "1"
    assert rep["name"] == "cusp-level"
    assert rep["results"]["field"] == {"P": "x", "Q": "-2*y"}
    assert rep["results"]["degree_m"] == 1
    assert rep["results"]["degree_check"]["status"] == "Holds"


def test_construct_reports_given_field(capsys, tmp_path):
    path = write_problem(tmp_path, {
        "name": "t",
        "factors": [{"poly": "x", "exponent": 1}, {"poly": "y", "exponent": 1}],
        "field": {"p": "x", "q": "-y"},
    })
    code, out = run(capsys, "construct", path, "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["results"]["given_field"]["annihilates_integral"]["status"] == "Holds"


def test_construct_given_wrong_field_fails(capsys, tmp_path):
    path = write_problem(tmp_path, {
        "name": "t",
        "factors": [{"poly": "x", "exponent": 1}, {"poly": "y", "exponent": 1}],
        "field": {"p": "x", "q": "y"},
    })
    code, out = run(capsys, "construct", path, "--format", "json")
    assert code == 1
    rep = json.loads(out)
    blk = rep["results"]["given_field"]["annihilates_integral"]
    assert blk["status"] == "Fails"
    assert blk["witness"] == "2*x*y"  # the nonzero Lie derivative


# analyze

def test_analyze_cusp(capsys):
    code, out = run(capsys, "analyze", problem("cusp_level.json"), "--format", "json")
    assert code == 0
    r = json.loads(out)["results"]
    assert r["critical_values"] == ["0"]
    assert r["residual"] is None
    assert r["s"] == 1
    assert r["integrating_factor"] == "x"
    for check in r["checks"].values():
        assert check["status"] == "Holds"


def test_analyze_hamiltonian_branch(capsys):
    code, out = run(capsys, "analyze", problem("product_saddle.json"), "--format", "json")
    assert code == 0
    r = json.loads(out)["results"]
    assert r["hamiltonian"]["potential"] == "x*y"
    assert r["hamiltonian"]["annihilates"]["status"] == "Holds"
    assert len(r["hamiltonian"]["cofactors"]) == 2


# cz

def test_cz_product_saddle_holds(capsys):
    code, out = run(capsys, "cz", problem("product_saddle.json"), "--format", "json")
    assert code == 0
    r = json.loads(out)["results"]
    assert r["overall"]["status"] == "Holds"


def test_cz_twin_parabolas_fails(capsys):
    code, out = run(capsys, "cz", problem("twin_parabolas.json"), "--format", "json")
    assert code == 1
    r = json.loads(out)["results"]
    assert r["condition_ii_leading_squarefree"]["status"] == "Fails"
    assert r["condition_iv_leading_coprime"]["status"] == "Fails"
    assert r["overall"]["status"] == "Fails"


def test_cz_three_lines_triple_point(capsys):
    code, out = run(capsys, "cz", problem("three_lines.json"), "--format", "json")
    assert code == 1
    r = json.loads(out)["results"]
    assert r["condition_i_nonsingular"]["status"] == "Holds"
    assert r["condition_iii_transversal_no_triples"]["status"] == "Fails"
    assert r["condition_iii_transversal_no_triples"]["witness"] == {"x": "0", "y": "0"}


# linearize

def test_linearize_twin(capsys):
    code, out = run(capsys, "linearize", problem("twin_parabolas.json"),
                    "--format", "json")
    assert code == 0
    r = json.loads(out)["results"]
    assert r["u"] == "-x^2 + y"
    assert r["D"] == "-8*x"
    assert r["time_change"] == "dtau = (-8*x) / (1) dt"
    assert r["certificate"]["status"] == "Holds"


def test_linearize_pivot(capsys):
    code, out = run(capsys, "linearize", problem("cusp_level.json"),
                    "--pivot", "1", "--format", "json")
    assert code == 0
    r = json.loads(out)["results"]
    assert r["v"] == "x^2"
    assert r["D"] == "-2"


def test_linearize_wrong_field_exit_1(capsys, tmp_path):
    path = write_problem(tmp_path, {
        "name": "t",
        "factors": [{"poly": "x", "exponent": 1}, {"poly": "y", "exponent": 1}],
        "field": {"p": "x", "q": "y"},
    })
    code, out = run(capsys, "linearize", path, "--format", "json")
    assert code == 1
    r = json.loads(out)["results"]
    assert r["certificate"]["status"] == "Fails"
    assert r["certificate"]["witness"] == "2*x*y"


def test_linearize_pivot_out_of_range_exit_2(capsys):
    code, _ = run(capsys, "linearize", problem("cusp_level.json"), "--pivot", "7")
    assert code == 2


# simulate

def test_simulate_basic(capsys):
    code, out = run(capsys, "simulate", problem("cusp_level.json"),
                    "--x0", "0.7", "--y0", "0.4", "--steps", "100",
                    "--step", "0.001", "--format", "json")
    assert code == 0
    r = json.loads(out)["results"]
    assert r["points"] == 101
    assert not r["truncated"]
    assert r["drift"] < 1e-9


def test_simulate_csv(capsys, tmp_path):
    dest = tmp_path / "orbit.csv"
    code, _ = run(capsys, "simulate", problem("cusp_level.json"),
                  "--steps", "5", "--csv", str(dest))
    assert code == 0
    lines = dest.read_text().splitlines()
    assert lines[0] == "t,x,y,H"
    assert len(lines) == 7


def test_simulate_bad_steps_exit_2(capsys):
    code, _ = run(capsys, "simulate", problem("cusp_level.json"), "--steps", "0")
    assert code == 2


# all

def test_all_cusp(capsys):
    code, out = run(capsys, "all", problem("cusp_level.json"), "--format", "json")
    assert code == 0
    rep = json.loads(out)
    for section in ("construct", "analyze", "cz", "linearize", "simulate"):
        assert section in rep["results"]


def test_all_single_factor_skips_linearize(capsys, tmp_path):
    path = write_problem(tmp_path, {
        "name": "t", "factors": [{"poly": "x^2 + y^2 - 1", "exponent": 1}]})
    code, out = run(capsys, "all", path, "--format", "json")
    rep = json.loads(out)
    assert "skipped" in rep["results"]["linearize"]


# input validation: exit 2 with position info

def test_unknown_variable_message(capsys, tmp_path):
    path = write_problem(tmp_path, {
        "name": "t", "factors": [{"poly": "x + z", "exponent": 1}]})
    code, out = run(capsys, "analyze", path)
    assert code == 2
    assert "factor 1" in out and "unknown variable" in out and "column 5" in out


def test_empty_factors_exit_2(capsys, tmp_path):
    path = write_problem(tmp_path, {"name": "t", "factors": []})
    code, _ = run(capsys, "analyze", path)
    assert code == 2


def test_missing_file_exit_2(capsys):
    code, _ = run(capsys, "analyze", "/nonexistent/never.json")
    assert code == 2


def test_malformed_json_exit_2(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    code, _ = run(capsys, "analyze", str(p))
    assert code == 2


def test_shared_factor_exit_2(capsys, tmp_path):
    path = write_problem(tmp_path, {
        "name": "t",
        "factors": [{"poly": "x*y", "exponent": 1}, {"poly": "x", "exponent": 1}]})
    code, out = run(capsys, "analyze", path)
    assert code == 2


# determinism

def test_json_byte_identical(capsys):
    _, a = run(capsys, "all", problem("twin_parabolas.json"), "--format", "json")
    _, b = run(capsys, "all", problem("twin_parabolas.json"), "--format", "json")
    assert a == b


# exit-code policy

def test_exit_code_policy():
    holds = {"status": "Holds"}
    fails = {"status": "Fails"}
    inc = {"status": "Inconclusive"}
    assert cli._exit_code({"a": holds}, strict=False) == 0
    assert cli._exit_code({"a": {"nested": fails}}, strict=False) == 1
    assert cli._exit_code({"a": inc}, strict=False) == 0
    assert cli._exit_code({"a": inc}, strict=True) == 3
    assert cli._exit_code({"a": inc, "b": fails}, strict=True) == 1  # Fails wins


def test_strict_flag_surfaces_inconclusive(capsys, tmp_path, monkeypatch):
    # force the single-critical-value criterion to report Inconclusive
    # while every other check holds
    path = write_problem(tmp_path, {
        "name": "t",
        "factors": [{"poly": "x", "exponent": 2}, {"poly": "y", "exponent": 1}]})
    monkeypatch.setattr(
        cli, "single_critical_value_criterion",
        lambda F, X: bp.inconclusive("forced for the exit-code test"))
    code, out = run(capsys, "analyze", path, "--strict", "--format", "json")
    assert code == 3
    r = json.loads(out)["results"]
    assert r["checks"]["single_critical_value"]["status"] == "Inconclusive"
    code2, _ = run(capsys, "analyze", path, "--format", "json")
    assert code2 == 0  # without --strict the same run exits 0


def test_text_format_renders_nested(capsys):
    code, out = run(capsys, "cz", problem("product_saddle.json"))
    assert code == 0
    assert "problem: product-saddle" in out
    assert "status: Holds" in out
