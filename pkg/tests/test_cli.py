"""End-to-end command-line contract: parsing, payloads, exit codes."""

import json
import os

import pytest

from hypercenter.cli import main
from hypercenter.verify.suites import _DEFAULT_COUNTS, SUITES, CheckResult

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def fixture(name: str) -> str:
    return os.path.join(FIXTURES, name)


def run_json(capsys, argv):
    code = main(argv + ["--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def write(tmp_path, text: str) -> str:
    p = tmp_path / "instance.toml"
    p.write_text(text)
    return str(p)


MIXED = """
char = 0
[lattice]
rank = 1
[finite]
elements = ["e", "s"]
table = [["e", "s"], ["s", "e"]]
[action_on_lattice]
s = [[1]]
[lie]
dim = 1
brackets = []
weights = [[1]]
[lie.action]
s = [[-1]]
"""

UNDETERMINED = """
char = 0
[lattice]
rank = 2
[finite]
elements = ["e", "a", "b", "c"]
table = [["e","a","b","c"],["a","e","c","b"],["b","c","e","a"],["c","b","a","e"]]
[action_on_lattice]
a = [[-1, 0], [0, 1]]
b = [[1, 0], [0, -1]]
"""

PERMS = """
char = 0
[lattice]
rank = 1
[finite]
permutations = [[1, 0, 2], [0, 2, 1]]
[action_on_lattice]
"""


def test_ucs_example1_text(capsys):
    code = main(["--input", fixture("example1.toml"), "--op", "ucs"])
    out = capsys.readouterr().out
    assert code == 0
    assert "terminal: omega*1+1" in out
    assert "Z[1]: M dim 0; Y = [[2]]" in out
    assert "unit-split" in out


def test_ucs_json_round_trips(capsys):
    code, rep = run_json(capsys, ["--input", fixture("example1.toml"), "--op", "ucs"])
    assert code == 0
    assert rep["operation"] == "ucs" and rep["status"] == "ok"
    # emit-then-parse identity
    assert json.loads(json.dumps(rep)) == rep
    stages = rep["result"]["stages"]
    assert stages[0]["ordinal"] == "1"
    assert stages[0]["subgroup"]["Y"] == [[2]]
    assert rep["result"]["terminal"] == "omega*1+1"
    # normalized ordinals: finite stages carry no omega prefix
    assert not any(s["ordinal"].startswith("omega*0") for s in stages)


def test_ucs_stages_ascend(capsys):
    code, rep = run_json(capsys, ["--input", fixture("dihedral_dual.toml"), "--op", "ucs"])
    assert code == 0
    ys = [s["subgroup"]["Y"] for s in rep["result"]["stages"]]
    # Y shrinks as the stages grow: orders 2, 4, then the whole group
    assert ys == [[[2]], [[4]], [[8]]]


def test_validate_reports_shape(capsys):
    code, rep = run_json(capsys, ["--input", fixture("heisenberg_torus.toml"), "--op", "validate"])
    assert code == 0
    assert rep["result"] == {
        "char": 0,
        "lattice": {"rank": 1, "torsion": []},
        "finite_order": 1,
        "lie_dim": 3,
        "faithful_dim": 3,
    }


def test_center_and_zomega(capsys):
    code, rep = run_json(capsys, ["--input", fixture("heisenberg_torus.toml"), "--op", "center"])
    assert code == 0
    assert rep["result"]["center"]["M"] == [["0", "0", "1"]]
    code, rep = run_json(capsys, ["--input", fixture("heisenberg_torus.toml"), "--op", "zomega"])
    assert code == 0
    assert len(rep["result"]["z_omega"]["M"]) == 3


def test_nilclass_with_declared_dimension(capsys):
    code, rep = run_json(capsys, ["--input", fixture("heisenberg_torus.toml"), "--op", "nilclass"])
    assert code == 0
    r = rep["result"]
    assert r["nilpotent"] and r["nilpotency_class"] == 2
    assert r["faithful_dim"] == 3 and r["class_bound"] == 4
    assert r["nilpotency_class"] <= r["class_bound"]


def test_rads_on_connected(capsys):
    code, rep = run_json(capsys, ["--input", fixture("ga_gm.toml"), "--op", "rads"])
    assert code == 0
    assert len(rep["result"]["unipotent_radical"]["M"]) == 1
    assert rep["result"]["solvable_radical"]["Y"] == []


def test_exit_0_verify(capsys):
    code, rep = run_json(capsys, ["--op", "verify", "--suite", "class-bound"])
    assert code == 0
    assert rep["status"] == "ok"
    assert rep["result"]["counts"] == {"pass": 2, "fail": 0, "skip": 0}


def test_exit_1_verify_failure(capsys, monkeypatch):
    def broken(seed, count):
        return [CheckResult("bad", "inst", "fail", "center-standard", "boom")]

    monkeypatch.setitem(SUITES, "broken", broken)
    monkeypatch.setitem(_DEFAULT_COUNTS, "broken", 1)
    code, rep = run_json(capsys, ["--op", "verify", "--suite", "broken"])
    assert code == 1
    assert rep["status"] == "failures"
    assert rep["result"]["counts"]["fail"] == 1


def test_exit_2_parse_error(tmp_path, capsys):
    path = write(tmp_path, "char = 'x'\n")
    assert main(["--input", path, "--op", "validate"]) == 2
    assert "char" in capsys.readouterr().err


def test_exit_2_missing_file(capsys):
    assert main(["--input", "/no/such/file.toml", "--op", "validate"]) == 2
    assert "error:" in capsys.readouterr().err


def test_exit_2_missing_input_flag(capsys):
    assert main(["--op", "center"]) == 2


def test_exit_2_unknown_suite(capsys):
    assert main(["--op", "verify", "--suite", "nope"]) == 2


def test_exit_3_mixed_center(tmp_path, capsys):
    path = write(tmp_path, MIXED)
    assert main(["--input", path, "--op", "center"]) == 3
    assert "not a standard subgroup" in capsys.readouterr().err
    assert main(["--input", path, "--op", "ucs"]) == 3


def test_exit_4_undetermined_limit(tmp_path, capsys):
    path = write(tmp_path, UNDETERMINED)
    assert main(["--input", path, "--op", "ucs"]) == 4
    assert "stable span" in capsys.readouterr().err
    assert main(["--input", path, "--op", "hypercenter"]) == 4


def test_exit_5_fitting_disconnected(capsys):
    code = main(["--input", fixture("example1.toml"), "--op", "fitting"])
    err = capsys.readouterr().err
    assert code == 5
    assert "requires connected group" in err


def test_oracle_compare_fixture(capsys):
    code, rep = run_json(capsys, ["--input", fixture("dihedral_dual.toml"), "--op", "oracle-compare"])
    assert code == 0
    assert rep["result"]["counts"]["fail"] == 0
    assert rep["result"]["counts"]["pass"] >= 4


def test_permutation_input(tmp_path, capsys):
    path = write(tmp_path, PERMS)
    code, rep = run_json(capsys, ["--input", path, "--op", "validate"])
    assert code == 0
    assert rep["result"]["finite_order"] == 6


def test_action_closure_completes_from_generators(tmp_path, capsys):
    # the rotation alone generates the cyclic group; its powers are filled in
    text = """
char = 0
[lattice]
rank = 2
[finite]
elements = ["e", "r", "r2"]
table = [["e","r","r2"],["r","r2","e"],["r2","e","r"]]
[action_on_lattice]
r = [[0, -1], [1, -1]]
"""
    path = write(tmp_path, text)
    code, rep = run_json(capsys, ["--input", path, "--op", "center"])
    assert code == 0
    assert rep["result"]["center"]["K"] == ["e"]


def test_action_closure_requires_generating_set(tmp_path, capsys):
    path = write(tmp_path, UNDETERMINED.replace("a = [[-1, 0], [0, 1]]\n", ""))
    assert main(["--input", path, "--op", "validate"]) == 2
    assert "do not generate" in capsys.readouterr().err


def test_verify_text_lines(capsys):
    code = main(["--op", "verify", "--suite", "class-bound"])
    out = capsys.readouterr().out
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln.startswith("PASS")]
    assert len(lines) == 2
    assert "passed 2, failed 0, skipped 0" in out
