import json
import os
from fractions import Fraction

import pytest

from frobnf.cli import main

HERE = os.path.dirname(__file__)
PROBLEMS = os.path.join(HERE, os.pardir, "problems")
EX1 = os.path.join(PROBLEMS, "example_sqrt2.json")
PAIR = os.path.join(PROBLEMS, "pair_3_5.json")
CUBIC = os.path.join(PROBLEMS, "cubic.json")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_measures(capsys):
    code, rep = run_json(capsys, "measures", EX1)
    assert code == 0
    assert rep["D"] == "9"
    assert rep["Delta_K"] == "8"
    assert rep["minors"] == ["1", "2", "2"]
    assert rep["M"] == "2"


def test_represent(capsys):
    code, rep = run_json(capsys, "represent", EX1, "--beta", "3,1")
    assert code == 0
    assert rep["r"] == "0"
    assert rep["complete"] is True
    assert rep["box"] == "2"
    assert rep["reps"] == []

    code, rep = run_json(capsys, "represent", EX1, "--beta", "10,3")
    assert code == 0
    assert rep["r"] == "1"
    assert rep["reps"] == [["0", "1", "1"]]
    assert rep["min_rep"] == ["0", "1", "1"]
    assert rep["sandwich_holds"] is True


def test_bound(capsys):
    code, rep = run_json(capsys, "bound", EX1, "--s", "1")
    assert code == 0
    assert rep["ceiling"] == "4"
    lo, hi = Fraction(rep["bound"]["lo"]), Fraction(rep["bound"]["hi"])
    assert Fraction(318, 100) < lo <= hi < Fraction(319, 100)


def test_height(capsys):
    code, rep = run_json(capsys, "height", EX1, "--beta", "3,1")
    assert code == 0
    assert rep["exact"] == "7"
    assert rep["H_K"] == {"lo": "7", "hi": "7"}


def test_validate(capsys):
    code, rep = run_json(capsys, "validate", EX1)
    assert code == 0
    assert rep["spanning"] and rep["totally_positive"] and rep["pointed"]
    assert rep["Delta_K"] == "8"


def test_witness(capsys):
    code, rep = run_json(capsys, "witness", EX1)
    assert code == 0
    assert rep["found"] is True
    assert rep["witness"] == ["3", "1"]
    assert rep["r"] == "0"


def test_count(capsys):
    code, rep = run_json(capsys, "count", PAIR)
    assert code == 0
    assert rep["sum_r"] == ["20", "20"]
    assert rep["count_sg_s"] == ["17", "17"]
    assert rep["lower_bound"] == "4"
    assert rep["upper_holds"] is True and rep["lower_holds"] is True
    assert rep["ambiguous_heights"] == "0"


def test_frobenius_exact(capsys):
    code, rep = run_json(capsys, "frobenius-exact", PAIR, "--s", "1")
    assert code == 0
    assert rep["g"] == "7"
    assert rep["bound_respected"] is True

    code, rep = run_json(capsys, "frobenius-exact", EX1)
    assert code == 1
    assert rep["error"] == "FrobnfError"


def test_frobenius_search(capsys):
    code, rep = run_json(capsys, "frobenius-search", EX1, "--beta", "4,1",
                         "--s", "2", "--t-max", "2", "--shell-limit", "11")
    assert code == 0
    assert rep["found"] is True
    assert rep["t_falsified"] == "1"
    assert rep["witness"] == ["11", "3"]
    assert rep["recheck"] is True
    assert rep["contradicts_upper_bound"] is False


def test_verify(capsys):
    code, rep = run_json(capsys, "verify", EX1)
    assert code == 0
    assert rep["status"] == "verified"
    assert rep["red_alerts"] == []
    assert rep["height_counting"]["upper_holds"] is True
    assert rep["gap_corollaries"]["D_holds"] is True

    code, rep = run_json(capsys, "verify", CUBIC)
    assert code == 0
    assert rep["status"] == "verified"


def test_plotdata(capsys):
    code, out = run(capsys, "plotdata", EX1, "--box", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "sigma1,sigma2,r"
    assert len(lines) == 1 + 9
    # origin row: sigma values 0, one representation (the empty sum)
    assert "0,0,1" in lines


def test_determinism(capsys):
    _, out1 = run(capsys, "count", EX1, "--t1", "2", "--t2", "20")
    _, out2 = run(capsys, "count", EX1, "--t1", "2", "--t2", "20")
    assert out1 == out2
    _, v1 = run(capsys, "verify", EX1)
    _, v2 = run(capsys, "verify", EX1)
    assert v1 == v2


def test_round_trip_of_report_values(capsys):
    _, rep = run_json(capsys, "count", EX1)
    for key in ("sum_r", "count_sg_s"):
        for v in rep[key]:
            assert str(int(v)) == v
    ub = rep["upper_bound"]
    assert Fraction(ub["lo"]) <= Fraction(ub["hi"])
    for member in rep["members"]:
        assert all(str(int(c)) == c for c in member["beta"])


def test_parse_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, rep = run_json(capsys, "validate", str(bad))
    assert code == 1
    assert rep["error"] == "ParseError"
    assert "bad.json:1:" in rep["message"]

    missing_field = tmp_path / "missing.json"
    missing_field.write_text(json.dumps({"generators": [[1]]}))
    code, rep = run_json(capsys, "validate", str(missing_field))
    assert code == 1
    assert "field" in rep["message"]

    not_real = tmp_path / "notreal.json"
    not_real.write_text(json.dumps({
        "field": {"poly": [1, 0, 1], "basis": [["1", "0"], ["0", "1"]]},
        "generators": [[1, 0]],
    }))
    code, rep = run_json(capsys, "validate", str(not_real))
    assert code == 1
    assert rep["error"] == "NotTotallyReal"

    bad_beta = tmp_path / "badbeta.json"
    bad_beta.write_text(json.dumps({
        "field": {"poly": [-2, 0, 1], "basis": [["1", "0"], ["0", "1"]]},
        "generators": [[1, 0], [4, 1], [6, 2]],
    }))
    code, rep = run_json(capsys, "height", str(bad_beta), "--beta", "1,x")
    assert code == 1
    assert rep["error"] == "ParseError"


def test_nonexistent_file(capsys):
    code, rep = run_json(capsys, "validate", "/nonexistent/spec.json")
    assert code == 1
    assert rep["error"] == "ParseError"


def test_work_limit_exit_code(capsys):
    code, rep = run_json(capsys, "count", EX1, "--t2", "10000",
                         "--work-limit", "1000")
    assert code == 2
    assert rep["error"] == "BoxTooLarge"
