import io
import json

import pytest

from cyclocode.cli import run

REF_FIELD = ["--p", "5", "--s", "1", "--m", "2", "--modulus", "2,4,1"]
EX1 = REF_FIELD + ["--e", "4", "--t", "3", "--deltas", "1,2,3"]


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_construct():
    code, out, _ = call("construct", *EX1, "--a", "2")
    assert code == 0
    assert "(8,14,20)" in out
    assert "x^6 + 3x^5 + 3x^3 + 3x + 4" in out
    lines = dict(line.split(None, 1) for line in out.splitlines())
    assert lines["N"] == "2" and lines["delta"] == "2" and lines["n"] == "12"


def test_theorem_and_enumeration_json_identical():
    _, a, _ = call("weights", *EX1, "--a", "2", "--method", "theorem", "--format", "json")
    _, b, _ = call("weights", *EX1, "--a", "2", "--method", "enumerate", "--format", "json")
    da, db = json.loads(a), json.loads(b)
    assert json.dumps(da["distribution"]) == json.dumps(db["distribution"])
    assert da["method"] == "theorem1" and db["method"] == "enumeration"
    assert da["checks"] == {"first_moment": "pass", "sum_freq": "pass"}
    assert da["params"]["n"] == 12 and da["min_distance"] == 4
    assert all(isinstance(row["frequency"], str) for row in da["distribution"])


def test_json_round_trip():
    _, text, _ = call("weights", *EX1, "--a", "1", "--format", "json")
    assert json.dumps(json.loads(text), sort_keys=True, indent=2) + "\n" == text


def test_auto_tag():
    _, text, _ = call("weights", *EX1, "--a", "1", "--method", "auto", "--format", "json")
    assert json.loads(text)["method_detail"] == "theorem2(Table IV)"


def test_verify_second_example():
    code, out, _ = call("verify", "--p", "5", "--s", "1", "--m", "2", "--e", "4", "--t", "3",
                        "--a", "1", "--deltas", "1,2,3")
    assert code == 0
    assert out.splitlines()[-1] == "ALL CHECKS PASS (enumeration = tracesum = theorem3; moments ok)"


def test_theorem_preconditions_exit_2():
    code, _, err = call("weights", "--p", "3", "--m", "3", "--e", "2", "--t", "2", "--a", "1",
                        "--deltas", "0,1", "--method", "theorem")
    assert code == 2
    assert "theorem preconditions not met: N=1" in err


def test_auto_falls_back_to_enumeration():
    code, out, _ = call("weights", "--p", "3", "--m", "3", "--e", "2", "--t", "2", "--a", "1",
                        "--deltas", "0,1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["method"] == "enumeration"
    assert "fallback" in data["method_detail"]


def test_condition_error_exit_2():
    code, _, err = call("weights", *REF_FIELD, "--e", "4", "--t", "3", "--a", "1", "--deltas", "1,5,3")
    assert code == 2
    assert "condition ii: deltas not distinct mod e" in err


def test_invalid_third_instance_reports_condition_i():
    code, _, err = call("verify", "--p", "3", "--s", "2", "--m", "2", "--e", "3", "--t", "2",
                        "--a", "2", "--deltas", "1,2")
    assert code == 2
    assert "condition i" in err


def test_budget_exit_3():
    code, _, err = call("weights", *EX1, "--a", "1", "--method", "enumerate", "--budget", "10")
    assert code == 3
    assert "budget" in err


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("CYCLOCODE_BUDGET", "10")
    code, _, _ = call("weights", *EX1, "--a", "1", "--method", "tracesum")
    assert code == 3


def test_threads_deterministic():
    one = call("weights", *EX1, "--a", "1", "--method", "enumerate", "--threads", "1")
    four = call("weights", *EX1, "--a", "1", "--method", "enumerate", "--threads", "4")
    assert one == four


def test_csv_output():
    _, out, _ = call("weights", *EX1, "--a", "2", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "weight,frequency"
    assert "11,3168" in lines


def test_out_file(tmp_path):
    target = tmp_path / "dist.json"
    code, out, _ = call("weights", *EX1, "--a", "2", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["min_distance"] == 4


def test_omega_all():
    code, out, _ = call("omega", "--pattern", "0011", "--field", "5,1,2")
    assert code == 0
    assert "agreement  PASS" in out
    assert "864" in out


def test_omega_single_method_json():
    _, out, _ = call("omega", "--pattern", "0001", "--field", "5,1,2", "--method", "closed",
                     "--format", "json")
    assert json.loads(out) == {"closed": 792, "pattern": "0001"}


def test_charsum_periods_and_jacobi():
    _, out, _ = call("charsum", "--p", "5", "--m", "2", "--format", "json")
    data = json.loads(out)
    assert (data["eta_0"], data["eta_1"]) == ("-3", "2")
    _, out, _ = call("charsum", "--p", "5", "--m", "2", "--kind", "jacobi", "--chars", "rho,rho",
                     "--format", "json")
    data = json.loads(out)
    assert data["brute_force"] == data["closed_form"] == "-1"


def test_field_info():
    code, out, _ = call("field-info", *REF_FIELD, "--gamma", "0,1", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["r"] == 25 and data["minus_one"] == "g^12" and data["trace_q_of_gamma"] == "g^0"


def test_unknown_flag_rejected():
    with pytest.raises(SystemExit) as exc:
        call("field-info", "--p", "5", "--m", "2", "--bogus", "1")
    assert exc.value.code == 2


def test_bad_modulus_exit_2():
    code, _, err = call("field-info", "--p", "5", "--m", "2", "--modulus", "1,2,1")
    assert code == 2
    assert "reducible" in err
