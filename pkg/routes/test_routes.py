import json

import pytest

from main import run
from services import verify_service
from services.linear import Combination


def invoke(capsys, *argv):
    status = run(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_lyndon_lines(capsys):
    status, out, _ = invoke(capsys, "lyndon", "--max-length", "4", "--format", "lines")
    assert status == 0
    assert out.split() == ["0", "0001", "001", "0011", "01", "011", "0111", "1"]


def test_lyndon_json(capsys):
    status, out, _ = invoke(capsys, "lyndon", "--max-length", "2")
    assert status == 0
    assert json.loads(out) == ["0", "01", "1"]


def test_alpha_csv(capsys):
    status, out, _ = invoke(capsys, "coeffs", "--family", "alpha", "--max-weight", "2", "--format", "csv")
    assert status == 0
    assert out == "W,U,V,value\n01,0,1,1\n"


def test_beta_json(capsys):
    status, out, _ = invoke(capsys, "coeffs", "--family", "beta", "--max-weight", "2")
    assert status == 0
    assert json.loads(out) == [{"W": "01", "U": "1", "V": "0", "value": "1"}]


def test_cobracket_json(capsys):
    status, out, _ = invoke(capsys, "cobracket", "T0:01")
    assert status == 0
    data = json.loads(out)
    assert data["basis"] == "t01"
    assert data["terms"] == [{"left": "T0:1", "right": "T1:0", "coeff": "-1"}]


def test_bad_tag_is_a_usage_error(capsys):
    status, out, err = invoke(capsys, "cobracket", "T9:01")
    assert status == 2
    assert out == ""
    assert "bad tag" in err


def test_unknown_subcommand_is_a_usage_error(capsys):
    status, _, _ = invoke(capsys, "plot")
    assert status == 2


def test_weight_cap(capsys):
    status, _, err = invoke(capsys, "coeffs", "--family", "alpha", "--max-weight", "9")
    assert status == 2
    assert "allow-large" in err


def test_model_dump(capsys):
    status, out, _ = invoke(capsys, "model", "--space", "x", "--max-weight", "2")
    assert status == 0
    data = json.loads(out)
    assert [g["name"] for g in data["generators"]] == ["L0:1", "L1:0", "L0:01", "L1:01", "K:01"]
    assert data["differential"]["L0:01"] == [{"monomial": ["L0:1", "L1:0"], "coeff": "1"}]


def test_trees_lines(capsys):
    status, out, _ = invoke(capsys, "trees", "--leaves", "3", "--format", "lines")
    assert status == 0
    assert out == "[*,[*,*]]\n[[*,*],*]\n"


def test_lift_with_check(capsys):
    status, out, _ = invoke(capsys, "lift", "01", "--check")
    assert status == 0
    report = json.loads(out)
    assert report["generator"] == "L0:01"
    assert report["path"] == "oracle"
    assert {"slots": [["L0:01"]], "coeff": "1"} in report["terms"]
    assert all(c["status"] == "pass" for c in report["checks"])


def test_lift_of_a_letter_is_a_usage_error(capsys):
    status, _, _ = invoke(capsys, "lift", "0")
    assert status == 2


def test_verify_suite(capsys):
    status, out, _ = invoke(capsys, "verify", "--suite", "lie", "--max-weight", "3", "--samples", "5")
    assert status == 0
    report = json.loads(out)
    assert report["passed"] is True
    assert report["suites"] == ["lie"]


def test_unknown_suite(capsys):
    status, _, _ = invoke(capsys, "verify", "--suite", "nope", "--max-weight", "3")
    assert status == 2


def test_output_is_deterministic(capsys):
    first = invoke(capsys, "coeffs", "--family", "b", "--max-weight", "4")
    second = invoke(capsys, "coeffs", "--family", "b", "--max-weight", "4")
    assert first == second


def test_out_writes_a_file(capsys, tmp_path):
    target = tmp_path / "words.json"
    status, out, _ = invoke(capsys, "lyndon", "--max-length", "3", "--out", str(target))
    assert status == 0
    assert out == ""
    assert json.loads(target.read_text()) == ["0", "001", "01", "011", "1"]


@pytest.mark.parametrize("family", ["alpha", "beta", "gamma", "a", "b", "ap", "bp"])
def test_every_family_is_served(capsys, family):
    status, out, _ = invoke(capsys, "coeffs", "--family", family, "--max-weight", "3")
    assert status == 0
    assert isinstance(json.loads(out), list)


def test_bad_environment_is_a_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("LIEBAR_SEED", "abc")
    status, out, err = invoke(capsys, "lyndon", "--max-length", "2")
    assert status == 2
    assert out == ""
    assert "LIEBAR_SEED" in err


def test_strict_verify_prints_the_failed_checks(capsys, monkeypatch):
    monkeypatch.setattr(verify_service, "lift_of_tag", lambda tag, space="x": Combination())
    status, out, _ = invoke(capsys, "verify", "--suite", "edqx", "--max-weight", "2", "--strict")
    assert status == 1
    failed = json.loads(out)
    assert [c["check"] for c in failed] == ["cobracket of the L0 lift is the a/b combination of lifts [01]"]
    assert all(c["status"] == "fail" for c in failed)
