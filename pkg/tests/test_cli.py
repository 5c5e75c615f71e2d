import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from senvr import HarnessReport, parse_profile
from senvr.cli import main

FIXTURES = Path(__file__).resolve().parent.parent / "profiles"
EXAMPLE1 = str(FIXTURES / "example1.profile")
EXAMPLE2 = str(FIXTURES / "example2.profile")
CONDORCET = str(FIXTURES / "condorcet.profile")

NAME = {"type": "string"}
POSITIONS = {"type": "array", "items": {"type": "integer", "minimum": 1}}

CHECK_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["alternatives", "triples", "condition_holds", "tallies", "social"],
    "properties": {
        "alternatives": {"type": "array", "items": NAME, "minItems": 2},
        "triples": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": [
                    "members",
                    "concerned",
                    "parity_ok",
                    "value_restricted",
                    "ineq_witness",
                    "union_sets",
                    "sum_matrix",
                    "eq_witness",
                    "oracle_witness",
                ],
                "properties": {
                    "members": {
                        "type": "array", "items": NAME, "minItems": 3, "maxItems": 3,
                    },
                    "concerned": {
                        "type": "array", "items": {"type": "integer", "minimum": 1},
                    },
                    "parity_ok": {"type": "boolean"},
                    "value_restricted": {"type": "boolean"},
                    "ineq_witness": {"type": ["string", "null"]},
                    "union_sets": {
                        "type": "object", "additionalProperties": POSITIONS,
                    },
                    "sum_matrix": {
                        "type": "array",
                        "minItems": 3,
                        "maxItems": 3,
                        "items": {
                            "type": "array",
                            "minItems": 3,
                            "maxItems": 3,
                            "items": {"type": "integer", "minimum": 0},
                        },
                    },
                    "eq_witness": {
                        "oneOf": [
                            {"type": "null"},
                            {
                                "type": "array",
                                "minItems": 2,
                                "maxItems": 2,
                                "items": {
                                    "type": "integer", "minimum": 1, "maximum": 3,
                                },
                            },
                        ]
                    },
                    "oracle_witness": {
                        "oneOf": [
                            {"type": "null"},
                            {
                                "type": "object",
                                "additionalProperties": False,
                                "required": ["alternative", "value"],
                                "properties": {
                                    "alternative": NAME,
                                    "value": {"enum": ["best", "medium", "worst"]},
                                },
                            },
                        ]
                    },
                },
            },
        },
        "condition_holds": {"type": "boolean"},
        "tallies": {
            "type": "array",
            "items": {
                "type": "array", "items": {"type": "integer", "minimum": 0},
            },
        },
        "social": {
            "type": "object",
            "additionalProperties": False,
            "required": ["transitive", "ordering", "cycle"],
            "properties": {
                "transitive": {"type": "boolean"},
                "ordering": {
                    "oneOf": [
                        {"type": "null"},
                        {"type": "array", "items": {"type": "array", "items": NAME}},
                    ]
                },
                "cycle": {
                    "oneOf": [
                        {"type": "null"},
                        {
                            "type": "array",
                            "minItems": 3,
                            "maxItems": 3,
                            "items": NAME,
                        },
                    ]
                },
            },
        },
    },
}

PM_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["alternatives", "triple", "voters"],
    "properties": {
        "alternatives": {"type": "array", "items": NAME, "minItems": 2},
        "triple": {
            "oneOf": [
                {"type": "null"},
                {"type": "array", "items": NAME, "minItems": 3, "maxItems": 3},
            ]
        },
        "voters": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["voter", "ordering", "preference_map", "membership_matrix"],
                "properties": {
                    "voter": {"type": "integer", "minimum": 1},
                    "ordering": {
                        "type": "array", "items": {"type": "array", "items": NAME},
                    },
                    "preference_map": {
                        "type": "object", "additionalProperties": POSITIONS,
                    },
                    "membership_matrix": {
                        "type": "array",
                        "items": {"type": "array", "items": {"enum": [0, 1]}},
                    },
                },
            },
        },
    },
}

VERIFY_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": [
        "mode",
        "m",
        "n",
        "trials",
        "seed",
        "profiles_tested",
        "condition_held_count",
        "condition_held_and_transitive_count",
        "condition_failed_count",
        "condition_failed_but_transitive_count",
        "violations",
    ],
    "properties": {
        "mode": {"enum": ["exhaustive", "random"]},
        "m": {"type": "integer", "minimum": 3},
        "n": {"type": "integer", "minimum": 1},
        "trials": {"type": ["integer", "null"]},
        "seed": {"type": ["integer", "null"]},
        "profiles_tested": {"type": "integer", "minimum": 0},
        "condition_held_count": {"type": "integer", "minimum": 0},
        "condition_held_and_transitive_count": {"type": "integer", "minimum": 0},
        "condition_failed_count": {"type": "integer", "minimum": 0},
        "condition_failed_but_transitive_count": {"type": "integer", "minimum": 0},
        "violations": {"type": "array", "items": {"type": "string"}},
    },
}


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_example2_human(capsys):
    code, out, err = run_cli(capsys, "check", EXAMPLE2)
    assert code == 0 and not err
    assert "[[2, 2, 3], [4, 4, 0], [2, 2, 2]]" in out
    assert "condition holds" in out
    assert "social ordering: x ~ z > y > w" in out


def test_check_example2_json(capsys):
    code, out, _ = run_cli(capsys, "check", EXAMPLE2, "--json")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, CHECK_SCHEMA)
    assert payload["alternatives"] == ["w", "x", "y", "z"]
    assert payload["condition_holds"] is True
    assert payload["triples"][0] == {
        "members": ["w", "x", "y"],
        "concerned": [1, 2, 3, 4, 5],
        "parity_ok": True,
        "value_restricted": True,
        "ineq_witness": "x",
        "union_sets": {"w": [1, 2, 3], "x": [1, 2], "y": [1, 2, 3]},
        "sum_matrix": [[2, 2, 3], [4, 4, 0], [2, 2, 2]],
        "eq_witness": [2, 3],
        "oracle_witness": {"alternative": "x", "value": "worst"},
    }
    assert len(payload["triples"]) == 4
    assert payload["tallies"] == [
        [0, 0, 2, 2],
        [3, 0, 3, 2],
        [3, 1, 0, 1],
        [3, 2, 4, 0],
    ]
    assert payload["social"] == {
        "transitive": True,
        "ordering": [["x", "z"], ["y"], ["w"]],
        "cycle": None,
    }


def test_check_example1_json(capsys):
    code, out, _ = run_cli(capsys, "check", EXAMPLE1, "--json")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, CHECK_SCHEMA)
    assert payload["condition_holds"] is False
    (report,) = payload["triples"]
    assert report == {
        "members": ["x", "y", "z"],
        "concerned": [1, 2],
        "parity_ok": False,
        "value_restricted": True,
        "ineq_witness": "x",
        "union_sets": {"x": [1, 2], "y": [1, 2], "z": [3]},
        "sum_matrix": [[2, 1, 0], [1, 2, 0], [0, 0, 2]],
        "eq_witness": [1, 3],
        "oracle_witness": {"alternative": "x", "value": "worst"},
    }
    assert payload["tallies"] == [[0, 1, 2], [0, 0, 2], [0, 0, 0]]
    assert payload["social"]["transitive"] is True
    assert payload["social"]["ordering"] == [["x"], ["y"], ["z"]]


def test_check_assert_sen_passes(capsys):
    code, out, _ = run_cli(capsys, "check", EXAMPLE2, "--assert-sen")
    assert code == 0


def test_check_assert_sen_fails_on_cycle(capsys):
    code, out, _ = run_cli(capsys, "check", CONDORCET, "--assert-sen")
    assert code == 3
    assert "cycle" in out


def test_check_condorcet_json(capsys):
    code, out, _ = run_cli(capsys, "check", CONDORCET, "--json", "--assert-sen")
    assert code == 3
    payload = json.loads(out)
    jsonschema.validate(payload, CHECK_SCHEMA)
    assert payload["condition_holds"] is False
    assert payload["social"] == {
        "transitive": False,
        "ordering": None,
        "cycle": ["x", "y", "z"],
    }
    (report,) = payload["triples"]
    assert report["value_restricted"] is False
    assert report["parity_ok"] is True
    assert report["ineq_witness"] is None
    assert report["eq_witness"] is None
    assert report["oracle_witness"] is None
    assert report["sum_matrix"] == [[1, 1, 1], [1, 1, 1], [1, 1, 1]]


def test_check_missing_file(capsys):
    code, out, err = run_cli(capsys, "check", "/no/such/file.profile")
    assert code == 2
    assert err


def test_check_reports_parse_error_line(capsys, tmp_path):
    bad = tmp_path / "bad.profile"
    bad.write_text("alternatives: x y\nvoter: x > q\n")
    code, out, err = run_cli(capsys, "check", str(bad))
    assert code == 2
    assert "line 2" in err


def test_pm_example1_json(capsys):
    code, out, _ = run_cli(capsys, "pm", EXAMPLE1, "--json")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, PM_SCHEMA)
    assert payload["triple"] is None
    assert payload["voters"][0]["preference_map"] == {"x": [1], "y": [2], "z": [3]}
    assert payload["voters"][0]["membership_matrix"] == [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
    ]
    assert payload["voters"][1]["membership_matrix"] == [
        [1, 1, 0],
        [1, 1, 0],
        [0, 0, 1],
    ]
    assert payload["voters"][2]["membership_matrix"] == [
        [1, 1, 1],
        [1, 1, 1],
        [1, 1, 1],
    ]


def test_pm_example1_human(capsys):
    code, out, _ = run_cli(capsys, "pm", EXAMPLE1)
    assert code == 0
    assert "voter 2: x ~ y > z" in out
    assert "x: {1, 2}" in out
    assert "1 1 0" in out


def test_pm_restricted_to_triple(capsys):
    code, out, _ = run_cli(capsys, "pm", EXAMPLE2, "--triple", "w,x,y", "--json")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, PM_SCHEMA)
    assert payload["triple"] == ["w", "x", "y"]
    maps = [v["preference_map"] for v in payload["voters"]]
    assert maps[0] == {"w": [1, 2], "x": [1, 2], "y": [3]}
    assert maps[4] == {"w": [3], "x": [2], "y": [1]}
    assert payload["voters"][3]["ordering"] == [["x", "y"], ["w"]]


@pytest.mark.parametrize("spec", ["w,x,q", "w,x", "w,w,x"])
def test_pm_rejects_bad_triples(capsys, spec):
    code, out, err = run_cli(capsys, "pm", EXAMPLE2, "--triple", spec)
    assert code == 2
    assert err


def test_verify_exhaustive_human(capsys):
    code, out, err = run_cli(capsys, "verify", "--m", "3", "--n", "3", "--exhaustive")
    assert code == 0 and not err
    assert "2197" in out
    assert "violations" in out


def test_verify_exhaustive_json(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--m", "3", "--n", "3", "--exhaustive", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, VERIFY_SCHEMA)
    assert payload["mode"] == "exhaustive"
    assert payload["trials"] is None and payload["seed"] is None
    assert payload["profiles_tested"] == 2197
    assert (
        payload["condition_held_count"]
        == payload["condition_held_and_transitive_count"]
    )
    assert payload["condition_failed_but_transitive_count"] > 0
    assert payload["violations"] == []


def test_verify_random_json_is_deterministic(capsys):
    argv = [
        "verify", "--m", "4", "--n", "3",
        "--random", "--trials", "40", "--seed", "9", "--json",
    ]
    code1, out1, _ = run_cli(capsys, *argv)
    code2, out2, _ = run_cli(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    jsonschema.validate(json.loads(out1), VERIFY_SCHEMA)


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--m", "9", "--n", "2", "--exhaustive"],
        ["verify", "--m", "2", "--n", "1", "--exhaustive"],
        ["verify", "--m", "3", "--n", "8", "--exhaustive"],
        ["verify", "--m", "3", "--n", "1", "--random", "--trials", "0"],
    ],
)
def test_verify_rejects_out_of_range_requests(capsys, argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 2
    assert err


def test_verify_reports_violations_with_exit_4(capsys, monkeypatch):
    profile = parse_profile(Path(EXAMPLE2).read_text())
    fake = HarnessReport(
        profiles_tested=5,
        condition_held_count=3,
        condition_held_and_transitive_count=2,
        condition_failed_count=2,
        condition_failed_but_transitive_count=1,
        violations=(profile,),
    )
    monkeypatch.setattr("senvr.cli.run_harness", lambda config: fake)
    code, out, err = run_cli(
        capsys, "verify", "--m", "4", "--n", "5", "--random", "--trials", "5"
    )
    assert code == 4
    assert "violation" in out
    assert "w ~ x > y > z" in out


def test_no_arguments_shows_usage(capsys):
    assert main([]) == 2


def test_version_flag(capsys):
    code = main(["--version"])
    out = capsys.readouterr().out
    assert code == 0
    assert "senvr" in out


def test_module_invocation_smoke():
    result = subprocess.run(
        [sys.executable, "-m", "senvr", "check", EXAMPLE2, "--json"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert json.loads(result.stdout)["condition_holds"] is True
