"""End-to-end tests of the command-line surface.

main(argv) is called in-process; stdout/stderr are captured with capsys.
Exit codes follow the contract: 0 success or all-pass, 1 violations, 2
usage problems (including unknown names and over-budget ranges).
"""

from __future__ import annotations

import json

import pytest

from convolvium.cli import main

_TRIM_FLAGS = ["--n-max", "3", "--m-max", "2", "--r-max", "2", "--a-max", "1"]


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --------------------------------------------------------------------- compute


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["compute", "gessel", "--n", "1", "--r", "2"], "4"),
        (["compute", "catalan", "--n", "0"], "1"),
        (["compute", "catalan", "--n", "9"], "4862"),
        (["compute", "binomial", "--n", "6", "--k", "3"], "20"),
        (["compute", "binomial", "--n", "6", "--k", "9"], "0"),
        (["compute", "supercatalan", "--n", "3", "--r", "2"], "12"),
        (["compute", "phi", "--n", "3", "--m", "1", "--r", "2"], "1170"),
        (["compute", "phi", "--n", "3", "--r", "2"], "1170"),  # m defaults to 1
        (["compute", "psi", "--n", "2", "--r", "1"], "48"),
        (["compute", "quarter-psi", "--n", "2", "--r", "1"], "12"),
        (["compute", "closed-form", "--family", "phi-00", "--n", "1", "--r", "1"], "2"),
        (["compute", "closed-form", "--family", "s1-t1", "--n", "2", "--j", "1"], "12"),
        (["compute", "msum", "--kernel", "plain", "--n", "4", "--j", "1", "--t", "1"], "12"),
    ],
)
def test_compute_values(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected + "\n"


def test_compute_usage_errors(capsys):
    code, _, err = run(capsys, "compute", "catalan")
    assert code == 2 and "--n" in err
    code, _, err = run(capsys, "compute", "msum", "--n", "4")
    assert code == 2 and "--kernel" in err
    code, _, err = run(capsys, "compute", "closed-form", "--n", "4")
    assert code == 2 and "--family" in err
    code, _, err = run(capsys, "compute", "catalan", "--n", "-1")
    assert code == 2
    code, out, err = run(capsys, "compute", "no-such-thing", "--n", "1")
    assert code == 2 and out == ""


# ---------------------------------------------------------------------- verify


def test_verify_single_suite_plain(capsys):
    code, out, _ = run(capsys, "verify", "remark1")
    assert code == 0
    assert out == "remark1 PASS cases=4 violations=0\n"


def test_verify_single_suite_json(capsys):
    code, out, _ = run(capsys, "verify", "theorem1", *_TRIM_FLAGS, "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    [suite] = payload["suites"]
    assert suite["suite"] == "theorem1"
    assert suite["range"] == {"n_max": 3, "m_max": 2, "r_max": 2}
    assert suite["elapsed_ms"] == 0


def test_verify_all_json_byte_identical(capsys):
    code1, out1, _ = run(capsys, "verify", "all", *_TRIM_FLAGS, "--format", "json")
    code2, out2, _ = run(capsys, "verify", "all", *_TRIM_FLAGS, "--format", "json")
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert len(payload["suites"]) == 17


def test_verify_all_parallel_matches_serial(capsys):
    _, serial, _ = run(capsys, "verify", "all", *_TRIM_FLAGS, "--format", "json")
    _, parallel, _ = run(capsys, "verify", "all", *_TRIM_FLAGS, "--format", "json", "--jobs", "4")
    assert serial == parallel


def test_verify_csv_format(capsys):
    code, out, _ = run(capsys, "verify", "remark1", "--format", "csv")
    assert code == 0
    assert out == "suite,params,expected,actual\n"


def test_verify_timings_forfeit_byte_identity_but_carry_data(capsys):
    code, out, _ = run(capsys, "verify", "all", *_TRIM_FLAGS, "--format", "json", "--timings")
    assert code == 0
    payload = json.loads(out)
    assert any(s["elapsed_ms"] > 0 for s in payload["suites"])


def test_verify_out_writes_file_and_keeps_stdout_clean(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, err = run(
        capsys, "verify", "calkin", "--n-max", "3", "--format", "json", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    assert str(target) in err
    payload = json.loads(target.read_text())
    assert payload["passed"] is True


def test_verify_exit_codes(capsys, monkeypatch):
    code, _, err = run(capsys, "verify", "no-such-suite")
    assert code == 2 and "unknown suite" in err
    # an over-budget single suite is a usage-level refusal
    monkeypatch.setenv("CONVOLVIUM_BUDGET_MS", "0")
    code, _, err = run(capsys, "verify", "theorem1")
    assert code == 2 and "budget" in err
    # but `verify all` degrades each suite into a failing report: exit 1
    code, out, _ = run(capsys, "verify", "all", "--format", "json")
    assert code == 1
    assert json.loads(out)["passed"] is False


def test_verify_bad_jobs(capsys):
    code, _, _ = run(capsys, "verify", "all", "--jobs", "0")
    assert code == 2


# ----------------------------------------------------------------------- paths


def test_paths_count_and_list(capsys):
    code, out, _ = run(capsys, "paths", "--n", "1", "--r", "2")
    assert code == 0 and out == "4\n"
    code, out, _ = run(capsys, "paths", "--n", "1", "--r", "2", "--list")
    assert code == 0
    assert sorted(out.split()) == ["RRRUU", "RRURU", "RURRU", "URRRU"]
    code, out, _ = run(capsys, "paths", "--n", "1", "--r", "2", "--interpretation", "prefix")
    assert code == 0 and out == "4\n"


def test_paths_board_too_large_for_listing(capsys):
    code, _, err = run(capsys, "paths", "--n", "8", "--r", "8", "--list")
    assert code == 2 and "enumeration" in err
    # counting the same board is fine
    code, out, _ = run(capsys, "paths", "--n", "8", "--r", "8")
    assert code == 0 and int(out) > 0


def test_paths_requires_both_indices(capsys):
    code, _, _ = run(capsys, "paths", "--n", "3")
    assert code == 2


# ----------------------------------------------------------------------- table


def test_table_catalan(capsys):
    code, out, _ = run(capsys, "table", "catalan", "--n-max", "4")
    assert code == 0
    assert out.splitlines() == ["n,value", "0,1", "1,1", "2,2", "3,5", "4,14"]


def test_table_kr(capsys):
    code, out, _ = run(capsys, "table", "kr", "--r-max", "5")
    assert code == 0
    assert out.splitlines() == ["r,value", "1,1", "2,6", "3,30", "4,140", "5,630"]


def test_table_gessel_grid(capsys):
    code, out, _ = run(capsys, "table", "gessel", "--n-max", "1", "--r-max", "2")
    assert code == 0
    assert out.splitlines() == ["n,r,value", "0,1,1", "0,2,3", "1,1,1", "1,2,4"]


def test_table_phi_uses_weight(capsys):
    code, out, _ = run(capsys, "table", "phi", "--n-max", "3", "--r-max", "2", "--m", "1")
    assert code == 0
    rows = dict()
    for line in out.splitlines()[1:]:
        n, r, value = line.split(",")
        rows[(int(n), int(r))] = int(value)
    assert rows[(3, 2)] == 1170


def test_table_usage_errors(capsys):
    code, _, err = run(capsys, "table", "gessel")
    assert code == 2 and "--n-max" in err
    code, _, _ = run(capsys, "table", "phi", "--n-max", "2", "--m", "0")
    assert code == 2
    code, _, _ = run(capsys, "table", "nope", "--n-max", "2")
    assert code == 2


# ------------------------------------------------------------------- top level


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0
    assert run(capsys, "verify", "--help")[0] == 0


def test_missing_subcommand(capsys):
    assert main([]) == 2


def test_unknown_subcommand(capsys):
    assert main(["frobnicate"]) == 2
