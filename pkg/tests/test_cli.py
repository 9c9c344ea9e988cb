"""CLI: exit codes, output schemas, CSV headers, number formatting, and
JSON reproducibility."""

import csv
import io
import json
import math

import pytest

from quadcert.cli import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_certify_json(capsys):
    code, out, _ = run_cli(capsys, "certify", "--function", "power:2", "--a", "0",
                           "--b", "1", "--x", "1", "--family", "convex",
                           "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["function"] == "power:2"
    assert payload["family"] == "convex"
    assert payload["bound_total"] == pytest.approx(1.0 / 12.0, abs=1e-15)
    assert payload["actual_error_total"] == pytest.approx(1.0 / 12.0, abs=1e-12)
    assert payload["holds"] is True
    assert {f["name"] for f in payload["hypothesis_flags"]} == {
        "abs_f2_convex", "f1_endpoints_equal"}


def test_certify_other_families(capsys):
    for extra in (["--family", "holder", "--x", "1", "--p", "2"],
                  ["--family", "power_mean", "--x", "1", "--q", "2"],
                  ["--family", "ostrowski", "--x", "0.5"],
                  ["--family", "cerone_dragomir", "--case", "inf"],
                  ["--family", "cerone_dragomir", "--case", "lp", "--p", "2"],
                  ["--family", "cerone_dragomir", "--case", "l1"]):
        code, out, _ = run_cli(capsys, "certify", "--function", "power:2",
                               "--a", "0", "--b", "1", "--format", "json", *extra)
        assert code == EXIT_OK, (extra, out)
        assert json.loads(out)["holds"] is True


def test_identity_check(capsys):
    code, out, _ = run_cli(capsys, "identity-check", "--function", "exp",
                           "--a", "0", "--b", "1", "--x", "0.6", "--format", "json")
    assert code == EXIT_OK
    assert abs(json.loads(out)["residual"]) <= 1e-9


def test_composite_csv(capsys):
    code, out, _ = run_cli(capsys, "composite", "--function", "exp", "--a", "0",
                           "--b", "1", "--rule", "midpoint", "--n", "2,4,8,16",
                           "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "h", "approx", "actual_error", "remainder_bound", "ratio"]
    assert len(rows) == 5
    for n, h, approx, err, bound, ratio in rows[1:]:
        assert "," not in h and "." in h  # decimal-point formatting
        assert float(err) <= float(bound)
        assert 0.0 < float(ratio) <= 1.0


def test_composite_generalized_random_xi(capsys):
    code, out, _ = run_cli(capsys, "composite", "--function", "reciprocal",
                           "--a", "1", "--b", "2", "--rule", "generalized",
                           "--n", "4,8", "--xi-policy", "random", "--seed", "42",
                           "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["seed"] == 42
    assert all(r["actual_error"] <= r["remainder_bound"] for r in payload["rows"])


def test_means(capsys):
    code, out, _ = run_cli(capsys, "means", "--a", "1", "--b", "2", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["chain_holds"] is True
    values = {row["kind"]: row["value"] for row in payload["means"]}
    assert values["logarithmic"] == pytest.approx(1.0 / math.log(2.0), rel=1e-14)
    assert values["p_logarithmic"] == pytest.approx(math.sqrt(7.0 / 3.0), rel=1e-14)


def test_props_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "props", "--prop", "1", "--p", "2",
                           "--a", "1", "--b", "2", "--format", "json")
    assert code == EXIT_VIOLATION
    row = json.loads(out)["rows"][0]
    assert row["lhs"] == pytest.approx(1.0 / 6.0, abs=1e-12)
    assert row["rhs"] == pytest.approx(1.0 / 12.0, abs=1e-15)
    assert row["holds"] is False

    code, _, _ = run_cli(capsys, "props", "--prop", "2", "--a", "1", "--b", "2")
    assert code == EXIT_OK


def test_props_corrected_variant(capsys):
    code, out, _ = run_cli(capsys, "props", "--prop", "1", "--p", "2", "--a", "1",
                           "--b", "2", "--corrected", "--format", "csv")
    assert code == EXIT_VIOLATION  # the stated proposition still fails
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][-1] == "variant"
    stated = next(r for r in rows[1:] if r[-1] == "stated")
    corrected = next(r for r in rows[1:] if r[-1] == "corrected")
    assert stated[7] == "false" and corrected[7] == "true"


def test_sweep(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--props", "2,6", "--a", "0.5,1,2",
                           "--b", "1.5,3", "--q", "1,2", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["summary"]["violations"] == 0
    assert payload["summary"]["total"] == len(payload["rows"])

    code, out, _ = run_cli(capsys, "sweep", "--props", "1", "--a", "1", "--b", "2",
                           "--p", "2", "--format", "json")
    assert code == EXIT_VIOLATION
    assert json.loads(out)["summary"]["violations"] == 1


def test_sweep_skips_invalid_grid_cells(capsys):
    """A mixed grid pairs every p with every q; cells that a proposition
    rejects (non-conjugate exponents for the Holder-based ones) are skipped
    and counted, not fatal."""
    code, out, _ = run_cli(capsys, "sweep", "--props", "2,4,6", "--a", "1", "--b", "2",
                           "--p", "2", "--q", "1,2", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["summary"]["violations"] == 0
    assert payload["summary"]["skipped_invalid"] > 0
    assert {r["prop_id"] for r in payload["rows"]} == {2, 4, 6}
    # a grid with no valid cell at all is a usage error
    code, _, err = run_cli(capsys, "sweep", "--props", "3", "--a", "1", "--b", "2")
    assert code == EXIT_USAGE
    assert "error:" in err


def test_sweep_skips_degenerate_pairs(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--props", "2", "--a", "1,2",
                           "--b", "1.5", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) == 2  # header + the single valid (a, b) pair


def test_usage_errors(capsys):
    cases = [
        ("certify", "--function", "sine", "--a", "0", "--b", "1", "--x", "1",
         "--family", "convex"),
        ("certify", "--function", "power:2", "--a", "1", "--b", "0", "--x", "1",
         "--family", "convex"),
        ("certify", "--function", "power:2", "--a", "0", "--b", "1", "--x", "0.1",
         "--family", "convex"),
        ("certify", "--function", "reciprocal", "--a", "-1", "--b", "1", "--x", "1",
         "--family", "convex"),
        ("identity-check", "--function", "exp", "--a", "0", "--b", "1", "--x", "2"),
        ("props", "--prop", "1", "--a", "1", "--b", "2"),  # p missing
    ]
    for argv in cases:
        code, _, err = run_cli(capsys, *argv)
        assert code == EXIT_USAGE, argv
        assert err.strip().startswith("error:")


def test_json_runs_reproduce_bit_identically(capsys):
    argv = ("composite", "--function", "exp", "--a", "0", "--b", "1",
            "--rule", "generalized", "--xi-policy", "random", "--seed", "9",
            "--n", "2,4,8", "--format", "json")
    code1, out1, _ = run_cli(capsys, *argv)
    code2, out2, _ = run_cli(capsys, *argv)
    assert code1 == code2 == EXIT_OK
    assert out1 == out2
    json.loads(out1)  # stays parseable


def test_csv_float_formatting_round_trips(capsys):
    _, out, _ = run_cli(capsys, "props", "--prop", "2", "--a", "0.1", "--b", "0.30000000000000004",
                        "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    b_field = rows[1][2]
    assert float(b_field) == 0.30000000000000004  # 17 significant digits survive
