"""Command-line surface: subcommands, determinism, exit codes."""

import json

import pytest

from oxequity.cli import main
from oxequity.io import read_cohort_csv
from oxequity.reports import parse_report_json


def run(*argv):
    return main(list(argv))


def test_simulate_writes_deterministic_csv(tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    assert run("simulate", "--n", "200", "--seed", "9", "--out", str(a)) == 0
    assert run("simulate", "--n", "200", "--seed", "9", "--out", str(b)) == 0
    assert a.read_bytes() == b.read_bytes()
    assert len(read_cohort_csv(a)) == 200


def test_simulate_toggle_changes_measurements(tmp_path):
    on = tmp_path / "on.csv"
    off = tmp_path / "off.csv"
    run("simulate", "--n", "200", "--seed", "9", "--out", str(on))
    run(
        "simulate", "--n", "200", "--seed", "9", "--no-measurement-bias",
        "--out", str(off),
    )
    assert on.read_bytes() != off.read_bytes()
    # but the true-saturation column is untouched (common random numbers)
    col = lambda p: [line.split(",")[2] for line in p.read_text().splitlines()[1:]]
    assert col(on) == col(off)


def test_audit_markdown_to_stdout(tmp_path, capsys):
    cohort = tmp_path / "c.csv"
    run("simulate", "--n", "400", "--seed", "4", "--out", str(cohort))
    assert run("audit", "--in", str(cohort)) == 0
    out = capsys.readouterr().out
    assert out.startswith("| Metric |")
    assert "representativeness" in out


def test_audit_json_file_round_trips(tmp_path):
    cohort = tmp_path / "c.csv"
    report = tmp_path / "report.json"
    run("simulate", "--n", "400", "--seed", "4", "--out", str(cohort))
    assert (
        run("audit", "--in", str(cohort), "--format", "json", "--out", str(report)) == 0
    )
    parsed = parse_report_json(report.read_text())
    assert parsed[0].scenario_label == "cohort"
    assert len(parsed[0].metrics) == 10


def test_audit_gold_free_file(tmp_path, capsys):
    source = tmp_path / "full.csv"
    run("simulate", "--n", "300", "--seed", "5", "--out", str(source))
    lines = source.read_text().splitlines()
    keep = [0, 1, 3, 5, 6]  # drop w_true and epsilon
    stripped = tmp_path / "nogold.csv"
    stripped.write_text(
        "\n".join(",".join(line.split(",")[i] for i in keep) for line in lines) + "\n"
    )
    report = tmp_path / "r.json"
    assert run("audit", "--in", str(stripped), "--format", "json", "--out", str(report)) == 0
    parsed = parse_report_json(report.read_text())
    statuses = {m.metric_name: m.status for m in parsed[0].metrics}
    assert statuses["information_bias"] == "skipped: no gold standard"
    assert statuses["systemic_bias_cmh"] == "ok"
    capsys.readouterr()


def test_audit_schema_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("patient_id,group_a,w_true,w_star,epsilon,treated,outcome\n0,0,90,91.3,1.3,2,0\n")
    assert run("audit", "--in", str(bad)) == 1
    err = capsys.readouterr().err
    assert "row 2" in err and "treated" in err


def test_missing_file_exit_code(tmp_path, capsys):
    assert run("audit", "--in", str(tmp_path / "nope.csv")) == 1
    capsys.readouterr()


def test_usage_error_exit_code(capsys):
    assert run("simulate", "--n", "not-a-number", "--out", "x.csv") == 1
    assert run("frobnicate") == 1
    capsys.readouterr()


def test_grid_writes_expected_bundle(tmp_path):
    out = tmp_path / "bundle"
    assert run("grid", "--n", "1000", "--seed", "2", "--out", str(out)) == 0
    names = {p.name for p in out.iterdir()}
    assert names == {
        "table1.md",
        "table2.md",
        "table2.csv",
        "table2.json",
        "cohort_both.csv",
        "cohort_measurement_only.csv",
        "cohort_systemic_only.csv",
        "cohort_none.csv",
    }
    payload = json.loads((out / "table2.json").read_text())
    assert [rep["scenario_label"] for rep in payload["reports"]] == [
        "both",
        "measurement_only",
        "systemic_only",
        "none",
    ]


def test_grid_is_byte_deterministic(tmp_path):
    out1 = tmp_path / "g1"
    out2 = tmp_path / "g2"
    run("grid", "--n", "600", "--seed", "8", "--out", str(out1))
    run("grid", "--n", "600", "--seed", "8", "--out", str(out2))
    for name in ("table1.md", "table2.json", "cohort_both.csv"):
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes()


def test_figure_outputs_csv(tmp_path, capsys):
    cohort = tmp_path / "c.csv"
    run("simulate", "--n", "500", "--seed", "6", "--out", str(cohort))
    assert run("figure", "--in", str(cohort)) == 0
    out = capsys.readouterr().out
    assert out.startswith("bin_center,group_a,count")


def test_figure_rejects_gold_free(tmp_path, capsys):
    cohort = tmp_path / "c.csv"
    run("simulate", "--n", "200", "--seed", "6", "--out", str(cohort))
    lines = cohort.read_text().splitlines()
    keep = [0, 1, 3, 5, 6]
    stripped = tmp_path / "nogold.csv"
    stripped.write_text(
        "\n".join(",".join(line.split(",")[i] for i in keep) for line in lines) + "\n"
    )
    assert run("figure", "--in", str(stripped)) == 1
    capsys.readouterr()


def test_params_file_flows_through(tmp_path):
    params = tmp_path / "p.json"
    params.write_text('{"err_base": 0.0, "err_noise_sd": 0.5}\n')
    out = tmp_path / "c.csv"
    assert run(
        "simulate", "--n", "300", "--seed", "3", "--params", str(params),
        "--no-measurement-bias", "--out", str(out),
    ) == 0
    cohort = read_cohort_csv(out)
    eps = [r.epsilon for r in cohort]
    assert abs(sum(eps) / len(eps)) < 0.1  # baseline overread removed
