"""Report emission: markdown, CSV, and round-trippable JSON.

Numeric formatting conventions apply everywhere: values with 4 decimal
places, p-values in scientific notation with two significant digits, and
p-values below 1e-15 rendered as the string ``<1e-15`` (double precision
cannot resolve smaller tails reliably).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Sequence

from .metrics import METRIC_ORDER, EquityReport, MetricResult
from .stats.hypotests import TestResult

__all__ = [
    "SCHEMA_VERSION",
    "P_FLOOR",
    "format_p_value",
    "format_value",
    "parse_report_json",
    "report_to_csv",
    "report_to_json",
    "report_to_markdown",
    "write_report",
]

SCHEMA_VERSION = 1
P_FLOOR = 1e-15
REPORT_FORMATS = ("markdown", "csv", "json")


def format_value(value: float | None) -> str:
    return "" if value is None else f"{value:.4f}"


def format_p_value(p: float | None) -> str:
    if p is None:
        return ""
    if p < P_FLOOR:
        return "<1e-15"
    return f"{p:.1e}"


def _cell(metric: MetricResult) -> str:
    if metric.status != "ok":
        return metric.status
    parts = []
    for a in sorted(metric.group_values):
        parts.append(f"g{a}={format_value(metric.group_values[a])}")
    if metric.contrast is not None:
        parts.append(f"contrast={format_value(metric.contrast)}")
    if metric.test is not None:
        parts.append(f"p={format_p_value(metric.test.p_value)}")
    if metric.flagged:
        parts.append("**[FLAG]**")
    return " ".join(parts) if parts else "-"


def report_to_markdown(reports: Sequence[EquityReport]) -> str:
    """Metric-by-scenario markdown table; flagged cells carry **[FLAG]**."""
    if not reports:
        raise ValueError("need at least one report")
    by_label = {rep.scenario_label: {m.metric_name: m for m in rep.metrics} for rep in reports}
    labels = [rep.scenario_label for rep in reports]
    lines = ["| Metric | Interpretation | " + " | ".join(labels) + " |"]
    lines.append("|" + " --- |" * (2 + len(labels)))
    for name in METRIC_ORDER:
        interpretation = ""
        cells = []
        for label in labels:
            metric = by_label[label].get(name)
            if metric is None:
                cells.append("-")
                continue
            interpretation = metric.interpretation
            cells.append(_cell(metric))
        lines.append(
            "| " + name + " | " + interpretation + " | " + " | ".join(cells) + " |"
        )
    return "\n".join(lines) + "\n"


def report_to_csv(reports: Sequence[EquityReport]) -> str:
    """One row per (metric, scenario) with the flat summary columns."""
    if not reports:
        raise ValueError("need at least one report")
    lines = [
        "metric,scenario,group0_value,group1_value,contrast,statistic,df,p_value,flagged"
    ]
    for rep in reports:
        for metric in rep.metrics:
            test = metric.test
            lines.append(
                ",".join(
                    [
                        metric.metric_name,
                        rep.scenario_label,
                        format_value(metric.group_values.get(0)),
                        format_value(metric.group_values.get(1)),
                        format_value(metric.contrast),
                        format_value(test.statistic) if test else "",
                        format_value(test.df) if test and test.df is not None else "",
                        format_p_value(test.p_value) if test else "",
                        "true" if metric.flagged else "false",
                    ]
                )
            )
    return "\n".join(lines) + "\n"


def _test_to_obj(test: TestResult | None):
    if test is None:
        return None
    return {
        "statistic": test.statistic,
        "df": test.df,
        "p_value": test.p_value,
        "direction": test.direction,
        "degenerate": test.degenerate,
    }


def _metric_to_obj(metric: MetricResult):
    return {
        "metric_name": metric.metric_name,
        "group_values": {str(k): v for k, v in metric.group_values.items()},
        "contrast": metric.contrast,
        "test": _test_to_obj(metric.test),
        "flagged": metric.flagged,
        "interpretation": metric.interpretation,
        "status": metric.status,
        "extras": metric.extras,
    }


def report_to_json(reports: Sequence[EquityReport]) -> str:
    """Lossless JSON for the full report list (see parse_report_json)."""
    if not reports:
        raise ValueError("need at least one report")
    payload = {
        "schema_version": SCHEMA_VERSION,
        "reports": [
            {
                "scenario_label": rep.scenario_label,
                "cohort_summary": rep.cohort_summary,
                "metrics": [_metric_to_obj(m) for m in rep.metrics],
            }
            for rep in reports
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _test_from_obj(obj) -> TestResult | None:
    if obj is None:
        return None
    return TestResult(
        statistic=obj["statistic"],
        df=obj["df"],
        p_value=obj["p_value"],
        direction=obj["direction"],
        degenerate=obj["degenerate"],
    )


def parse_report_json(text: str) -> list[EquityReport]:
    """Inverse of report_to_json; rejects unknown schema versions."""
    payload = json.loads(text)
    version = payload.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema version: {version!r}")
    reports = []
    for rep in payload["reports"]:
        metrics = [
            MetricResult(
                metric_name=m["metric_name"],
                group_values={int(k): v for k, v in m["group_values"].items()},
                contrast=m["contrast"],
                test=_test_from_obj(m["test"]),
                flagged=m["flagged"],
                interpretation=m["interpretation"],
                status=m["status"],
                extras=m["extras"],
            )
            for m in rep["metrics"]
        ]
        reports.append(
            EquityReport(
                scenario_label=rep["scenario_label"],
                metrics=metrics,
                cohort_summary=rep["cohort_summary"],
            )
        )
    return reports


def write_report(
    reports: Sequence[EquityReport], format: str, path: str | Path
) -> None:
    """Serialize reports to the given path in one of the three formats."""
    if format == "markdown":
        text = report_to_markdown(reports)
    elif format == "csv":
        text = report_to_csv(reports)
    elif format == "json":
        text = report_to_json(reports)
    else:
        raise ValueError(f"format must be one of {REPORT_FORMATS}, got {format!r}")
    Path(path).write_text(text)
