"""Human-readable rendering of an analysis report JSON document."""
from __future__ import annotations

import json
from typing import Mapping

REQUIRED_RECORD_FIELDS = ("H_C", "H_C_given_X", "I_C_X", "interval")
REQUIRED_GROUP_FIELDS = ("categories", "skipped_categories", "category_count")

_ANALYSIS_ORDER = ("noun", "adjective", "synset", "noun_supersense", "adjective_supersense")


class ReportFormatError(ValueError):
    """Report JSON does not match the expected schema; the message names
    the offending field path."""


def load_report(path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            report = json.load(handle)
    except json.JSONDecodeError as exc:
        raise ReportFormatError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(report, dict):
        raise ReportFormatError(f"{path}: top level must be an object")
    return report


def _require(mapping: Mapping, key: str, path: str):
    if key not in mapping:
        raise ReportFormatError(f"missing field: {path}.{key}")
    return mapping[key]


def _check_record(record: Mapping, path: str) -> None:
    for key in REQUIRED_RECORD_FIELDS:
        _require(record, key, path)
    interval = record["interval"]
    for key in ("point", "lower", "upper", "replicates_used"):
        _require(interval, key, f"{path}.interval")


def validate_report(report: Mapping) -> None:
    schema = _require(report, "schema", "$")
    if schema != "clfinfo-report/1":
        raise ReportFormatError(f"unsupported schema: {schema!r}")
    analyses = _require(report, "analyses", "$")
    if not isinstance(analyses, Mapping):
        raise ReportFormatError("field $.analyses must be an object")
    for name, record in analyses.items():
        path = f"$.analyses.{name}"
        if "categories" in record:
            for key in REQUIRED_GROUP_FIELDS:
                _require(record, key, path)
            for sub in record["categories"]:
                _check_record(sub, f"{path}.categories[{sub.get('category', '?')}]")
        else:
            _check_record(record, path)


def _settings_lines(report: Mapping) -> list[str]:
    lines = []
    settings = report.get("settings", {})
    extraction = settings.get("extraction")
    if extraction:
        lines.append(
            "extraction: "
            + " ".join(
                f"{key}={','.join(value) if isinstance(value, list) else value}"
                for key, value in sorted(extraction.items())
            )
        )
    boot = settings.get("bootstrap")
    if boot:
        lines.append(
            "bootstrap: "
            + " ".join(f"{key}={boot[key]}" for key in sorted(boot))
        )
    for key in sorted(settings):
        if key in ("extraction", "bootstrap"):
            continue
        lines.append(f"{key}: {settings[key]}")
    return lines


def _table_rows(report: Mapping) -> list[tuple[str, Mapping]]:
    rows: list[tuple[str, Mapping]] = []
    analyses = report["analyses"]
    for name in _ANALYSIS_ORDER:
        if name not in analyses:
            continue
        record = analyses[name]
        if "categories" in record:
            for sub in record["categories"]:
                rows.append((f"{name}:{sub['category']}", sub))
        else:
            rows.append((name, record))
    for name in sorted(analyses):
        if name not in _ANALYSIS_ORDER:
            raise ReportFormatError(f"unknown analysis: $.analyses.{name}")
    return rows


def render_report(report: Mapping) -> str:
    """Aligned text table over all analysis records, one row each,
    preceded by the echoed settings."""
    validate_report(report)
    header = ["analysis", "H(C)", "H(C|X)", "I(C;X)", "ci_lo", "ci_hi",
              "C", "X", "n", "dropped"]
    rows = [header]
    for name, record in _table_rows(report):
        support = record.get("support", {})
        rows.append(
            [
                name,
                f"{record['H_C']:.4f}",
                f"{record['H_C_given_X']:.4f}",
                f"{record['I_C_X']:.4f}",
                f"{record['interval']['lower']:.4f}",
                f"{record['interval']['upper']:.4f}",
                str(support.get("classifiers", "-")),
                str(support.get("x_values", "-")),
                str(record.get("observations", "-")),
                str(record.get("dropped_observations", "-")),
            ]
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    out = [f"clfinfo report  schema={report['schema']}"]
    out.extend(_settings_lines(report))
    out.append("")
    for rownum, row in enumerate(rows):
        cells = [row[0].ljust(widths[0])]
        cells += [cell.rjust(widths[i]) for i, cell in enumerate(row) if i > 0]
        out.append("  ".join(cells).rstrip())
        if rownum == 0:
            out.append("  ".join("-" * w for w in widths))
    return "\n".join(out) + "\n"
