"""
CSV and JSON rendering of harness reports.

CSV: header row, ``,`` separator, ``.`` decimal point, LF line endings; the
columns are the row model's fields in declaration order. JSON: UTF-8 with
the model's field order. Both renderings are pure functions of the report,
so a fixed seed gives byte-identical output.
"""

import csv
import io
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel

from .identities import IdentitySummary
from .scans import ScanReport

logger = logging.getLogger(__name__)

ReportFormat = Literal["csv", "json"]


def report_rows(report: BaseModel) -> Sequence[BaseModel]:
    """The models that become CSV rows: scan rows, identity checks, or the report itself."""
    if isinstance(report, ScanReport):
        return report.rows
    if isinstance(report, IdentitySummary):
        return report.checks
    return [report]


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def to_csv(rows: Sequence[BaseModel]) -> str:
    if not rows:
        return ""
    buffer = io.StringIO()
    fieldnames = list(type(rows[0]).model_fields)
    writer = csv.DictWriter(buffer, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        dumped = row.model_dump(mode="json")
        writer.writerow({name: _cell(dumped[name]) for name in fieldnames})
    return buffer.getvalue()


def to_json(report: BaseModel) -> str:
    return report.model_dump_json(indent=2) + "\n"


def render(report: BaseModel, fmt: ReportFormat = "json") -> str:
    if fmt == "csv":
        return to_csv(report_rows(report))
    return to_json(report)


def write_report(report: BaseModel, fmt: ReportFormat = "json", out: str | Path | None = None) -> None:
    """Write to `out`, or to stdout when no path is given."""
    text = render(report, fmt)
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    with path.open("w", newline="", encoding="utf-8") as handle:
        handle.write(text)
    logger.info("Wrote %s report to %s", fmt, path)
