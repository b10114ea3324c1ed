"""totgraph.services.verification.report.py"""
import logging
import pathlib
from typing import Union

from ...io import load, save, to_csv
from ...models import VerificationReport

LOGGER = logging.getLogger(__name__)

CSV_COLUMNS = (
    "ring",
    "order",
    "kind",
    "branch",
    "predicted",
    "constructed_k",
    "omega",
    "solver",
    "status",
    "provenance",
    "note",
)

FORMATS = ("json", "csv")


def report_csv(report: VerificationReport) -> str:
    """One CSV line per row under a header; unset values are empty cells."""
    rows = []
    for row in report.rows:
        values = row.dict()
        rows.append(["" if values[column] is None else values[column] for column in CSV_COLUMNS])
    return to_csv(CSV_COLUMNS, rows)


def emit_report(
    report: VerificationReport, path: Union[str, pathlib.Path], fmt: str = "json"
) -> pathlib.Path:
    """
    Write a report as JSON or CSV; output is byte-stable for equal reports.

    :raises ValueError: for an unknown format.
    :raises OSError: when the file cannot be written.
    """
    fmt = fmt.lower()
    if fmt == "json":
        path = save(path, report.serialize(), sort_keys=True)
    elif fmt == "csv":
        path = save(path, report_csv(report))
    else:
        raise ValueError(f"unknown report format {fmt!r}, expected one of {FORMATS}")
    LOGGER.info(f"wrote {fmt} report with {len(report.rows)} rows to {path}")
    return path


def load_report(path: Union[str, pathlib.Path]) -> VerificationReport:
    """Parse a JSON report written by `emit_report`."""
    return VerificationReport.parse_obj(load(path))
