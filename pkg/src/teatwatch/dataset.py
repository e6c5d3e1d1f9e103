"""Field-dataset tooling.

CSV import with per-row error reporting, batch classification of stored
readings, and the concordance report that compares the temperature route
against the handler's cup test. A 2020 milking-trial dataset ships with
the package for demos and regression checks.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from importlib import resources
from typing import BinaryIO, Iterable, Optional, Sequence, TextIO

import numpy as np

from .classify import (
    DEFAULT_THRESHOLDS,
    ClassificationMode,
    HealthStatus,
    ThresholdTable,
    classify_batch,
)
from .dates import parse_reading_date
from .errors import CsvFormatError, ValidationError
from .store import AnimalRecord, RecordStore

CSV_HEADER = ("IdCow", "Date", "Teat1", "Teat2", "Teat3", "Teat4", "Mastitis")

FIELD_DATASET_NAME = "field_readings_2020.csv"


def open_field_dataset() -> BinaryIO:
    """Open the bundled 2020 milking-trial dataset for reading."""
    return resources.files(__package__).joinpath(
        "data", FIELD_DATASET_NAME).open("rb")


@dataclass(frozen=True)
class RowError:
    """One rejected CSV row; ``line`` is 1-based within the file."""

    line: int
    message: str


@dataclass(frozen=True)
class ImportResult:
    inserted: int
    errors: tuple[RowError, ...]

    @property
    def rejected(self) -> int:
        return len(self.errors)


def _normalize(name: str) -> str:
    return name.strip().lstrip("﻿").replace(" ", "").lower()


def _resolve_header(header: Optional[Sequence[str]]) -> None:
    if header is None:
        raise CsvFormatError("CSV source is empty")
    got = [_normalize(cell) for cell in header]
    expected = [_normalize(cell) for cell in CSV_HEADER]
    if got != expected:
        raise CsvFormatError(
            f"unexpected CSV header {header!r}; expected {list(CSV_HEADER)!r}")


def _parse_row(row: Sequence[str]) -> AnimalRecord:
    if len(row) != len(CSV_HEADER):
        raise ValidationError(
            f"expected {len(CSV_HEADER)} columns, got {len(row)}")
    cow_text, date_text, *teat_texts, mastitis_text = (cell.strip() for cell in row)
    try:
        animal = int(cow_text)
    except ValueError:
        raise ValidationError(f"IdCow is not an integer: {cow_text!r}") from None
    if animal < 1:
        raise ValidationError(f"IdCow must be positive, got {animal}")
    reading_date = parse_reading_date(date_text)
    teats = []
    for name, text in zip(CSV_HEADER[2:6], teat_texts):
        try:
            t = float(text)
        except ValueError:
            raise ValidationError(f"{name} is not a number: {text!r}") from None
        if not math.isfinite(t):
            raise ValidationError(f"{name} must be finite, got {text!r}")
        teats.append(t)
    if mastitis_text not in ("0", "1"):
        raise ValidationError(f"Mastitis must be 0 or 1, got {mastitis_text!r}")
    return AnimalRecord(
        reading_date=reading_date,
        teto1=teats[0], teto2=teats[1], teto3=teats[2], teto4=teats[3],
        is_mastite=mastitis_text == "1", id_animal=animal)


def import_csv(source: BinaryIO | TextIO, store: RecordStore) -> ImportResult:
    """Load readings from CSV into the store.

    Defective rows are skipped and reported with their line numbers; the
    remaining rows are still inserted. A bad header aborts the whole import
    with ``CsvFormatError``.
    """
    if isinstance(source, io.TextIOBase):
        text = source
    else:
        text = io.TextIOWrapper(source, encoding="utf-8", newline="")
    reader = csv.reader(text)
    _resolve_header(next(reader, None))
    inserted = 0
    errors: list[RowError] = []
    for line, row in enumerate(reader, start=2):
        if not row:
            continue
        try:
            store.insert(_parse_row(row))
        except ValidationError as exc:
            errors.append(RowError(line=line, message=str(exc)))
            continue
        inserted += 1
    return ImportResult(inserted=inserted, errors=tuple(errors))


def batch_classify(records: Sequence[AnimalRecord],
                   mode: ClassificationMode = ClassificationMode.WORST_TEAT,
                   thresholds: ThresholdTable = DEFAULT_THRESHOLDS,
                   ) -> list[tuple[Optional[int], HealthStatus]]:
    """Classify stored readings in one kernel pass; returns
    ``(record_id, status)`` pairs aligned with the input order."""
    records = list(records)
    if not records:
        return []
    temps = np.array([record.teats for record in records], dtype=np.float64)
    codes = classify_batch(temps, mode, thresholds)
    return [(record.record_id, HealthStatus(int(code)))
            for record, code in zip(records, codes)]


@dataclass(frozen=True)
class ConcordanceReport:
    """How the temperature route and the cup test agree over a set of
    readings.

    ``temp_alert_without_cup`` counts readings rated Attention or Sick
    whose cup test was negative; ``cup_without_temp_alert`` counts
    cup-positive readings rated Healthy or Indeterminate.
    """

    mode: str
    total_records: int
    cup_test_positive: int
    status_counts: dict[str, int]
    per_animal: dict[int, dict[str, int]]
    temp_alert_without_cup: int
    cup_without_temp_alert: int

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "total_records": self.total_records,
            "cup_test_positive": self.cup_test_positive,
            "status_counts": dict(self.status_counts),
            "per_animal": {str(animal): dict(counts)
                           for animal, counts in self.per_animal.items()},
            "temp_alert_without_cup": self.temp_alert_without_cup,
            "cup_without_temp_alert": self.cup_without_temp_alert,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ConcordanceReport":
        return cls(
            mode=data["mode"],
            total_records=data["total_records"],
            cup_test_positive=data["cup_test_positive"],
            status_counts=dict(data["status_counts"]),
            per_animal={int(animal): dict(counts)
                        for animal, counts in data["per_animal"].items()},
            temp_alert_without_cup=data["temp_alert_without_cup"],
            cup_without_temp_alert=data["cup_without_temp_alert"],
        )


def concordance_report(records: Iterable[AnimalRecord],
                       mode: ClassificationMode = ClassificationMode.WORST_TEAT,
                       thresholds: ThresholdTable = DEFAULT_THRESHOLDS,
                       ) -> ConcordanceReport:
    """Aggregate classifications and cup-test results over ``records``."""
    records = list(records)
    statuses = [status for _, status in batch_classify(records, mode, thresholds)]
    labels = [status.label for status in HealthStatus]
    status_counts = {label: 0 for label in labels}
    per_animal: dict[int, dict[str, int]] = {}
    cup_positive = 0
    temp_alert_without_cup = 0
    cup_without_temp_alert = 0
    for record, status in zip(records, statuses):
        status_counts[status.label] += 1
        animal_counts = per_animal.setdefault(
            record.id_animal, {label: 0 for label in labels})
        animal_counts[status.label] += 1
        temp_alert = status >= HealthStatus.ATTENTION
        if record.is_mastite:
            cup_positive += 1
            if not temp_alert:
                cup_without_temp_alert += 1
        elif temp_alert:
            temp_alert_without_cup += 1
    return ConcordanceReport(
        mode=mode.value,
        total_records=len(records),
        cup_test_positive=cup_positive,
        status_counts=status_counts,
        per_animal=dict(sorted(per_animal.items())),
        temp_alert_without_cup=temp_alert_without_cup,
        cup_without_temp_alert=cup_without_temp_alert,
    )


def render_report_text(report: ConcordanceReport) -> str:
    """Plain-text rendering for terminals and logs."""
    lines = [
        f"concordance report ({report.mode} mode)",
        f"total: {report.total_records}",
        f"cup-test positive: {report.cup_test_positive}",
        f"temperature alert without positive cup test: {report.temp_alert_without_cup}",
        f"positive cup test without temperature alert: {report.cup_without_temp_alert}",
        "status counts:",
    ]
    for status in HealthStatus:
        lines.append(f"  {status.label}: {report.status_counts[status.label]}")
    if report.per_animal:
        lines.append("per animal:")
        for animal in sorted(report.per_animal):
            parts = [f"{label} {count}"
                     for label, count in report.per_animal[animal].items() if count]
            lines.append(f"  animal {animal}: " + (", ".join(parts) or "no readings"))
    return "\n".join(lines) + "\n"


def export_report(report: ConcordanceReport, fmt: str = "text") -> bytes:
    """Serialize a report as ``text`` or ``json`` (UTF-8 bytes)."""
    if fmt == "text":
        return render_report_text(report).encode("utf-8")
    if fmt == "json":
        return (json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n").encode("utf-8")
    raise ValidationError(f"unknown report format: {fmt!r}")


def report_from_json(data: bytes | str) -> ConcordanceReport:
    """Inverse of ``export_report(..., "json")``."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return ConcordanceReport.from_dict(json.loads(data))
