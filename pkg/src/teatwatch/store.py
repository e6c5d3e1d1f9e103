"""SQLite-backed persistence for milking-time teat readings.

One reading row per animal per milking: four teat temperatures, the cup
(strip test) result, the reading date, and a server-assigned id. The store
is append-only; every insert commits so a killed process loses nothing.
"""

from __future__ import annotations

import datetime as dt
import math
import sqlite3
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .dates import parse_reading_date
from .errors import EmptyStoreError, StorageError, ValidationError

_SCHEMA = """
CREATE TABLE IF NOT EXISTS animal_records (
    record_id    INTEGER PRIMARY KEY AUTOINCREMENT,
    reading_date TEXT    NOT NULL,
    teto1        REAL    NOT NULL,
    teto2        REAL    NOT NULL,
    teto3        REAL    NOT NULL,
    teto4        REAL    NOT NULL,
    is_mastite   INTEGER NOT NULL CHECK (is_mastite IN (0, 1)),
    id_animal    INTEGER NOT NULL CHECK (id_animal >= 1)
);
CREATE INDEX IF NOT EXISTS animal_records_by_animal
    ON animal_records (id_animal, reading_date);
"""


@dataclass(frozen=True)
class AnimalRecord:
    """One milking-time reading for one animal.

    ``record_id`` is None until the store assigns one. ``is_mastite`` is
    the handler's cup-test result (True = visible mastitis signs), kept
    alongside the temperatures so the two screening routes can be compared.
    """

    reading_date: dt.date
    teto1: float
    teto2: float
    teto3: float
    teto4: float
    is_mastite: bool
    id_animal: int
    record_id: Optional[int] = None

    @property
    def teats(self) -> tuple[float, float, float, float]:
        return (self.teto1, self.teto2, self.teto3, self.teto4)


def _validated(record: AnimalRecord) -> AnimalRecord:
    if not isinstance(record.reading_date, dt.date) or isinstance(record.reading_date, dt.datetime):
        raise ValidationError(f"reading_date must be a date, got {record.reading_date!r}")
    for i, t in enumerate(record.teats, start=1):
        if not isinstance(t, (int, float)) or isinstance(t, bool) or not math.isfinite(t):
            raise ValidationError(f"teto{i} must be a finite number, got {t!r}")
    if not isinstance(record.id_animal, int) or isinstance(record.id_animal, bool) or record.id_animal < 1:
        raise ValidationError(f"id_animal must be a positive integer, got {record.id_animal!r}")
    if not isinstance(record.is_mastite, bool):
        raise ValidationError(f"is_mastite must be a boolean, got {record.is_mastite!r}")
    return record


class RecordStore:
    """Single-file reading store; safe to share across threads."""

    def __init__(self, path: str | Path):
        self._path = str(path)
        self._lock = threading.Lock()
        try:
            self._conn = sqlite3.connect(self._path, check_same_thread=False)
            self._conn.executescript(_SCHEMA)
            self._conn.commit()
        except sqlite3.Error as exc:
            raise StorageError(f"cannot open record store at {self._path}: {exc}") from exc

    @property
    def path(self) -> str:
        return self._path

    def insert(self, record: AnimalRecord) -> int:
        """Append a validated reading; returns its assigned record id."""
        record = _validated(record)
        with self._lock:
            try:
                cur = self._conn.execute(
                    "INSERT INTO animal_records "
                    "(reading_date, teto1, teto2, teto3, teto4, is_mastite, id_animal) "
                    "VALUES (?, ?, ?, ?, ?, ?, ?)",
                    (record.reading_date.isoformat(),
                     float(record.teto1), float(record.teto2),
                     float(record.teto3), float(record.teto4),
                     int(record.is_mastite), record.id_animal))
                self._conn.commit()
            except sqlite3.Error as exc:
                raise StorageError(f"insert failed: {exc}") from exc
        assert cur.lastrowid is not None
        return cur.lastrowid

    def last_record(self) -> AnimalRecord:
        """The most recently inserted reading (highest record id)."""
        rows = self._query(
            "SELECT record_id, reading_date, teto1, teto2, teto3, teto4, "
            "is_mastite, id_animal FROM animal_records "
            "ORDER BY record_id DESC LIMIT 1", ())
        if not rows:
            raise EmptyStoreError("the record store is empty")
        return _row_to_record(rows[0])

    def list_records(self,
                     animal_id: Optional[int] = None,
                     date_from: Optional[dt.date] = None,
                     date_to: Optional[dt.date] = None) -> list[AnimalRecord]:
        """Readings in insertion order, optionally filtered by animal and
        by an inclusive date window."""
        clauses, args = [], []
        if animal_id is not None:
            clauses.append("id_animal = ?")
            args.append(animal_id)
        if date_from is not None:
            clauses.append("reading_date >= ?")
            args.append(parse_reading_date(date_from).isoformat())
        if date_to is not None:
            clauses.append("reading_date <= ?")
            args.append(parse_reading_date(date_to).isoformat())
        if date_from is not None and date_to is not None \
                and parse_reading_date(date_from) > parse_reading_date(date_to):
            raise ValidationError("date window is inverted (from > to)")
        sql = ("SELECT record_id, reading_date, teto1, teto2, teto3, teto4, "
               "is_mastite, id_animal FROM animal_records")
        if clauses:
            sql += " WHERE " + " AND ".join(clauses)
        sql += " ORDER BY record_id"
        return [_row_to_record(row) for row in self._query(sql, tuple(args))]

    def count(self) -> int:
        """Number of stored readings."""
        return self._query("SELECT COUNT(*) FROM animal_records", ())[0][0]

    def close(self):
        with self._lock:
            self._conn.close()

    def __enter__(self) -> "RecordStore":
        return self

    def __exit__(self, *exc_info):
        self.close()

    def _query(self, sql: str, args: tuple) -> list:
        with self._lock:
            try:
                return self._conn.execute(sql, args).fetchall()
            except sqlite3.Error as exc:
                raise StorageError(f"query failed: {exc}") from exc


def _row_to_record(row) -> AnimalRecord:
    record_id, date_text, t1, t2, t3, t4, flag, animal = row
    return AnimalRecord(
        reading_date=dt.date.fromisoformat(date_text),
        teto1=t1, teto2=t2, teto3=t3, teto4=t4,
        is_mastite=bool(flag), id_animal=animal, record_id=record_id)
