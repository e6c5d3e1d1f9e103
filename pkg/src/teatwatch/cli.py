"""Operator command line.

Subcommands: ``serve`` the ingestion API, ``classify`` one quartet,
``import`` a CSV of readings, ``report`` concordance over a store, and
``last`` to inspect the newest reading. Exit codes of ``classify`` encode
the verdict so shell scripts can branch on it.
"""

from __future__ import annotations

import json
import socket
import sys
from pathlib import Path

import click

from . import __version__
from .classify import (
    ClassificationMode,
    HealthStatus,
    classify_quartet,
    kernel_backend,
)
from .dataset import (
    concordance_report,
    export_report,
    import_csv,
    open_field_dataset,
)
from .errors import EmptyStoreError, TeatwatchError, ValidationError
from .store import RecordStore

# classify exit codes; 0 stays conventional-success, 1 stays usage/error
EXIT_BY_STATUS = {
    HealthStatus.HEALTHY: 0,
    HealthStatus.ATTENTION: 2,
    HealthStatus.SICK: 3,
    HealthStatus.INDETERMINATE: 4,
}

_MODES = [mode.value for mode in ClassificationMode]


def _store_option(func):
    return click.option(
        "--store", "store_path", envvar="TEATWATCH_STORE", required=True,
        type=click.Path(dir_okay=False, path_type=Path),
        help="SQLite store file (env: TEATWATCH_STORE).")(func)


def _mode_option(func):
    return click.option(
        "--mode", "mode_name", envvar="TEATWATCH_MODE",
        type=click.Choice(_MODES), default=ClassificationMode.WORST_TEAT.value,
        show_default=True,
        help="Animal-level rating rule (env: TEATWATCH_MODE).")(func)


def _format_option(func):
    return click.option(
        "--format", "fmt", envvar="TEATWATCH_FORMAT",
        type=click.Choice(["text", "json"]), default="text", show_default=True,
        help="Output format (env: TEATWATCH_FORMAT).")(func)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="teatwatch")
def main():
    """Teat-temperature mastitis screening for dairy herds."""


@main.command()
@_store_option
@click.option("--host", envvar="TEATWATCH_HOST", default="127.0.0.1",
              show_default=True, help="Bind address (env: TEATWATCH_HOST).")
@click.option("--port", envvar="TEATWATCH_PORT", default=8080, type=int,
              show_default=True, help="TCP port (env: TEATWATCH_PORT).")
@click.option("--legacy-strict", is_flag=True,
              help="Apply the thermometer range to the device endpoint too.")
@click.option("--ui", "ui_dir", default=None,
              type=click.Path(file_okay=False, exists=True),
              help="Serve a built web UI from this directory.")
def serve(store_path: Path, host: str, port: int, legacy_strict: bool,
          ui_dir: str | None):
    """Run the HTTP ingestion service."""
    import uvicorn

    from .service import create_app

    # Fail fast with a readable message instead of a uvicorn traceback.
    try:
        probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
        probe.bind((host, port))
        probe.close()
    except OSError as exc:
        click.echo(f"error: cannot bind {host}:{port}: {exc}", err=True)
        sys.exit(1)
    try:
        store = RecordStore(store_path)
    except TeatwatchError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    click.echo(f"store {store_path} ({store.count()} records), "
               f"kernels: {kernel_backend()}", err=True)
    app = create_app(store, legacy_range_check=legacy_strict, static_dir=ui_dir)
    try:
        uvicorn.run(app, host=host, port=port, log_level="warning")
    finally:
        store.close()


@main.command()
@click.argument("teats", nargs=-1, metavar="T1 T2 T3 T4")
@_mode_option
@_format_option
def classify(teats: tuple[str, ...], mode_name: str, fmt: str):
    """Classify one milking's four teat temperatures.

    Exit code encodes the verdict: 0 Healthy, 2 Attention, 3 Sick,
    4 Indeterminate (1 is reserved for errors).
    """
    # conversion stays in the library so every defect exits 1, never
    # click's usage code 2, which would read as an Attention verdict
    try:
        if len(teats) != 4:
            raise ValidationError(
                f"expected 4 temperatures, got {len(teats)}")
        status = classify_quartet(teats, ClassificationMode(mode_name))
    except TeatwatchError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    if fmt == "json":
        click.echo(json.dumps({"status": status.label, "mode": mode_name,
                               "teats": [float(t) for t in teats]}))
    else:
        click.echo(status.label)
    sys.exit(EXIT_BY_STATUS[status])


@main.command("import")
@_store_option
@click.argument("csv_path", required=False,
                type=click.Path(exists=True, dir_okay=False))
@click.option("--bundled", is_flag=True,
              help="Import the packaged 2020 milking-trial dataset.")
def import_command(store_path: Path, csv_path: str | None, bundled: bool):
    """Import readings from CSV_PATH (or the bundled dataset)."""
    if bundled == (csv_path is not None):
        raise click.UsageError("give exactly one of CSV_PATH or --bundled")
    source = open_field_dataset() if bundled else open(csv_path, "rb")
    try:
        with source, RecordStore(store_path) as store:
            result = import_csv(source, store)
    except TeatwatchError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    for error in result.errors:
        click.echo(f"line {error.line}: {error.message}", err=True)
    click.echo(f"inserted {result.inserted}, rejected {result.rejected}")
    sys.exit(0 if not result.errors else 1)


@main.command()
@_store_option
@_mode_option
@_format_option
def report(store_path: Path, mode_name: str, fmt: str):
    """Concordance report over every stored reading."""
    try:
        with RecordStore(store_path) as store:
            records = store.list_records()
    except TeatwatchError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    rep = concordance_report(records, ClassificationMode(mode_name))
    click.echo(export_report(rep, fmt).decode("utf-8"), nl=False)


@main.command()
@_store_option
@_format_option
def last(store_path: Path, fmt: str):
    """Show the newest stored reading with both classifications."""
    try:
        with RecordStore(store_path) as store:
            record = store.last_record()
    except EmptyStoreError:
        click.echo("error: the record store is empty", err=True)
        sys.exit(1)
    except TeatwatchError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    statuses = {mode.value: classify_quartet(record.teats, mode).label
                for mode in ClassificationMode}
    if fmt == "json":
        click.echo(json.dumps({
            "record_id": record.record_id,
            "animal_id": record.id_animal,
            "date": record.reading_date.isoformat(),
            "teats": list(record.teats),
            "cup_test": record.is_mastite,
            "status_legacy": statuses[ClassificationMode.LEGACY.value],
            "status_worst_teat": statuses[ClassificationMode.WORST_TEAT.value],
        }))
    else:
        teats = "/".join(f"{t:g}" for t in record.teats)
        cup = "positive" if record.is_mastite else "negative"
        click.echo(f"record {record.record_id}: animal {record.id_animal}, "
                   f"{record.reading_date.isoformat()}, teats {teats} °C, "
                   f"cup test {cup}")
        for mode in ClassificationMode:
            click.echo(f"status ({mode.value}): {statuses[mode.value]}")


if __name__ == "__main__":
    main()
