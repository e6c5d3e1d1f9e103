"""Shared fixtures: temporary stores, an in-process API client, and a real
uvicorn server for wire-level tests. Also prints one PASS/FAIL line per
acceptance test at the end of the run."""

import csv
import threading
import time
import warnings
from pathlib import Path

import pytest

from teatwatch import RecordStore, create_app

warnings.filterwarnings(
    "ignore", message="Using `httpx` with `starlette.testclient`")

TESTS_DIR = Path(__file__).parent
GOLDEN_STATUSES = TESTS_DIR / "data" / "field_readings_statuses.golden.csv"


@pytest.fixture
def store(tmp_path):
    s = RecordStore(tmp_path / "readings.db")
    yield s
    s.close()


@pytest.fixture
def client(store):
    from fastapi.testclient import TestClient

    return TestClient(create_app(store))


class LiveServer:
    """uvicorn on an OS-assigned port, run in a daemon thread."""

    def __init__(self, app):
        import uvicorn

        config = uvicorn.Config(app, host="127.0.0.1", port=0,
                                log_level="warning")
        self._server = uvicorn.Server(config)
        self._thread = threading.Thread(target=self._server.run, daemon=True)
        self.base_url = ""

    def __enter__(self):
        self._thread.start()
        deadline = time.monotonic() + 15
        while not self._server.started:
            if time.monotonic() > deadline:
                raise RuntimeError("server failed to start within 15 s")
            if not self._thread.is_alive():
                raise RuntimeError("server thread died during startup")
            time.sleep(0.01)
        port = self._server.servers[0].sockets[0].getsockname()[1]
        self.base_url = f"http://127.0.0.1:{port}"
        return self

    def __exit__(self, *exc_info):
        self._server.should_exit = True
        self._thread.join(timeout=15)


@pytest.fixture
def live_server_factory():
    """Start real HTTP servers; all are stopped when the test ends."""
    servers = []

    def start(app) -> LiveServer:
        server = LiveServer(app).__enter__()
        servers.append(server)
        return server

    yield start
    for server in servers:
        server.__exit__(None, None, None)


def load_golden_statuses() -> list[dict]:
    """Rows of the frozen per-reading status file, in import order."""
    with GOLDEN_STATUSES.open(newline="") as handle:
        return list(csv.DictReader(handle))


# ---------------------------------------------------------------------------
# Acceptance summary: one line per test in tests/test_acceptance.py.

_ACCEPTANCE_RESULTS: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call":
        _ACCEPTANCE_RESULTS.append((name, report.outcome))
    elif report.failed:  # setup/teardown crash still counts as a failure
        _ACCEPTANCE_RESULTS.append((name, "failed"))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, outcome in _ACCEPTANCE_RESULTS:
        verdict = "PASS" if outcome == "passed" else outcome.upper()
        if outcome == "failed":
            verdict = "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
