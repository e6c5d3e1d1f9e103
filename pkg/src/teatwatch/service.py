"""HTTP ingestion service.

Two front doors to the same record store: the original handheld device's
query-parameter endpoint, kept wire-compatible so deployed devices keep
working, and a JSON API for everything newer. Every stored reading is
classified on the way out; clients never classify.
"""

from __future__ import annotations

import datetime as dt
import math
from dataclasses import replace
from typing import Optional

from fastapi import FastAPI, HTTPException, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field, field_validator

from . import __version__
from .classify import (
    DEFAULT_THRESHOLDS,
    THERMOMETER_RANGE,
    ClassificationMode,
    ThresholdTable,
    classify_quartet,
    reference_ranges,
)
from .dates import parse_reading_date
from .errors import EmptyStoreError, TeatwatchError, ValidationError
from .store import AnimalRecord, RecordStore

# Path and parameter names the deployed devices bake in; do not rename.
LEGACY_INSERT_PATH = "/GravarMastiteServices.do"
_LEGACY_PARAMS = ("data", "is_mastite", "teto1", "teto2", "teto3", "teto4", "id_animal")


class ReadingSubmission(BaseModel):
    """JSON body for POST /api/v1/readings."""

    animal_id: int = Field(ge=1)
    date: dt.date
    teats: list[float] = Field(min_length=4, max_length=4)
    cup_test: bool

    @field_validator("teats")
    @classmethod
    def _within_thermometer_range(cls, teats: list[float]) -> list[float]:
        low, high = THERMOMETER_RANGE
        for i, t in enumerate(teats, start=1):
            if not math.isfinite(t) or not low <= t <= high:
                raise ValueError(
                    f"teat {i} reading {t} is outside the thermometer range "
                    f"[{low}, {high}] °C")
        return teats


def _parse_legacy_params(params: dict, *, range_check: bool) -> AnimalRecord:
    """Build a record from the device's query parameters; any defect raises."""
    missing = [name for name in _LEGACY_PARAMS if name not in params]
    if missing:
        raise ValidationError("missing parameters: " + ", ".join(missing))
    flag = int(params["is_mastite"])
    if flag not in (0, 1):
        raise ValidationError(f"is_mastite must be 0 or 1, got {flag}")
    teats = tuple(float(params[f"teto{i}"]) for i in range(1, 5))
    if not all(math.isfinite(t) for t in teats):
        raise ValidationError("teat readings must be finite")
    if range_check:
        low, high = THERMOMETER_RANGE
        if not all(low <= t <= high for t in teats):
            raise ValidationError("teat reading outside the thermometer range")
    animal = int(params["id_animal"])
    return AnimalRecord(
        reading_date=parse_reading_date(params["data"]),
        teto1=teats[0], teto2=teats[1], teto3=teats[2], teto4=teats[3],
        is_mastite=bool(flag), id_animal=animal)


def create_app(store: RecordStore,
               *,
               thresholds: ThresholdTable = DEFAULT_THRESHOLDS,
               legacy_range_check: bool = False,
               static_dir: Optional[str] = None) -> FastAPI:
    """Build the service around an open record store.

    ``legacy_range_check`` additionally applies the thermometer range to the
    device endpoint (off by default: the original accepted any parseable
    float). ``static_dir``, when given, serves a built web UI at ``/``.
    """
    app = FastAPI(title="teatwatch", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"], allow_methods=["*"], allow_headers=["*"])

    @app.exception_handler(RequestValidationError)
    async def _validation_failure(request: Request, exc: RequestValidationError):
        errors = [{"field": ".".join(str(part) for part in err["loc"]),
                   "message": err["msg"]} for err in exc.errors()]
        return JSONResponse(status_code=400, content={"errors": errors})

    def _diagnosis(record: AnimalRecord) -> dict:
        teats = list(record.teats)
        return {
            "record_id": record.record_id,
            "animal_id": record.id_animal,
            "date": record.reading_date.isoformat(),
            "teats": teats,
            "cup_test": record.is_mastite,
            "status_legacy": classify_quartet(
                teats, ClassificationMode.LEGACY, thresholds).label,
            "status_worst_teat": classify_quartet(
                teats, ClassificationMode.WORST_TEAT, thresholds).label,
            "reference_ranges": [
                {"status": status.label, "range": text}
                for status, text in reference_ranges(thresholds)],
        }

    @app.api_route(LEGACY_INSERT_PATH, methods=["GET", "POST"],
                   include_in_schema=False)
    async def legacy_insert(request: Request) -> Response:
        # The device treats anything but a plain 200 as failure and shows
        # no body, so errors are a bare 500 exactly like the original.
        params = dict(request.query_params)
        if request.method == "POST":
            content_type = request.headers.get("content-type", "")
            if content_type.startswith("application/x-www-form-urlencoded"):
                form = await request.form()
                for key, value in form.items():
                    params.setdefault(key, value)
        try:
            record = _parse_legacy_params(
                params, range_check=legacy_range_check)
            record_id = store.insert(record)
        except (TeatwatchError, KeyError, TypeError, ValueError):
            return Response(status_code=500)
        return Response(status_code=200, headers={"X-Record-Id": str(record_id)})

    @app.post("/api/v1/readings", status_code=201)
    def submit_reading(body: ReadingSubmission):
        record = AnimalRecord(
            reading_date=body.date,
            teto1=body.teats[0], teto2=body.teats[1],
            teto3=body.teats[2], teto4=body.teats[3],
            is_mastite=body.cup_test, id_animal=body.animal_id)
        try:
            record_id = store.insert(record)
        except ValidationError as exc:
            return JSONResponse(status_code=400, content={
                "errors": [{"field": "body", "message": str(exc)}]})
        return _diagnosis(replace(record, record_id=record_id))

    @app.get("/api/v1/readings/last")
    def last_reading():
        try:
            record = store.last_record()
        except EmptyStoreError:
            raise HTTPException(status_code=404, detail="no readings stored yet")
        return _diagnosis(record)

    @app.get("/api/v1/animals/{animal_id}/readings")
    def animal_readings(animal_id: int,
                        date_from: Optional[dt.date] = Query(None, alias="from"),
                        date_to: Optional[dt.date] = Query(None, alias="to")):
        try:
            records = store.list_records(
                animal_id=animal_id, date_from=date_from, date_to=date_to)
        except ValidationError as exc:
            return JSONResponse(status_code=400, content={
                "errors": [{"field": "query", "message": str(exc)}]})
        return [_diagnosis(record) for record in records]

    @app.get("/healthz")
    def health():
        try:
            records = store.count()
        except TeatwatchError:
            return JSONResponse(status_code=503, content={"status": "unavailable"})
        return {"service": "teatwatch", "version": __version__,
                "status": "ok", "records": records}

    if static_dir is not None:
        # Mounted last so the API routes above always win.
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
