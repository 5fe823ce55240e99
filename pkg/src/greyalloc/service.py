"""Stateless JSON-over-HTTP facade over the library, consumed by the web
UI. Handlers call the same payload builders as the CLI, so identical
inputs yield identical JSON bodies.

Domain failures map to 400 with a structured error object; malformed
bodies (wrong shapes, non-reciprocal matrices, missing fields) map to
422. Anticipated errors never surface as 500.
"""

from __future__ import annotations

from pathlib import Path
from typing import Callable, Literal

import numpy as np
from fastapi import FastAPI
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel

from . import payloads
from .ahp import PairwiseMatrix
from .allocation import IndicatorTable
from .errors import GreyAllocError
from .sensitivity import ALLOCATION_KINDS, PerturbationSpec, perturb_allocation, perturb_forecast
from .series import TimeSeries


class SeriesBody(BaseModel):
    values: list[float]
    periods: list[str] | None = None


class IndicatorsBody(BaseModel):
    entities: list[str]
    criteria: list[str]
    values: list[list[float]]


class AhpRequest(BaseModel):
    matrix: list[list[float]]
    labels: list[str] | None = None


class AllocateRequest(BaseModel):
    indicators: IndicatorsBody
    matrix: list[list[float]] | None = None
    labels: list[str] | None = None
    directions: dict[str, str] | None = None
    normalized: bool = False
    method: Literal["ahp", "factor"] = "ahp"
    betas: list[float] | None = None
    max_share: dict[str, float] | None = None


class ForecastRequest(BaseModel):
    series: SeriesBody
    model: Literal["verhulst", "logistic"] = "verhulst"
    eps: float = 1e-4
    horizon: int = 0


class SensitivityRequest(BaseModel):
    kind: Literal["remove_point", "set_point", "scale_matrix_entry", "scale_indicator"]
    target: int | list
    value: float | None = None
    series: SeriesBody | None = None
    matrix: list[list[float]] | None = None
    labels: list[str] | None = None
    indicators: IndicatorsBody | None = None
    directions: dict[str, str] | None = None
    normalized: bool = False


def _series_from(body: SeriesBody) -> TimeSeries:
    periods = tuple(body.periods) if body.periods else ()
    if periods and len(periods) != len(body.values):
        raise ValueError("periods and values must have the same length")
    t0 = periods[0] if periods else "t1"
    return TimeSeries(np.array(body.values), t0_label=t0, period_labels=periods)


def _matrix_from(entries, labels) -> PairwiseMatrix:
    arr = np.array(entries, dtype=float)
    return PairwiseMatrix(arr, labels=tuple(labels) if labels else ())


def _table_from(body: IndicatorsBody, directions, normalized: bool) -> IndicatorTable:
    if directions is None:
        dir_tuple = ()
    else:
        missing = [c for c in body.criteria if c not in directions]
        if missing:
            raise ValueError(f"directions missing for criteria: {missing}")
        dir_tuple = tuple(directions[c] for c in body.criteria)
    return IndicatorTable(
        entities=tuple(body.entities), criteria=tuple(body.criteria),
        values=np.array(body.values, dtype=float), directions=dir_tuple,
        normalized=normalized,
    )


def _respond(build: Callable[[], dict]) -> Response:
    try:
        payload = build()
    except GreyAllocError as exc:
        return JSONResponse(status_code=400, content=payloads.error_payload(exc))
    except (ValueError, TypeError) as exc:
        return JSONResponse(status_code=422, content={"detail": str(exc)})
    return Response(content=payloads.dump_payload(payload), media_type="application/json")


def create_app(static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="greyalloc", version=payloads.__version__)

    @app.get("/api/health")
    def health() -> Response:
        return Response(content=payloads.dump_payload(payloads.health_payload()),
                        media_type="application/json")

    @app.post("/api/ahp")
    def ahp_endpoint(req: AhpRequest) -> Response:
        return _respond(lambda: payloads.ahp_payload(_matrix_from(req.matrix, req.labels)))

    @app.post("/api/allocate")
    def allocate_endpoint(req: AllocateRequest) -> Response:
        def build():
            table = _table_from(req.indicators, req.directions, req.normalized)
            matrix = None
            if req.method == "ahp":
                if req.matrix is None:
                    raise ValueError("method 'ahp' requires a matrix")
                matrix = _matrix_from(req.matrix, req.labels)
            elif req.betas is None:
                raise ValueError("method 'factor' requires betas")
            return payloads.allocate_payload(
                table, matrix=matrix, method=req.method, betas=req.betas,
                max_share=req.max_share,
            )
        return _respond(build)

    @app.post("/api/forecast")
    def forecast_endpoint(req: ForecastRequest) -> Response:
        return _respond(lambda: payloads.forecast_payload(
            _series_from(req.series), model=req.model, eps=req.eps, horizon=req.horizon,
        ))

    @app.post("/api/sensitivity")
    def sensitivity_endpoint(req: SensitivityRequest) -> Response:
        def build():
            target = tuple(req.target) if isinstance(req.target, list) else req.target
            spec = PerturbationSpec(req.kind, target, req.value)
            if spec.kind in ALLOCATION_KINDS:
                if req.matrix is None or req.indicators is None:
                    raise ValueError(f"kind {spec.kind!r} requires matrix and indicators")
                matrix = _matrix_from(req.matrix, req.labels)
                table = _table_from(req.indicators, req.directions, req.normalized)
                return payloads.sensitivity_payload(perturb_allocation(matrix, table, spec))
            if req.series is None:
                raise ValueError(f"kind {spec.kind!r} requires a series")
            return payloads.sensitivity_payload(perturb_forecast(_series_from(req.series), spec))
        return _respond(build)

    if static_dir and Path(static_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    return app
