"""JSON payload builders shared by the CLI and the HTTP service.

Both surfaces call these functions and serialize with :func:`dump_payload`,
so identical inputs produce identical bytes. Field names are snake_case;
floats keep full precision (the 9-digit canonical form is for files only).
"""

from __future__ import annotations

import json

import numpy as np

from . import __version__
from .ahp import PairwiseMatrix, WeightVector, principal_weights
from .allocation import (
    FeedbackConfig,
    IndicatorTable,
    apply_max_shares,
    normalize_indicators,
    score_ahp,
    score_factor,
    simulate_feedback,
)
from .errors import GreyAllocError
from .logistic import fit_logistic, predict_logistic
from .sensitivity import SensitivityReport
from .series import TimeSeries
from .verhulst import fit, fitted_values, predict, saturation, validate


def dump_payload(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def error_payload(exc: GreyAllocError) -> dict:
    return {"error": {"code": exc.code, "message": str(exc)}}


def series_section(series: TimeSeries) -> dict:
    labels = list(series.period_labels)
    if len(labels) < series.n:
        labels += [f"t{i + 1}" for i in range(len(labels), series.n)]
    return {"periods": labels, "values": series.values.tolist()}


def forecast_payload(series: TimeSeries, model: str = "verhulst",
                     eps: float = 1e-4, horizon: int = 0) -> dict:
    if model == "verhulst":
        fitted_model = fit(series)
        report = validate(fitted_model, series)
        payload = {
            "model": "verhulst",
            "series": series_section(series),
            "params": {"a": fitted_model.a, "b": fitted_model.b, "x0": fitted_model.x0},
            "fitted": fitted_values(fitted_model, series.n).tolist(),
            "forecast": predict(fitted_model, np.arange(series.n, series.n + horizon)).tolist(),
            "accuracy": {"q": report.q, "c": report.c, "p": report.p, "grade": report.grade.name},
            "saturation": None,
        }
        if fitted_model.a < 0:
            sat = saturation(fitted_model, eps=eps)
            payload["saturation"] = {"time": sat.time, "value": sat.value}
        return payload
    if model == "logistic":
        params, quality = fit_logistic(series)
        t_fit = np.arange(series.n, dtype=float)
        t_fore = np.arange(series.n, series.n + horizon, dtype=float)
        return {
            "model": "logistic",
            "series": series_section(series),
            "params": {"L": params.L, "b": params.b, "k": params.k},
            "fitted": predict_logistic(params, t_fit).tolist(),
            "forecast": predict_logistic(params, t_fore).tolist(),
            "quality": {
                "r2": quality.r2,
                "rss": quality.rss,
                "converged": quality.converged,
                "degenerate_variance": quality.degenerate_variance,
            },
        }
    raise ValueError(f"unknown forecast model {model!r}")


def ahp_payload(matrix: PairwiseMatrix, tol: float = 1e-12) -> dict:
    wv = principal_weights(matrix, tol=tol)
    return weights_section(wv)


def weights_section(wv: WeightVector) -> dict:
    return {
        "labels": list(wv.labels),
        "weights": wv.weights.tolist(),
        "lambda_max": wv.lambda_max,
        "ci": wv.ci,
        "ri": wv.ri,
        "cr": wv.cr,
        "consistent": wv.consistent,
    }


def _ranking_section(scored, capped=None) -> list[dict]:
    ranks = scored.ranks()
    by_entity = {
        entity: {
            "entity": entity,
            "score": float(scored.scores[i]),
            "proportion": float(scored.proportions[i]),
            "rank": ranks[entity],
        }
        for i, entity in enumerate(scored.entities)
    }
    if capped is not None:
        for i, entity in enumerate(scored.entities):
            by_entity[entity]["capped_proportion"] = float(capped[i])
    return [by_entity[entity] for entity, _ in scored.ranking()]


def allocate_payload(table: IndicatorTable, matrix: PairwiseMatrix | None = None,
                     method: str = "ahp", betas=None,
                     max_share: dict[str, float] | None = None,
                     tol: float = 1e-12) -> dict:
    if method == "ahp":
        if matrix is None:
            raise ValueError("ahp allocation requires a judgment matrix")
        wv = principal_weights(matrix, tol=tol)
        normalized = table if table.normalized else normalize_indicators(table)
        scored = score_ahp(normalized, wv)
        payload = {"method": "ahp", "weights": weights_section(wv)}
    elif method == "factor":
        if betas is None:
            raise ValueError("factor allocation requires betas")
        scored = score_factor(table, betas)
        payload = {"method": "factor", "betas": np.asarray(betas, dtype=float).tolist()}
        if scored.clamped_entities:
            payload["clamped_entities"] = list(scored.clamped_entities)
    else:
        raise ValueError(f"unknown allocation method {method!r}")

    capped = None
    if max_share:
        capped = apply_max_shares(scored.entities, scored.proportions, max_share)
    payload["ranking"] = _ranking_section(scored, capped)
    return payload


def sensitivity_payload(report: SensitivityReport) -> dict:
    return {
        "spec": report.spec.describe(),
        "baseline": report.baseline,
        "perturbed": report.perturbed,
        "deltas": report.deltas,
        "rank_shifts": list(report.rank_shifts),
    }


def simulate_payload(initial: IndicatorTable, inflows, matrix: PairwiseMatrix,
                     gamma: dict[str, float],
                     max_share: dict[str, float] | None = None,
                     tol: float = 1e-12) -> dict:
    inflows = [float(v) for v in inflows]
    wv = principal_weights(matrix, tol=tol)
    config = FeedbackConfig(gamma=gamma, horizon=len(inflows))
    trajectory = simulate_feedback(initial, inflows, wv, config, max_shares=max_share or None)
    periods = [
        {"period": t + 1, "inflow": float(inflow), "ranking": _ranking_section(scored)}
        for t, (inflow, scored) in enumerate(zip(inflows, trajectory))
    ]
    return {"method": "ahp", "weights": weights_section(wv), "periods": periods}


def health_payload() -> dict:
    return {"status": "ok", "version": __version__}
