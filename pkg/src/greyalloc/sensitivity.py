"""One-at-a-time perturbation studies for the forecaster and the
allocator: remove or overwrite a series point, rescale a judgment-matrix
entry (reciprocal mirrored), or rescale one entity's indicator, then refit
everything and report deltas and rank shifts.

Reports are deterministic: no-op perturbations reproduce the baseline
bit for bit. Relative deltas are measured against the mean magnitude of
the two values, so swapping baseline and perturbed exactly flips signs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import ahp, verhulst
from .ahp import PairwiseMatrix, principal_weights
from .allocation import IndicatorTable, ScoreTable, normalize_indicators, score_ahp
from .errors import SeriesTooShort, TargetNotFound
from .series import TimeSeries

KINDS = ("remove_point", "set_point", "scale_matrix_entry", "scale_indicator")

SERIES_KINDS = ("remove_point", "set_point")
ALLOCATION_KINDS = ("scale_matrix_entry", "scale_indicator")


@dataclass(frozen=True)
class PerturbationSpec:
    """What to poke: a 1-based series index, a 1-based matrix cell (i, j),
    or an (entity, criterion) pair, plus the new value or scale factor."""

    kind: str
    target: object
    value: float | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown perturbation kind {self.kind!r}; expected one of {KINDS}")
        if self.kind != "remove_point" and self.value is None:
            raise ValueError(f"perturbation kind {self.kind!r} requires a value or factor")

    def describe(self) -> dict:
        return {"kind": self.kind, "target": list(self.target) if isinstance(self.target, tuple) else self.target,
                "value": self.value}


@dataclass(frozen=True)
class SensitivityReport:
    spec: PerturbationSpec
    baseline: dict
    perturbed: dict
    deltas: dict[str, float]
    rank_shifts: tuple[dict, ...] = field(default=())


def relative_delta(old: float, new: float) -> float:
    """Relative change against the mean magnitude of the two values;
    exactly antisymmetric under swapping old/new, 0 for equal values."""
    if new == old:
        return 0.0
    return 2.0 * (new - old) / (abs(old) + abs(new))


def _numeric_deltas(baseline: dict, perturbed: dict, prefix: str = "") -> dict[str, float]:
    out: dict[str, float] = {}
    for key, base_val in baseline.items():
        pert_val = perturbed.get(key)
        name = f"{prefix}{key}"
        if isinstance(base_val, dict) and isinstance(pert_val, dict):
            out.update(_numeric_deltas(base_val, pert_val, prefix=f"{name}."))
        elif isinstance(base_val, (int, float)) and isinstance(pert_val, (int, float)) \
                and not isinstance(base_val, bool):
            out[name] = relative_delta(float(base_val), float(pert_val))
    return out


def _forecast_summary(series: TimeSeries) -> dict:
    model = verhulst.fit(series)
    report = verhulst.validate(model, series)
    summary = {
        "a": model.a,
        "b": model.b,
        "x0": model.x0,
        "q": report.q,
        "c": report.c,
        "p": report.p,
        "grade": report.grade.name,
        "saturation_value": None,
        "saturation_time": None,
    }
    if model.a < 0:
        sat = verhulst.saturation(model)
        summary["saturation_value"] = sat.value
        summary["saturation_time"] = sat.time
    return summary


def perturb_forecast(series: TimeSeries, spec: PerturbationSpec) -> SensitivityReport:
    """Refit the grey Verhulst model after removing or overwriting one
    point; removal contracts the series (periods renumber, no gap)."""
    if spec.kind not in SERIES_KINDS:
        raise ValueError(f"perturb_forecast handles {SERIES_KINDS}, got {spec.kind!r}")

    if spec.kind == "remove_point":
        if series.n - 1 < 4:
            raise SeriesTooShort(
                f"cannot refit after {spec.describe()}: series would have n={series.n - 1} < 4"
            )
        k = int(spec.target)
        if not 1 <= k <= series.n:
            raise TargetNotFound(f"series has no point k={k} (n={series.n})")
        perturbed_series = TimeSeries(np.delete(series.values, k - 1), t0_label=series.t0_label)
    else:
        k = int(spec.target)
        if not 1 <= k <= series.n:
            raise TargetNotFound(f"series has no point k={k} (n={series.n})")
        values = series.values.copy()
        values[k - 1] = float(spec.value)
        perturbed_series = TimeSeries(values, t0_label=series.t0_label,
                                      period_labels=series.period_labels)

    baseline = _forecast_summary(series)
    perturbed = _forecast_summary(perturbed_series)
    return SensitivityReport(
        spec=spec,
        baseline=baseline,
        perturbed=perturbed,
        deltas=_numeric_deltas(baseline, perturbed),
    )


def _allocation_summary(matrix: PairwiseMatrix, table: IndicatorTable) -> tuple[dict, ScoreTable]:
    wv = principal_weights(matrix)
    normalized = table if table.normalized else normalize_indicators(table)
    scored = score_ahp(normalized, wv)
    ranks = scored.ranks()
    summary = {
        "weights": dict(zip(wv.labels, wv.weights.tolist())),
        "lambda_max": wv.lambda_max,
        "ci": wv.ci,
        "cr": wv.cr,
        "consistent": wv.consistent,
        "scores": dict(zip(scored.entities, scored.scores.tolist())),
        "proportions": dict(zip(scored.entities, scored.proportions.tolist())),
        "ranks": {entity: rank for entity, rank in ranks.items()},
    }
    return summary, scored


def perturb_allocation(matrix: PairwiseMatrix, table: IndicatorTable,
                       spec: PerturbationSpec) -> SensitivityReport:
    """Recompute weights, scores and ranks after one perturbation.

    Matrix perturbations keep reciprocity (the mirrored entry updates with
    the target). A perturbed matrix that fails the consistency check is
    not an error; cr and the consistent flag carry the verdict.
    """
    if spec.kind not in ALLOCATION_KINDS:
        raise ValueError(f"perturb_allocation handles {ALLOCATION_KINDS}, got {spec.kind!r}")

    p_matrix, p_table = matrix, table
    if spec.kind == "scale_matrix_entry":
        i, j = (int(v) for v in spec.target)
        if not (1 <= i <= matrix.n and 1 <= j <= matrix.n) or i == j:
            raise TargetNotFound(f"matrix has no off-diagonal cell ({i},{j}) (n={matrix.n})")
        p_matrix = ahp.scale_entry(matrix, i, j, float(spec.value))
    else:
        entity, criterion = spec.target
        try:
            e = table.entity_index(entity)
            c = table.criterion_index(criterion)
        except KeyError as exc:
            raise TargetNotFound(str(exc)) from None
        p_table = table.with_value(entity, criterion, float(table.values[e, c]) * float(spec.value))

    baseline, base_scored = _allocation_summary(matrix, table)
    perturbed, pert_scored = _allocation_summary(p_matrix, p_table)

    base_ranks = base_scored.ranks()
    pert_ranks = pert_scored.ranks()
    rank_shifts = tuple(
        {"entity": entity, "old_rank": base_ranks[entity], "new_rank": pert_ranks[entity]}
        for entity in sorted(base_ranks)
    )
    return SensitivityReport(
        spec=spec,
        baseline=baseline,
        perturbed=perturbed,
        deltas=_numeric_deltas(baseline, perturbed),
        rank_shifts=rank_shifts,
    )
