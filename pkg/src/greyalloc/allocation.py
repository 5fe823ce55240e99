"""Indicator normalization, weighted scoring, allocation proportions, and
the inflow-feedback dynamics.

Benefit criteria are min-max normalized; cost criteria use a tie-aware
rank transform (the worst raw value maps to 0, the best to 1), so lowering
an entity's cost indicator can only raise its score. Scores convert to
allocation shares by simple proportion.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace

import numpy as np
from scipy.stats import rankdata

from .ahp import WeightVector
from .errors import AllNonPositive, DegenerateCriterion, LabelMismatch, SharesDontSum

log = logging.getLogger(__name__)

BENEFIT = "benefit"
COST = "cost"

_SUM_TOL = 1e-9


@dataclass(frozen=True)
class IndicatorTable:
    """Entities x criteria values, each criterion tagged benefit or cost."""

    entities: tuple[str, ...]
    criteria: tuple[str, ...]
    values: np.ndarray
    directions: tuple[str, ...] = ()
    normalized: bool = False

    def __post_init__(self):
        arr = np.array(self.values, dtype=float)
        if arr.shape != (len(self.entities), len(self.criteria)):
            raise ValueError(
                f"values shape {arr.shape} does not match "
                f"{len(self.entities)} entities x {len(self.criteria)} criteria"
            )
        if not np.all(np.isfinite(arr)):
            raise ValueError("indicator values must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "entities", tuple(self.entities))
        object.__setattr__(self, "criteria", tuple(self.criteria))
        dirs = tuple(self.directions) if self.directions else (BENEFIT,) * len(self.criteria)
        if len(dirs) != len(self.criteria):
            raise ValueError("need one direction per criterion")
        for d in dirs:
            if d not in (BENEFIT, COST):
                raise ValueError(f"direction must be 'benefit' or 'cost', got {d!r}")
        object.__setattr__(self, "directions", dirs)

    def entity_index(self, entity: str) -> int:
        try:
            return self.entities.index(entity)
        except ValueError:
            raise KeyError(f"unknown entity {entity!r}") from None

    def criterion_index(self, criterion: str) -> int:
        try:
            return self.criteria.index(criterion)
        except ValueError:
            raise KeyError(f"unknown criterion {criterion!r}") from None

    def with_value(self, entity: str, criterion: str, value: float) -> "IndicatorTable":
        arr = self.values.copy()
        arr[self.entity_index(entity), self.criterion_index(criterion)] = value
        return replace(self, values=arr)


@dataclass(frozen=True)
class ScoreTable:
    """Per-entity score and its share of the total."""

    entities: tuple[str, ...]
    scores: np.ndarray
    proportions: np.ndarray
    clamped_entities: tuple[str, ...] = ()

    def ranking(self) -> list[tuple[str, int]]:
        """Entities with 1-based ranks, best score first; ties break by
        entity name (lexicographic) for determinism."""
        order = sorted(range(len(self.entities)), key=lambda i: (-self.scores[i], self.entities[i]))
        return [(self.entities[i], rank + 1) for rank, i in enumerate(order)]

    def ranks(self) -> dict[str, int]:
        return {entity: rank for entity, rank in self.ranking()}


@dataclass(frozen=True)
class FeedbackConfig:
    """Per-criterion sensitivity of indicators to inflow (sign encodes
    direction: negative gamma erodes the indicator) and the horizon."""

    gamma: dict[str, float]
    horizon: int = 1

    def __post_init__(self):
        if self.horizon < 1:
            raise ValueError(f"horizon must be >= 1, got {self.horizon}")


def normalize_indicators(table: IndicatorTable) -> IndicatorTable:
    """Map every criterion column into dimensionless [0, 1].

    Benefit columns are min-max scaled; cost columns get the rank
    transform (n - rank)/(n - 1) with ties sharing the mean rank, so the
    highest (worst) raw value lands at 0 and the lowest at 1.
    """
    n = len(table.entities)
    if n < 2:
        raise ValueError("normalization needs at least 2 entities")
    out = np.empty_like(table.values)
    for c, (name, direction) in enumerate(zip(table.criteria, table.directions)):
        col = table.values[:, c]
        if direction == BENEFIT:
            lo, hi = float(col.min()), float(col.max())
            if hi == lo:
                raise DegenerateCriterion(f"criterion {name!r} has max == min; cannot min-max normalize")
            out[:, c] = (col - lo) / (hi - lo)
        else:
            out[:, c] = (n - rankdata(col)) / (n - 1)
    return replace(table, values=out, normalized=True)


def _align_weights(criteria: tuple[str, ...], weights: WeightVector) -> np.ndarray:
    if sorted(criteria) != sorted(weights.labels):
        raise LabelMismatch(
            f"criteria {list(criteria)} do not match weight labels {list(weights.labels)}"
        )
    by_label = dict(zip(weights.labels, weights.weights))
    return np.array([by_label[c] for c in criteria])


def score_ahp(normalized: IndicatorTable, weights: WeightVector) -> ScoreTable:
    """Weighted-sum acceptance score per entity plus allocation shares.

    The table must hold normalized, direction-adjusted values in [0, 1];
    weights are matched to criteria by label.
    """
    w = _align_weights(normalized.criteria, weights)
    vals = normalized.values
    if vals.min() < -_SUM_TOL or vals.max() > 1 + _SUM_TOL:
        raise ValueError("score_ahp expects normalized indicator values in [0, 1]")
    scores = vals @ w
    return ScoreTable(entities=normalized.entities, scores=scores, proportions=proportions(scores))


def score_factor(table: IndicatorTable, betas) -> ScoreTable:
    """Affine factor-model score: intercept plus beta-weighted indicators.

    Betas are positional (intercept first, then one per criterion in table
    order). Negative scores are clamped to 0 before proportioning and the
    affected entities reported.
    """
    betas = np.asarray(betas, dtype=float)
    if betas.size != len(table.criteria) + 1:
        raise LabelMismatch(
            f"need {len(table.criteria) + 1} betas (intercept first), got {betas.size}"
        )
    raw = betas[0] + table.values @ betas[1:]
    clamped_idx = np.nonzero(raw < 0)[0]
    scores = np.where(raw < 0, 0.0, raw)
    if not np.any(scores > 0):
        raise AllNonPositive("no entity has a positive factor score")
    clamped = tuple(table.entities[i] for i in clamped_idx)
    if clamped:
        log.warning("clamped negative factor scores to 0 for: %s", ", ".join(clamped))
    return ScoreTable(
        entities=table.entities, scores=scores,
        proportions=proportions(scores), clamped_entities=clamped,
    )


def proportions(scores) -> np.ndarray:
    """Shares s_i / sum(s); requires nonnegative scores, at least one
    positive."""
    s = np.asarray(scores, dtype=float)
    if np.any(s < 0):
        raise ValueError("proportions need nonnegative scores")
    total = s.sum()
    if total <= 0:
        raise AllNonPositive("all scores are zero; proportions undefined")
    return s / total


def apply_max_shares(entities, shares, caps: dict[str, float]) -> np.ndarray:
    """Cap per-entity shares and redistribute the excess proportionally
    among the uncapped entities; iterates until no cap is violated."""
    shares = np.asarray(shares, dtype=float).copy()
    cap_vec = np.array([caps.get(e, np.inf) for e in entities])
    if np.sum(np.minimum(cap_vec, 1.0)) < 1.0 - _SUM_TOL:
        raise ValueError("max shares are infeasible: caps sum to less than 1")
    fixed = np.zeros(len(shares), dtype=bool)
    for _ in range(len(shares)):
        free = ~fixed
        budget = 1.0 - shares[fixed].sum()
        if shares[free].sum() > 0:
            shares[free] *= budget / shares[free].sum()
        over = free & (shares > cap_vec + _SUM_TOL)
        if not over.any():
            break
        shares[over] = cap_vec[over]
        fixed |= over
    return shares


def feedback_step(state: IndicatorTable, inflow: float, shares, config: FeedbackConfig) -> IndicatorTable:
    """One inflow-feedback update: each entity's each criterion moves by
    inflow * share * gamma(criterion). Returns a new raw table."""
    shares = np.asarray(shares, dtype=float)
    if shares.size != len(state.entities):
        raise SharesDontSum(f"need one share per entity ({len(state.entities)}), got {shares.size}")
    if abs(shares.sum() - 1.0) > _SUM_TOL:
        raise SharesDontSum(f"shares sum to {shares.sum():.12g}, expected 1")
    missing = [c for c in state.criteria if c not in config.gamma]
    if missing:
        raise LabelMismatch(f"feedback gamma missing for criteria: {missing}")
    gamma = np.array([config.gamma[c] for c in state.criteria])
    delta = inflow * np.outer(shares, gamma)
    if not delta.any():
        return state
    return replace(state, values=state.values + delta, normalized=False)


def simulate_feedback(
    initial: IndicatorTable,
    inflows,
    weights: WeightVector,
    config: FeedbackConfig,
    max_shares: dict[str, float] | None = None,
) -> list[ScoreTable]:
    """Iterate normalize -> score -> proportion -> feedback over the
    inflow list; returns one ScoreTable per period.

    Shares fed back into the indicator update honor ``max_shares`` caps
    when given; the emitted tables carry the uncapped proportions.
    """
    inflows = list(inflows)
    if config.horizon != len(inflows):
        raise ValueError(f"horizon {config.horizon} != number of inflows {len(inflows)}")
    state = initial
    trajectory: list[ScoreTable] = []
    for period, inflow in enumerate(inflows, start=1):
        try:
            normalized = state if state.normalized else normalize_indicators(state)
            scored = score_ahp(normalized, weights)
        except DegenerateCriterion as exc:
            raise DegenerateCriterion(f"period {period}: {exc}") from exc
        trajectory.append(scored)
        shares = scored.proportions
        if max_shares:
            shares = apply_max_shares(state.entities, shares, max_shares)
        state = feedback_step(state, inflow, shares, config)
    return trajectory
