"""Saturation forecasting (grey Verhulst, logistic) and AHP-based
multi-criteria allocation, with sensitivity and feedback-dynamics tools."""

__version__ = "0.1.0"

from . import errors
from .ahp import PairwiseMatrix, WeightVector, build_matrix, consistency, principal_weights, scale_entry
from .allocation import (
    FeedbackConfig,
    IndicatorTable,
    ScoreTable,
    apply_max_shares,
    feedback_step,
    normalize_indicators,
    proportions,
    score_ahp,
    score_factor,
    simulate_feedback,
)
from .logistic import FitQuality, LogisticParams, fit_logistic, predict_logistic
from .sensitivity import PerturbationSpec, SensitivityReport, perturb_allocation, perturb_forecast
from .series import TimeSeries, cumulate, difference, neighbor_mean
from .verhulst import (
    AccuracyReport,
    Grade,
    GreyVerhulstModel,
    SaturationResult,
    fit,
    fitted_values,
    predict,
    saturation,
    validate,
)

__all__ = [
    "errors",
    "TimeSeries", "difference", "cumulate", "neighbor_mean",
    "GreyVerhulstModel", "AccuracyReport", "SaturationResult", "Grade",
    "fit", "predict", "fitted_values", "saturation", "validate",
    "LogisticParams", "FitQuality", "fit_logistic", "predict_logistic",
    "PairwiseMatrix", "WeightVector", "build_matrix", "principal_weights", "consistency", "scale_entry",
    "IndicatorTable", "ScoreTable", "FeedbackConfig",
    "normalize_indicators", "score_ahp", "score_factor", "proportions",
    "feedback_step", "simulate_feedback", "apply_max_shares",
    "PerturbationSpec", "SensitivityReport", "perturb_forecast", "perturb_allocation",
]
