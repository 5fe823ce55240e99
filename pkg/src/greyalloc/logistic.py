"""Three-parameter logistic growth fit by damped Gauss-Newton.

The baseline forecaster: f(t) = L / (1 + b*exp(-k*t)) with carrying
capacity L, shape b and growth rate k. Reported fit quality is the
coefficient of determination against the observed series.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DivergedFit, SeriesTooShort
from .series import TimeSeries

_MAX_ITER = 500
_RSS_RTOL = 1e-10
_STEP_TOL = 1e-12


@dataclass(frozen=True)
class LogisticParams:
    L: float
    b: float
    k: float


@dataclass(frozen=True)
class FitQuality:
    r2: float
    rss: float
    converged: bool
    degenerate_variance: bool = False


def predict_logistic(params: LogisticParams, t):
    """Logistic curve value(s) at time t (scalar or array)."""
    t_arr = np.asarray(t, dtype=float)
    out = params.L / (1.0 + params.b * np.exp(-params.k * t_arr))
    return float(out) if np.isscalar(t) or t_arr.ndim == 0 else out


def jacobian(params: LogisticParams, t) -> np.ndarray:
    """Analytic Jacobian of the curve w.r.t. (L, b, k), shape (len(t), 3)."""
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    e = np.exp(-params.k * t_arr)
    d = 1.0 + params.b * e
    d_L = 1.0 / d
    d_b = -params.L * e / d**2
    d_k = params.L * params.b * t_arr * e / d**2
    return np.column_stack([d_L, d_b, d_k])


def _initial_guess(t: np.ndarray, y: np.ndarray) -> LogisticParams:
    # logistic linearization: logit(y/L) is linear in t with slope k
    L0 = 1.05 * float(np.max(y))
    delta = 1e-9 * L0
    u = np.clip((y + delta) / L0, delta, 1.0 - delta)
    logit = np.log(u / (1.0 - u))
    slope, intercept = np.polyfit(t, logit, 1)
    k0 = float(slope)
    b0 = float(np.exp(-intercept))
    return LogisticParams(L=L0, b=b0, k=k0)


def fit_logistic(series: TimeSeries, init: LogisticParams | None = None) -> tuple[LogisticParams, FitQuality]:
    """Minimize the sum of squared curve residuals over (L, b, k).

    Levenberg-style damped Gauss-Newton from a logit-linearization start.
    Converges when the relative RSS change drops below 1e-10 or the step
    norm below 1e-12; raises DivergedFit if 500 iterations pass and the
    RSS is still moving by more than 1% per step.
    """
    if series.n < 4:
        raise SeriesTooShort(f"logistic fit needs n >= 4, got n={series.n}")
    y = series.values
    t = np.arange(series.n, dtype=float)

    if init is None:
        init = _initial_guess(t, y)
    theta = np.array([init.L, init.b, init.k])
    tiny = np.finfo(float).tiny

    def rss_of(th):
        r = th[0] / (1.0 + th[1] * np.exp(-th[2] * t)) - y
        return float(r @ r)

    rss = rss_of(theta)
    lam = 1e-3
    converged = False
    last_rel_change = float("inf")

    for _ in range(_MAX_ITER):
        params = LogisticParams(*theta)
        r = predict_logistic(params, t) - y
        J = jacobian(params, t)
        jtj = J.T @ J
        jtr = J.T @ r
        damp = np.diag(jtj).copy()
        damp[damp == 0.0] = 1.0

        accepted = False
        while lam < 1e15:
            try:
                step = np.linalg.solve(jtj + lam * np.diag(damp), -jtr)
            except np.linalg.LinAlgError:
                lam *= 10.0
                continue
            if np.linalg.norm(step) < _STEP_TOL:
                converged = True
                break
            trial = theta + step
            if trial[0] > 0 and trial[1] > 0:
                trial_rss = rss_of(trial)
                if trial_rss < rss:
                    last_rel_change = (rss - trial_rss) / max(rss, tiny)
                    theta, rss = trial, trial_rss
                    lam = max(lam / 10.0, 1e-12)
                    accepted = True
                    break
            lam *= 10.0
        if converged:
            break
        if not accepted:
            break
        if last_rel_change < _RSS_RTOL:
            converged = True
            break

    if not converged and last_rel_change > 0.01:
        raise DivergedFit(f"iteration cap hit with RSS still moving {last_rel_change:.3%} per step")

    params = LogisticParams(L=float(theta[0]), b=float(theta[1]), k=float(theta[2]))
    tss = float(np.sum((y - y.mean()) ** 2))
    if tss == 0.0:
        quality = FitQuality(r2=0.0, rss=rss, converged=converged, degenerate_variance=True)
    else:
        quality = FitQuality(r2=1.0 - rss / tss, rss=rss, converged=converged)
    return params, quality
