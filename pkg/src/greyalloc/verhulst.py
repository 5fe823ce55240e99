"""Grey Verhulst saturation model: least-squares fit, whitening-equation
prediction, saturation detection, and the three-test accuracy grading.

The raw series plays the accumulated role (Verhulst convention): the model
is fit on the first differences against neighbor means of the raw data.
The whitening equation evaluated at offset k returns the fitted value for
period k+1, so ``predict(model, 0)`` reproduces the first observation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import NoSaturation, NonPositiveData, NumericOverflow, SeriesTooShort, SingularSystem
from .series import TimeSeries, difference, neighbor_mean

# columns of B count as collinear when sin^2 of their angle is below this
_SINGULAR_RTOL = 1e-12


@dataclass(frozen=True)
class GreyVerhulstModel:
    """Fitted coefficients of the grey Verhulst model.

    ``a`` is the development coefficient (1/period), ``b`` the saturation
    coefficient (1/(period*count)); the asymptote of a converging model is
    a/b. ``x0`` anchors the whitening equation at the first observation.
    """

    a: float
    b: float
    x0: float


class Grade(enum.IntEnum):
    """Accuracy level; higher numbers are worse."""

    I = 1
    II = 2
    III = 3
    IV = 4


@dataclass(frozen=True)
class AccuracyReport:
    """Residual statistics: q mean relative residual, c variance ratio,
    p small-error probability, and the level implied by (c, p)."""

    q: float
    c: float
    p: float
    grade: Grade


@dataclass(frozen=True)
class SaturationResult:
    time: int
    value: float


def fit(series: TimeSeries) -> GreyVerhulstModel:
    """Least-squares estimate of (a, b) from the raw series.

    Builds the regression with rows [-z(k), z(k)^2] against the first
    differences for k = 2..n and solves the 2x2 normal equations in closed
    form. The anchor x0 is the first observation.
    """
    if series.n < 4:
        raise SeriesTooShort(f"grey Verhulst fit needs n >= 4, got n={series.n}")
    if np.any(series.values <= 0):
        bad = int(np.argmax(series.values <= 0)) + 1
        raise NonPositiveData(f"value at k={bad} is not strictly positive")

    y = difference(series)
    z = neighbor_mean(series)

    # normal equations for B = [-z, z^2]
    m11 = float(np.dot(z, z))
    m12 = -float(np.dot(z, z * z))
    m22 = float(np.dot(z * z, z * z))
    r1 = -float(np.dot(z, y))
    r2 = float(np.dot(z * z, y))

    # det = m11*m22*sin^2(angle between columns); scale-free collinearity test
    det = m11 * m22 - m12 * m12
    if abs(det) < _SINGULAR_RTOL * m11 * m22:
        raise SingularSystem("normal equations are singular (constant or collinear series)")

    a = (m22 * r1 - m12 * r2) / det
    b = (m11 * r2 - m12 * r1) / det
    if b == 0.0:
        raise SingularSystem("saturation coefficient fitted to zero; model degenerates to an exponential")
    return GreyVerhulstModel(a=a, b=b, x0=float(series.values[0]))


def predict(model: GreyVerhulstModel, k):
    """Whitening-equation value for period k+1 (k = 0 gives the anchor).

    Accepts a scalar or array of offsets k >= 0.
    """
    k_arr = np.asarray(k, dtype=float)
    a, b, x0 = model.a, model.b, model.x0
    with np.errstate(over="ignore", under="ignore", invalid="ignore", divide="ignore"):
        denom = b * x0 + (a - b * x0) * np.exp(a * k_arr)
        out = a * x0 / denom
    if np.any(denom == 0.0) or not np.all(np.isfinite(out)):
        raise NumericOverflow("whitening-equation denominator vanished or overflowed")
    return float(out) if np.isscalar(k) or k_arr.ndim == 0 else out


def fitted_values(model: GreyVerhulstModel, n: int) -> np.ndarray:
    """Fitted curve at the n training offsets k = 0..n-1."""
    return predict(model, np.arange(n))


def saturation(model: GreyVerhulstModel, eps: float = 1e-4, max_scan: int = 100_000) -> SaturationResult:
    """Asymptote a/b plus the first period where the curve has settled.

    The settle time is the smallest k >= 1 whose relative consecutive
    change drops below ``eps``. Requires a < 0 (converging model).
    """
    if model.a >= 0:
        raise NoSaturation(f"development coefficient a={model.a:g} is not negative; curve diverges")
    value = model.a / model.b
    tiny = np.finfo(float).tiny
    prev = predict(model, 0)
    for k in range(1, max_scan + 1):
        cur = predict(model, k)
        if abs(cur - prev) / max(prev, tiny) < eps:
            return SaturationResult(time=k, value=value)
        prev = cur
    raise NoSaturation(f"relative change never dropped below eps={eps:g} within {max_scan} periods")


def _level_from_c(c: float) -> Grade:
    if c <= 0.35:
        return Grade.I
    if c <= 0.50:
        return Grade.II
    if c <= 0.65:
        return Grade.III
    return Grade.IV


def _level_from_p(p: float) -> Grade:
    if p >= 0.95:
        return Grade.I
    if p >= 0.80:
        return Grade.II
    if p >= 0.70:
        return Grade.III
    return Grade.IV


def grade_from(c: float, p: float) -> Grade:
    """Worst of the levels implied by the variance ratio and the
    small-error probability (deterministic grading table)."""
    return Grade(max(_level_from_c(c), _level_from_p(p)))


def validate(model: GreyVerhulstModel, series: TimeSeries) -> AccuracyReport:
    """Grade the model against a positive series of n >= 4.

    Residuals are observation minus fitted value at each training offset.
    Population (not sample) standard deviations throughout.
    """
    if series.n < 4:
        raise SeriesTooShort(f"accuracy tests need n >= 4, got n={series.n}")
    if np.any(series.values <= 0):
        bad = int(np.argmax(series.values <= 0)) + 1
        raise NonPositiveData(f"value at k={bad} is not strictly positive")

    x = series.values
    resid = x - fitted_values(model, series.n)
    q = float(np.mean(np.abs(resid) / x))
    s1 = float(np.std(x))
    s2 = float(np.std(resid))
    if s1 > 0:
        c = s2 / s1
    else:
        c = 0.0 if s2 == 0 else float("inf")
    p = float(np.mean(np.abs(resid - resid.mean()) < 0.6745 * s1))
    return AccuracyReport(q=q, c=c, p=p, grade=grade_from(c, p))
