"""Series primitives shared by the forecast models.

A raw series of observations plays the accumulated role in the grey
Verhulst convention: fitting consumes the raw values directly and works
with their first differences and neighbor means. Indexing in messages and
docs is 1-based (k = 1..n); storage is 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import SeriesTooShort


@dataclass(frozen=True)
class TimeSeries:
    """Ordered observations with a label for the first period.

    Values are 64-bit floats (counts are large and fitting is floating
    anyway). Strict positivity is enforced where grey modeling requires
    it, not at construction.
    """

    values: np.ndarray
    t0_label: str = "t1"
    period_labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("series must be a non-empty 1-D sequence")
        if not np.all(np.isfinite(arr)):
            raise ValueError("series values must be finite")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)
        if not self.period_labels:
            object.__setattr__(self, "period_labels", (self.t0_label,))

    @property
    def n(self) -> int:
        return int(self.values.size)

    def __len__(self) -> int:
        return self.n


def difference(series: TimeSeries) -> np.ndarray:
    """First differences: out[k] = x(k) - x(k-1) for k = 2..n (length n-1)."""
    if series.n < 2:
        raise SeriesTooShort(f"need n >= 2 to difference, got n={series.n}")
    v = series.values
    return v[1:] - v[:-1]


def cumulate(diffs, first: float, t0_label: str = "t1") -> TimeSeries:
    """Inverse of :func:`difference`: running sum anchored at ``first``.

    ``cumulate(difference(s), s.values[0])`` reproduces ``s`` exactly on
    inputs whose differences are exact in float64 (e.g. integer counts).
    """
    d = np.asarray(diffs, dtype=float)
    return TimeSeries(np.cumsum(np.concatenate(([first], d))), t0_label=t0_label)


def neighbor_mean(series: TimeSeries) -> np.ndarray:
    """Adjacent means: out[k] = (x(k) + x(k-1))/2 for k = 2..n (length n-1)."""
    if series.n < 2:
        raise SeriesTooShort(f"need n >= 2 for neighbor means, got n={series.n}")
    v = series.values
    return (v[1:] + v[:-1]) / 2.0
