"""Pairwise-comparison matrices, principal-eigenvector weights, and the
consistency-ratio check.

Judgments live on the Saaty scale (1..9 and reciprocals). Weights come
from power iteration on the positive judgment matrix; consistency is the
classic CI/RI ratio with the standard random-index table. Cell indices in
the public API are 1-based, matching the usual matrix notation; storage
is 0-based.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import MissingJudgment, NoConvergence, OutOfScale

log = logging.getLogger(__name__)

SCALE_MIN = 1.0 / 9.0
SCALE_MAX = 9.0

# Saaty random indices by matrix order
RI_TABLE = {1: 0.0, 2: 0.0, 3: 0.58, 4: 0.90, 5: 1.12, 6: 1.24, 7: 1.32, 8: 1.41, 9: 1.45, 10: 1.49}

_RECIPROCITY_RTOL = 1e-9


@dataclass(frozen=True)
class PairwiseMatrix:
    """Square positive reciprocal judgment matrix on the Saaty scale.

    Entries outside [1/9, 9] are clamped to the bounds (and the clamped
    cells reported via ``clamped_cells``); reciprocity must hold within
    1e-9 relative.
    """

    entries: np.ndarray
    labels: tuple[str, ...] = ()
    clamped_cells: tuple[tuple[int, int], ...] = field(init=False, default=())

    def __post_init__(self):
        arr = np.array(self.entries, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"judgment matrix must be square, got shape {arr.shape}")
        n = arr.shape[0]
        if not 2 <= n <= 10:
            raise ValueError(f"judgment matrix order must be in 2..10, got {n}")
        if np.any(arr <= 0):
            raise ValueError("judgment matrix entries must be strictly positive")

        clamped = []
        for i in range(n):
            for j in range(n):
                if i != j and not SCALE_MIN <= arr[i, j] <= SCALE_MAX:
                    arr[i, j] = min(max(arr[i, j], SCALE_MIN), SCALE_MAX)
                    if i < j:
                        clamped.append((i + 1, j + 1))
        if clamped:
            log.warning("clamped %d judgment(s) to the Saaty bounds: %s", len(clamped), clamped)

        if np.any(np.abs(np.diag(arr) - 1.0) > 0):
            raise ValueError("judgment matrix diagonal must be exactly 1")
        recip_err = np.abs(arr * arr.T - 1.0)
        if np.any(recip_err > _RECIPROCITY_RTOL):
            i, j = np.unravel_index(int(np.argmax(recip_err)), arr.shape)
            raise ValueError(
                f"reciprocity violated at ({i + 1},{j + 1}): "
                f"{arr[i, j]:g} vs 1/{arr[j, i]:g}"
            )

        arr.flags.writeable = False
        object.__setattr__(self, "entries", arr)
        labels = tuple(self.labels) if self.labels else tuple(f"C{i + 1}" for i in range(n))
        if len(labels) != n:
            raise ValueError(f"expected {n} labels, got {len(labels)}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "clamped_cells", tuple(clamped))

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])


@dataclass(frozen=True)
class WeightVector:
    """Normalized criterion weights plus the consistency diagnostics."""

    weights: np.ndarray
    labels: tuple[str, ...]
    lambda_max: float
    ci: float
    ri: float
    cr: float
    consistent: bool


class ConsistencyResult(NamedTuple):
    ci: float
    ri: float
    cr: float
    consistent: bool


def build_matrix(upper_judgments, labels=None, n: int | None = None) -> PairwiseMatrix:
    """Complete a matrix from its upper triangle.

    ``upper_judgments`` is a list of (i, j, value) with 1-based i < j and
    value on the Saaty scale; the diagonal is set to 1 and the lower
    triangle to exact reciprocals. All n(n-1)/2 pairs must be supplied.
    """
    if labels is not None and n is None:
        n = len(labels)
    if n is None:
        n = max((j for _, j, _ in upper_judgments), default=0)
    if n < 2:
        raise MissingJudgment("need at least 2 criteria worth of judgments")

    cells: dict[tuple[int, int], float] = {}
    for i, j, value in upper_judgments:
        if not (1 <= i < j <= n):
            raise OutOfScale(f"judgment indices ({i},{j}) are not an upper-triangle cell of a {n}x{n} matrix")
        if not SCALE_MIN <= value <= SCALE_MAX:
            raise OutOfScale(f"judgment ({i},{j})={value:g} is outside the Saaty scale [1/9, 9]")
        cells[(i, j)] = float(value)

    missing = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if (i, j) not in cells]
    if missing:
        raise MissingJudgment(f"missing upper-triangle judgment(s): {missing}")

    arr = np.eye(n)
    for (i, j), value in cells.items():
        arr[i - 1, j - 1] = value
        arr[j - 1, i - 1] = 1.0 / value
    return PairwiseMatrix(arr, labels=tuple(labels) if labels else ())


def principal_weights(matrix: PairwiseMatrix, tol: float = 1e-12, max_iter: int = 10000) -> WeightVector:
    """Dominant eigenvector of the judgment matrix, normalized to sum 1.

    Power iteration converges unconditionally on positive matrices; the
    principal eigenvalue is estimated as the mean component ratio of A@w
    to w at the fixed point.
    """
    a = matrix.entries
    n = matrix.n
    w = np.full(n, 1.0 / n)
    for _ in range(max_iter):
        nxt = a @ w
        nxt /= nxt.sum()
        if np.max(np.abs(nxt - w) / w) < tol:
            w = nxt
            break
        w = nxt
    else:
        raise NoConvergence(f"power iteration did not converge within {max_iter} iterations")

    lambda_max = float(np.mean((a @ w) / w))
    ci, ri, cr, consistent = _consistency_from(lambda_max, n)
    return WeightVector(
        weights=w, labels=matrix.labels, lambda_max=lambda_max,
        ci=ci, ri=ri, cr=cr, consistent=consistent,
    )


def _consistency_from(lambda_max: float, n: int) -> ConsistencyResult:
    ci = (lambda_max - n) / (n - 1) if n > 1 else 0.0
    ri = RI_TABLE[n]
    cr = ci / ri if (n > 2 and ri > 0) else 0.0
    return ConsistencyResult(ci=ci, ri=ri, cr=cr, consistent=cr < 0.1)


def consistency(matrix: PairwiseMatrix, tol: float = 1e-12, max_iter: int = 10000) -> ConsistencyResult:
    """CI, RI, CR and the cr < 0.1 verdict for a judgment matrix."""
    wv = principal_weights(matrix, tol=tol, max_iter=max_iter)
    return ConsistencyResult(ci=wv.ci, ri=wv.ri, cr=wv.cr, consistent=wv.consistent)


def scale_entry(matrix: PairwiseMatrix, i: int, j: int, factor: float) -> PairwiseMatrix:
    """Scale entry (i, j) (1-based, i != j) by ``factor`` and mirror the
    reciprocal, preserving reciprocity; results are clamped to the scale."""
    if not (1 <= i <= matrix.n and 1 <= j <= matrix.n) or i == j:
        raise ValueError(f"({i},{j}) is not an off-diagonal cell of a {matrix.n}x{matrix.n} matrix")
    if factor <= 0:
        raise ValueError("scale factor must be positive")
    arr = matrix.entries.copy()
    value = arr[i - 1, j - 1] * factor
    arr[i - 1, j - 1] = value
    arr[j - 1, i - 1] = 1.0 / value
    # the constructor clamps out-of-scale results and records the cells
    return PairwiseMatrix(arr, labels=matrix.labels)
