"""CSV file formats for series, judgment matrices and indicator tables,
plus the flat dotted-key run config.

All files are UTF-8, comma-separated, with a mandatory header row. The
canonical save form prints floats at 9 significant digits and sorts
matrix/indicator labels, so save(load(f)) is byte-identical and stable.
Loading never mutates values except the logged reciprocity repair of a
matrix's lower triangle.
"""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .ahp import PairwiseMatrix
from .allocation import BENEFIT, COST, IndicatorTable
from .errors import (
    MissingCell,
    NonPositiveValue,
    NotSquare,
    ParseError,
    ReciprocityViolation,
    UnknownCriterion,
)
from .series import TimeSeries

log = logging.getLogger(__name__)

_RECIP_TOL = 1e-6


def format_number(x: float) -> str:
    """Canonical file form: 9 significant digits."""
    return format(float(x), ".9g")


def _read_rows(path) -> list[list[str]]:
    path = Path(path)
    try:
        with path.open(newline="", encoding="utf-8") as fh:
            return [row for row in csv.reader(fh)]
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _parse_float(raw: str, path, line: int) -> float:
    try:
        return float(raw)
    except ValueError:
        raise ParseError(f"{path}: line {line}: {raw!r} is not a number") from None


# -- series ----------------------------------------------------------------

def load_series(path) -> TimeSeries:
    """Read a `period,value` CSV into a TimeSeries (file order preserved)."""
    rows = _read_rows(path)
    if not rows:
        raise ParseError(f"{path}: empty file; expected a header row")
    header = rows[0]
    if len(header) != 2:
        raise ParseError(f"{path}: line 1: expected 2 header columns, got {len(header)}")

    labels: list[str] = []
    values: list[float] = []
    for line, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != 2:
            raise ParseError(f"{path}: line {line}: expected 2 columns, got {len(row)}")
        value = _parse_float(row[1], path, line)
        if value <= 0:
            raise NonPositiveValue(f"{path}: line {line}: value {value:g} is not strictly positive")
        labels.append(row[0])
        values.append(value)
    if not values:
        raise ParseError(f"{path}: no data rows")
    return TimeSeries(np.array(values), t0_label=labels[0], period_labels=tuple(labels))


def save_series(series: TimeSeries, path) -> None:
    lines = ["period,value"]
    labels = list(series.period_labels)
    if len(labels) < series.n:
        labels += [f"t{i + 1}" for i in range(len(labels), series.n)]
    for label, value in zip(labels, series.values):
        lines.append(f"{label},{format_number(value)}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


# -- pairwise matrix --------------------------------------------------------

def load_matrix(path) -> PairwiseMatrix:
    """Read a labeled square judgment matrix.

    Reciprocity is validated cell-wise via |a_ij * a_ji - 1| <= 1e-6; the
    lower triangle is then repaired to exact reciprocals of the upper (each
    repair logged). Larger disagreement raises ReciprocityViolation.
    """
    rows = _read_rows(path)
    if not rows:
        raise ParseError(f"{path}: empty file; expected a header row")
    labels = [cell.strip() for cell in rows[0][1:]]
    n = len(labels)
    data_rows = [row for row in rows[1:] if row]
    if len(data_rows) != n or any(len(row) != n + 1 for row in data_rows):
        shape = f"{len(data_rows)}x{max((len(r) - 1 for r in data_rows), default=0)}"
        raise NotSquare(f"{path}: expected an {n}x{n} matrix per the header, got {shape}")

    arr = np.empty((n, n))
    for r, row in enumerate(data_rows):
        if row[0].strip() != labels[r]:
            raise ParseError(
                f"{path}: line {r + 2}: row label {row[0]!r} does not match header label {labels[r]!r}"
            )
        for c in range(n):
            arr[r, c] = _parse_float(row[c + 1], path, r + 2)

    for i in range(n):
        if abs(arr[i, i] - 1.0) > _RECIP_TOL:
            raise ReciprocityViolation(f"{path}: diagonal entry ({i + 1},{i + 1}) = {arr[i, i]:g}, expected 1")
        arr[i, i] = 1.0
    for i in range(n):
        for j in range(i + 1, n):
            if abs(arr[i, j] * arr[j, i] - 1.0) > _RECIP_TOL:
                raise ReciprocityViolation(
                    f"{path}: entries ({i + 1},{j + 1})={arr[i, j]:g} and ({j + 1},{i + 1})={arr[j, i]:g} "
                    f"are not reciprocal within {_RECIP_TOL:g}"
                )
            exact = 1.0 / arr[i, j]
            if arr[j, i] != exact:
                log.warning("%s: repaired entry (%d,%d) from %g to exact 1/%g",
                            path, j + 1, i + 1, arr[j, i], arr[i, j])
                arr[j, i] = exact
    return PairwiseMatrix(arr, labels=tuple(labels))


def save_matrix(matrix: PairwiseMatrix, path) -> None:
    order = sorted(range(matrix.n), key=lambda i: matrix.labels[i])
    labels = [matrix.labels[i] for i in order]
    entries = matrix.entries[np.ix_(order, order)]
    lines = ["criterion," + ",".join(labels)]
    for label, row in zip(labels, entries):
        lines.append(label + "," + ",".join(format_number(v) for v in row))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


# -- indicator table ---------------------------------------------------------

def load_indicators(path, directions: dict[str, str] | None = None,
                    normalized: bool = False) -> IndicatorTable:
    """Read an `entity,<criterion>...` CSV.

    ``directions`` maps every criterion to "benefit" or "cost"; pass None
    to default all criteria to benefit (appropriate for tables whose
    values are already direction-adjusted).
    """
    rows = _read_rows(path)
    if not rows:
        raise ParseError(f"{path}: empty file; expected a header row")
    criteria = [cell.strip() for cell in rows[0][1:]]
    if not criteria:
        raise ParseError(f"{path}: header must name at least one criterion")

    if directions is None:
        direction_tuple = (BENEFIT,) * len(criteria)
    else:
        unknown = sorted(set(directions) - set(criteria))
        if unknown:
            raise UnknownCriterion(f"{path}: direction map names unknown criteria: {unknown}")
        missing = [c for c in criteria if c not in directions]
        if missing:
            raise UnknownCriterion(f"{path}: direction map is missing criteria: {missing}")
        for name, d in directions.items():
            if d not in (BENEFIT, COST):
                raise UnknownCriterion(f"{path}: direction for {name!r} must be benefit or cost, got {d!r}")
        direction_tuple = tuple(directions[c] for c in criteria)

    entities: list[str] = []
    values: list[list[float]] = []
    for line, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        entity = row[0].strip()
        cells = row[1:]
        if len(cells) < len(criteria):
            missing_name = criteria[len(cells)]
            raise MissingCell(f"{path}: line {line}: entity {entity!r} is missing {missing_name!r}")
        if len(cells) > len(criteria):
            raise ParseError(f"{path}: line {line}: {len(cells)} cells for {len(criteria)} criteria")
        parsed = []
        for c, raw in enumerate(cells):
            if raw.strip() == "":
                raise MissingCell(f"{path}: line {line}: entity {entity!r} is missing {criteria[c]!r}")
            parsed.append(_parse_float(raw, path, line))
        entities.append(entity)
        values.append(parsed)
    if not entities:
        raise ParseError(f"{path}: no data rows")
    return IndicatorTable(
        entities=tuple(entities), criteria=tuple(criteria),
        values=np.array(values), directions=direction_tuple, normalized=normalized,
    )


def save_indicators(table: IndicatorTable, path) -> None:
    crit_order = sorted(range(len(table.criteria)), key=lambda i: table.criteria[i])
    ent_order = sorted(range(len(table.entities)), key=lambda i: table.entities[i])
    criteria = [table.criteria[i] for i in crit_order]
    lines = ["entity," + ",".join(criteria)]
    for e in ent_order:
        row = table.values[e, crit_order]
        lines.append(table.entities[e] + "," + ",".join(format_number(v) for v in row))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


# -- run config ---------------------------------------------------------------

@dataclass
class ProjectConfig:
    """Flat dotted-key run configuration; paths resolve relative to the
    config file's directory."""

    series: Path | None = None
    matrix: Path | None = None
    indicators: Path | None = None
    indicators_normalized: bool = False
    directions: dict[str, str] = field(default_factory=dict)
    gamma: dict[str, float] = field(default_factory=dict)
    inflows: list[float] = field(default_factory=list)
    forecast_eps: float = 1e-4
    ahp_tol: float = 1e-12
    max_share: dict[str, float] = field(default_factory=dict)


def load_config(path) -> ProjectConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from exc

    cfg = ProjectConfig()
    base = path.parent
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ParseError(f"{path}: line {line_no}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        try:
            if key == "series":
                cfg.series = base / value
            elif key == "matrix":
                cfg.matrix = base / value
            elif key == "indicators":
                cfg.indicators = base / value
            elif key == "indicators.normalized":
                cfg.indicators_normalized = value.lower() in ("1", "true", "yes")
            elif key.startswith("direction."):
                cfg.directions[key.removeprefix("direction.")] = value
            elif key.startswith("gamma."):
                cfg.gamma[key.removeprefix("gamma.")] = float(value)
            elif key == "forecast.eps":
                cfg.forecast_eps = float(value)
            elif key == "ahp.tol":
                cfg.ahp_tol = float(value)
            elif key == "simulate.inflows":
                cfg.inflows = [float(v) for v in value.split(",") if v.strip() != ""]
            elif key.startswith("max_share."):
                cfg.max_share[key.removeprefix("max_share.")] = float(value)
            else:
                raise ParseError(f"{path}: line {line_no}: unknown config key {key!r}")
        except ValueError:
            raise ParseError(f"{path}: line {line_no}: bad value {value!r} for {key!r}") from None
    return cfg
