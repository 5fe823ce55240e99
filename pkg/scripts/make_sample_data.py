"""Regenerate the shipped sample datasets under data/.

Everything here is synthetic and deterministic (fixed RNG seed); the only
verbatim published values are the judgment matrix and the three published
indicator rows (Ireland, Estonia, Austria). Run from the repo root:

    python scripts/make_sample_data.py
"""

from pathlib import Path

import numpy as np

from greyalloc import GreyVerhulstModel, IndicatorTable, build_matrix, predict
from greyalloc.io_config import save_indicators, save_matrix, save_series
from greyalloc.series import TimeSeries

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"

CRITERIA = ("gdp", "land_area_per_capita", "public_welfare_index", "unemployment_rate")

# upper triangle of the published judgment matrix, criterion order:
# land_area_per_capita, gdp, unemployment_rate, public_welfare_index
MATRIX_JUDGMENTS = [
    (1, 2, 1 / 2), (1, 3, 1 / 4), (1, 4, 2),
    (2, 3, 1 / 2), (2, 4, 3),
    (3, 4, 5),
]
MATRIX_LABELS = ("land_area_per_capita", "gdp", "unemployment_rate", "public_welfare_index")

# published relative (already normalized) indicator rows
PUBLISHED_ROWS = {
    "Ireland": {"gdp": 0.491458621, "land_area_per_capita": 0.061869,
                "unemployment_rate": 0.41602317, "public_welfare_index": 0.928571429},
    "Estonia": {"gdp": 0.548413195, "land_area_per_capita": 0.006428,
                "unemployment_rate": 0.26447876, "public_welfare_index": 0.285714286},
    "Austria": {"gdp": 0.46310015, "land_area_per_capita": 0.117199,
                "unemployment_rate": 0.19208494, "public_welfare_index": 0.821428571},
}

SYNTHETIC_ENTITIES = (
    "Belgium", "Bulgaria", "Croatia", "Cyprus", "Czech Republic", "Denmark",
    "Finland", "France", "Germany", "Greece", "Hungary", "Italy", "Latvia",
    "Lithuania", "Luxembourg", "Malta", "Netherlands", "Poland", "Portugal",
    "Romania", "Slovakia", "Slovenia", "Spain", "Sweden", "United Kingdom",
)

RAW_DEMO = {
    # gdp (bn), land area per capita (m2), welfare index (pts), unemployment (%)
    "Germany": (3026.0, 4300.0, 60.0, 4.6),
    "France": (2181.0, 8300.0, 45.0, 10.4),
    "United Kingdom": (2580.0, 3700.0, 57.0, 5.3),
    "Spain": (1081.0, 10800.0, 33.0, 22.1),
    "Italy": (1655.0, 4900.0, 30.0, 11.9),
    "Poland": (430.0, 8200.0, 27.0, 7.5),
}

SIMULATE_CFG = """\
# demo config for `greyalloc simulate` (synthetic data)
matrix=pairwise_matrix.csv
indicators=indicators_raw_demo.csv
direction.gdp=benefit
direction.land_area_per_capita=benefit
direction.public_welfare_index=benefit
direction.unemployment_rate=cost
gamma.gdp=0
gamma.land_area_per_capita=-0.005
gamma.public_welfare_index=0.00002
gamma.unemployment_rate=0.00005
simulate.inflows=50000,80000,120000
"""

DATA_README = """\
# Sample datasets

All files are **synthetic demo data** except where noted; none of them is
an official statistic.

- `sample_series.csv` — synthetic 10-point monthly series sampled from a
  grey Verhulst curve (a=-0.55, saturation 2,000,000, anchor 120,000) with
  a small alternating wobble. The real monthly arrival counts this format
  mimics are not published anywhere in full, so a labeled synthetic stand-in
  ships instead.
- `pairwise_matrix.csv` — the published 4x4 judgment matrix over
  land area per capita, GDP, unemployment rate and public welfare index
  (stored with labels sorted; values are exact).
- `indicators.csv` — 28-row relative indicator table, already normalized
  to [0,1] (use `--normalized`). The Ireland, Estonia and Austria rows are
  the published values **verbatim**; the other 25 rows are synthetic
  placeholders drawn from a seeded RNG, NOT real country data.
- `indicators_raw_demo.csv` — small raw-unit table (6 entities) for the
  normalize/cost-direction pipeline, sensitivity demos and the web UI
  sliders. Entirely synthetic.
- `simulate.cfg` — demo config for `greyalloc simulate` (feedback
  dynamics on the raw demo table).

Regenerate with `python scripts/make_sample_data.py`.
"""


def make_series() -> TimeSeries:
    model = GreyVerhulstModel(a=-0.55, b=-0.55 / 2_000_000, x0=120_000.0)
    k = np.arange(10)
    wobble = np.where(k % 2 == 0, 1.004, 0.996)
    values = np.round(predict(model, k) * wobble)
    labels = tuple(f"2015-{m:02d}" for m in range(1, 11))
    return TimeSeries(values, t0_label=labels[0], period_labels=labels)


def make_indicators() -> IndicatorTable:
    rng = np.random.default_rng(42)
    entities = list(PUBLISHED_ROWS) + list(SYNTHETIC_ENTITIES)
    rows = []
    for entity in entities:
        if entity in PUBLISHED_ROWS:
            rows.append([PUBLISHED_ROWS[entity][c] for c in CRITERIA])
        else:
            rows.append([round(float(v), 9) for v in rng.uniform(0.02, 0.98, size=len(CRITERIA))])
    return IndicatorTable(entities=tuple(entities), criteria=CRITERIA,
                          values=np.array(rows), normalized=True)


def make_raw_demo() -> IndicatorTable:
    entities = tuple(RAW_DEMO)
    criteria = ("gdp", "land_area_per_capita", "public_welfare_index", "unemployment_rate")
    values = np.array([RAW_DEMO[e] for e in entities])
    directions = ("benefit", "benefit", "benefit", "cost")
    return IndicatorTable(entities=entities, criteria=criteria, values=values, directions=directions)


def main() -> None:
    DATA.mkdir(exist_ok=True)
    save_series(make_series(), DATA / "sample_series.csv")
    save_matrix(build_matrix(MATRIX_JUDGMENTS, labels=MATRIX_LABELS), DATA / "pairwise_matrix.csv")
    save_indicators(make_indicators(), DATA / "indicators.csv")
    save_indicators(make_raw_demo(), DATA / "indicators_raw_demo.csv")
    (DATA / "simulate.cfg").write_text(SIMULATE_CFG, encoding="utf-8")
    (DATA / "README.md").write_text(DATA_README, encoding="utf-8")
    print(f"wrote sample data to {DATA}")


if __name__ == "__main__":
    main()
