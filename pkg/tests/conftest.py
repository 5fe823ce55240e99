from pathlib import Path

import numpy as np
import pytest

from greyalloc import (
    GreyVerhulstModel,
    IndicatorTable,
    PairwiseMatrix,
    TimeSeries,
    WeightVector,
    build_matrix,
    predict,
)

REPO_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = REPO_ROOT / "data"

CRITERIA = ("land_area_per_capita", "gdp", "unemployment_rate", "public_welfare_index")

# published reference values: criterion weights for the baseline judgment
# matrix and for its (3,4) 5->3 variant, in CRITERIA order
TABLE2_WEIGHTS = (0.1428, 0.2641, 0.5068, 0.0863)
TABLE6_WEIGHTS = (0.1498, 0.2741, 0.4717, 0.1045)

PAPER_JUDGMENTS = [
    (1, 2, 1 / 2), (1, 3, 1 / 4), (1, 4, 2),
    (2, 3, 1 / 2), (2, 4, 3),
    (3, 4, 5),
]

# published relative indicator rows (already normalized)
TABLE3_ROWS = {
    "Ireland": {"gdp": 0.491458621, "land_area_per_capita": 0.061869,
                "unemployment_rate": 0.41602317, "public_welfare_index": 0.928571429},
    "Estonia": {"gdp": 0.548413195, "land_area_per_capita": 0.006428,
                "unemployment_rate": 0.26447876, "public_welfare_index": 0.285714286},
    "Austria": {"gdp": 0.46310015, "land_area_per_capita": 0.117199,
                "unemployment_rate": 0.19208494, "public_welfare_index": 0.821428571},
}


@pytest.fixture
def paper_matrix() -> PairwiseMatrix:
    return build_matrix(PAPER_JUDGMENTS, labels=CRITERIA)


@pytest.fixture
def table2_weight_vector() -> WeightVector:
    w = np.array(TABLE2_WEIGHTS)
    return WeightVector(weights=w, labels=CRITERIA, lambda_max=4.0,
                        ci=0.0, ri=0.9, cr=0.0, consistent=True)


@pytest.fixture
def table3_table() -> IndicatorTable:
    entities = tuple(TABLE3_ROWS)
    values = np.array([[TABLE3_ROWS[e][c] for c in CRITERIA] for e in entities])
    return IndicatorTable(entities=entities, criteria=CRITERIA, values=values, normalized=True)


def whitening_series(a: float = -0.5, b: float = -0.00025, x0: float = 100.0,
                     n: int = 10) -> TimeSeries:
    """Exact samples of a known whitening curve (generate-then-refit oracle)."""
    model = GreyVerhulstModel(a=a, b=b, x0=x0)
    return TimeSeries(predict(model, np.arange(n)))


@pytest.fixture
def raw_demo_table() -> IndicatorTable:
    return IndicatorTable(
        entities=("Aland", "Borduria", "Ceylonia", "Drachmia", "Elbonia"),
        criteria=("gdp", "unemployment_rate"),
        values=np.array([
            [3000.0, 4.6],
            [2100.0, 10.4],
            [2600.0, 5.3],
            [1000.0, 22.1],
            [1600.0, 11.9],
        ]),
        directions=("benefit", "cost"),
    )
