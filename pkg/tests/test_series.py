import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from greyalloc import TimeSeries, cumulate, difference, neighbor_mean
from greyalloc.errors import SeriesTooShort

# integer counts keep difference/cumulate arithmetic exact in float64
count_series = st.lists(st.integers(min_value=1, max_value=2**40), min_size=2, max_size=30)
positive_floats = st.floats(min_value=1e-3, max_value=1e9, allow_nan=False)


def test_difference_hand_oracle():
    assert difference(TimeSeries([1, 3, 6, 10])).tolist() == [2, 3, 4]


def test_difference_constant_series_is_zero():
    assert difference(TimeSeries([7.5, 7.5, 7.5])).tolist() == [0, 0]


def test_difference_too_short():
    with pytest.raises(SeriesTooShort):
        difference(TimeSeries([5]))


def test_cumulate_empty_diffs():
    assert cumulate([], 7).values.tolist() == [7]


def test_cumulate_hand_oracle():
    assert cumulate([2, 3, 4], 1).values.tolist() == [1, 3, 6, 10]


def test_cumulate_zero_diffs():
    assert cumulate([0, 0], 5).values.tolist() == [5, 5, 5]


def test_neighbor_mean_constant():
    assert neighbor_mean(TimeSeries([4.2, 4.2])).tolist() == [4.2]


def test_neighbor_mean_hand_oracles():
    assert neighbor_mean(TimeSeries([1, 3, 6])).tolist() == [2, 4.5]
    assert neighbor_mean(TimeSeries([0.5, 1.5, 2.5, 3.5])).tolist() == [1, 2, 3]


def test_neighbor_mean_too_short():
    with pytest.raises(SeriesTooShort):
        neighbor_mean(TimeSeries([1]))


@given(count_series)
def test_round_trip_exact_on_counts(values):
    s = TimeSeries(values)
    back = cumulate(difference(s), float(s.values[0]))
    assert np.array_equal(back.values, s.values)


@given(st.lists(positive_floats, min_size=2, max_size=30))
def test_round_trip_close_on_floats(values):
    # rounding error is absolute in the scale of the largest value
    s = TimeSeries(values)
    back = cumulate(difference(s), float(s.values[0]))
    assert np.allclose(back.values, s.values, rtol=0, atol=1e-12 * s.values.max())


@given(st.lists(positive_floats, min_size=2, max_size=30))
def test_length_contracts(values):
    s = TimeSeries(values)
    assert len(difference(s)) == s.n - 1
    assert len(neighbor_mean(s)) == s.n - 1


@given(st.lists(positive_floats, min_size=2, max_size=20),
       st.floats(min_value=1e-6, max_value=1e6))
def test_difference_linearity(values, alpha):
    s = TimeSeries(values)
    scaled = TimeSeries(np.asarray(values) * alpha)
    assert np.allclose(difference(scaled), alpha * difference(s), rtol=1e-12, atol=0)


@given(st.lists(positive_floats, min_size=2, max_size=20))
def test_neighbor_mean_between_sources(values):
    s = TimeSeries(values)
    z = neighbor_mean(s)
    lo = np.minimum(s.values[1:], s.values[:-1])
    hi = np.maximum(s.values[1:], s.values[:-1])
    assert np.all(z >= lo) and np.all(z <= hi)
