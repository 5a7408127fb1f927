import datetime as dt

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from windtf import (
    CSV_HEADER,
    AveragedSeries,
    Empty,
    MissingHeader,
    MonthAbsent,
    NegativeSpeed,
    NonUniformSpacing,
    TimeSeries,
    TooShort,
    UnparsableRow,
    agitation_index,
    decade_monthly_average,
    parse_csv,
    serialize_csv,
    series_stats,
)


def make_series(values, start=dt.date(2001, 1, 1)):
    stamps = [start + dt.timedelta(days=i) for i in range(len(values))]
    return TimeSeries(timestamps=stamps, values=np.asarray(values, dtype=float))


# --- TimeSeries validation

def test_timeseries_rejects_length_mismatch():
    with pytest.raises(ValueError):
        TimeSeries(timestamps=[dt.date(2001, 1, 1)], values=np.array([1.0, 2.0]))


def test_timeseries_rejects_empty():
    with pytest.raises(Empty):
        TimeSeries(timestamps=[], values=np.array([]))


def test_timeseries_rejects_negative_speed():
    with pytest.raises(NegativeSpeed):
        make_series([1.0, -0.5, 2.0])


def test_timeseries_rejects_gap():
    stamps = [dt.date(2001, 1, 1), dt.date(2001, 1, 2), dt.date(2001, 1, 4)]
    with pytest.raises(NonUniformSpacing):
        TimeSeries(timestamps=stamps, values=np.array([1.0, 2.0, 3.0]))


def test_timeseries_rejects_nonfinite():
    with pytest.raises(ValueError):
        make_series([1.0, np.nan])


# --- CSV round trip

def test_parse_serialize_round_trip_exact():
    ts = make_series([5.0, 0.0, 3.25, 7.123456789012345])
    text = serialize_csv(ts)
    back = parse_csv(text)
    assert back.timestamps == ts.timestamps
    assert np.array_equal(back.values, ts.values)
    # and the text itself is a fixed point
    assert serialize_csv(back) == text


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(min_value=0.0, max_value=1e6,
                          allow_nan=False, allow_infinity=False),
                min_size=1, max_size=50))
def test_round_trip_property(values):
    ts = make_series(values)
    back = parse_csv(serialize_csv(ts))
    assert np.array_equal(back.values, ts.values)
    assert back.timestamps == ts.timestamps


def test_parse_requires_header():
    with pytest.raises(MissingHeader):
        parse_csv("2001-01-01,5.0\n")


def test_parse_sorts_rows_by_date():
    text = f"{CSV_HEADER}\n2001-01-02,2.0\n2001-01-01,1.0\n"
    ts = parse_csv(text)
    assert ts.timestamps[0] == dt.date(2001, 1, 1)
    assert list(ts.values) == [1.0, 2.0]


def test_parse_skips_blank_lines():
    text = f"{CSV_HEADER}\n2001-01-01,1.0\n\n2001-01-02,2.0\n"
    assert len(parse_csv(text)) == 2


@pytest.mark.parametrize("row,lineno", [
    ("2001-01-01,1.0,extra", 2),
    ("not-a-date,1.0", 2),
    ("2001-01-01,abc", 2),
    ("2001-01-01,inf", 2),
])
def test_parse_unparsable_row_reports_line(row, lineno):
    with pytest.raises(UnparsableRow, match=f"line {lineno}"):
        parse_csv(f"{CSV_HEADER}\n{row}\n")


def test_parse_negative_speed():
    with pytest.raises(NegativeSpeed):
        parse_csv(f"{CSV_HEADER}\n2001-01-01,-1.0\n")


def test_parse_header_only_is_empty():
    with pytest.raises(Empty):
        parse_csv(f"{CSV_HEADER}\n")


def test_parse_duplicate_date():
    with pytest.raises(NonUniformSpacing):
        parse_csv(f"{CSV_HEADER}\n2001-01-01,1.0\n2001-01-01,2.0\n")


def test_parse_gap_after_sorting():
    with pytest.raises(NonUniformSpacing):
        parse_csv(f"{CSV_HEADER}\n2001-01-01,1.0\n2001-01-05,2.0\n")


# --- decade averaging

def test_decade_monthly_average_two_years():
    # two full Januaries plus surrounding days; daily means by day-of-month
    start = dt.date(2001, 1, 1)
    n = 366 + 31  # through Jan 2002 (2001 is not a leap year)
    values = np.arange(n, dtype=float)
    ts = make_series(values, start=start)
    avg = decade_monthly_average(ts, 1)
    assert avg.month == 1
    assert avg.day_index == list(range(1, 32))
    # day-of-month d: samples d-1 (2001) and 365+d-1 (2002)
    expect = [(d - 1 + 365 + d - 1) / 2.0 for d in range(1, 32)]
    assert np.allclose(avg.values, expect, rtol=0, atol=0)
    assert np.all(avg.years_used == 2)
    assert avg.source_span == (2001, 2002)


def test_decade_average_keeps_leap_day():
    start = dt.date(2003, 1, 1)
    n = 365 + 366  # 2003 plus leap 2004
    ts = make_series(np.full(n, 4.0), start=start)
    avg = decade_monthly_average(ts, 2)
    assert avg.day_index[-1] == 29
    assert avg.years_used[-1] == 1
    assert np.all(avg.years_used[:-1] == 2)


def test_decade_average_month_absent():
    ts = make_series(np.ones(31), start=dt.date(2001, 1, 1))
    with pytest.raises(MonthAbsent):
        decade_monthly_average(ts, 5)


def test_decade_average_month_validation():
    ts = make_series(np.ones(31))
    with pytest.raises(ValueError):
        decade_monthly_average(ts, 13)


# --- agitation index

def test_agitation_constant_is_exact_zero():
    assert agitation_index([5, 5, 5, 5]) == 0.0


def test_agitation_ramp_direct_formula():
    x = np.arange(64, dtype=float)
    expect = 1.0 / (np.sqrt(np.mean((x - x.mean()) ** 2)) + 1e-12)
    assert agitation_index(x) == pytest.approx(expect, rel=1e-12)


def test_agitation_alternating_is_jittery():
    x = np.array([1.0, -0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0])
    assert agitation_index(x) > 1.5


def test_agitation_offset_invariance():
    x = np.array([1.0, 3.0, 2.0, 5.0, 4.0])
    assert agitation_index(x + 100.0) == pytest.approx(agitation_index(x), rel=1e-9)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.floats(min_value=0.0, max_value=100.0,
                          allow_nan=False, allow_infinity=False),
                min_size=3, max_size=30),
       st.floats(min_value=0.1, max_value=50.0))
def test_agitation_scale_invariance(values, a):
    x = np.asarray(values)
    if np.ptp(x) == 0:
        return  # constants are exactly 0 either way
    assert agitation_index(a * x) == pytest.approx(agitation_index(x), rel=1e-9)


def test_agitation_too_short():
    with pytest.raises(TooShort):
        agitation_index([1.0])


# --- summary stats

def test_series_stats_known_values():
    s = series_stats([1.0, 2.0, 3.0, 4.0])
    assert s.mean == 2.5
    assert s.min == 1.0 and s.max == 4.0 and s.n == 4
    assert s.std_dev == pytest.approx(np.sqrt(1.25), rel=1e-15)


def test_series_stats_empty():
    with pytest.raises(Empty):
        series_stats([])


def test_averaged_series_is_plain_data():
    a = AveragedSeries(month=1, day_index=[1], values=np.array([2.0]),
                       years_used=np.array([1]), source_span=(2001, 2001))
    assert a.day_index == [1]
