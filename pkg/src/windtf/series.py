"""Wind-speed series types, CSV ingestion, and decade-wise monthly aggregation.

The raw signal is a uniformly sampled daily record. Downstream transforms
work on one short per-month series at a time, obtained by averaging each
day-of-month across all years of the record.
"""
from __future__ import annotations

import datetime as dt
from dataclasses import dataclass

import numpy as np

from .errors import (
    Empty,
    MissingHeader,
    MonthAbsent,
    NegativeSpeed,
    NonUniformSpacing,
    TooShort,
    UnparsableRow,
)

CSV_HEADER = "date,speed_mps"


@dataclass
class TimeSeries:
    """Uniformly sampled wind speeds (m/s) with calendar-day timestamps."""

    timestamps: list[dt.date]
    values: np.ndarray
    sample_interval: dt.timedelta = dt.timedelta(days=1)
    label: str = ""

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if len(self.timestamps) != len(self.values):
            raise ValueError("timestamps and values must have equal length")
        if len(self.values) < 1:
            raise Empty("a series needs at least one sample")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("values must be finite")
        if np.any(self.values < 0):
            raise NegativeSpeed("wind speed cannot be negative")
        for a, b in zip(self.timestamps, self.timestamps[1:]):
            if b - a != self.sample_interval:
                raise NonUniformSpacing(f"expected {self.sample_interval} between {a} and {b}")

    def __len__(self):
        return len(self.values)


@dataclass
class AveragedSeries:
    """Per-day-of-month mean speeds for one calendar month across years.

    ``years_used[i]`` counts how many years contributed to ``values[i]``;
    a February 29 entry with a reduced count marks the leap-day average.
    """

    month: int
    day_index: list[int]
    values: np.ndarray
    years_used: np.ndarray
    source_span: tuple[int, int]


@dataclass
class SeriesStats:
    mean: float
    std_dev: float
    min: float
    max: float
    n: int


def parse_csv(text: str) -> TimeSeries:
    """Parse a `date,speed_mps` CSV into a validated TimeSeries.

    Records are sorted by date before the uniform-spacing check, so row
    order in the file does not matter.

    Raises
    ------
    MissingHeader, UnparsableRow, NegativeSpeed, NonUniformSpacing, Empty
    """
    lines = text.splitlines()
    if not lines or lines[0].strip() != CSV_HEADER:
        raise MissingHeader(f"first line must be '{CSV_HEADER}'")
    records = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise UnparsableRow(f"line {lineno}: expected 2 fields, got {len(parts)}")
        try:
            day = dt.date.fromisoformat(parts[0].strip())
            speed = float(parts[1])
        except ValueError as exc:
            raise UnparsableRow(f"line {lineno}: {exc}") from None
        if not np.isfinite(speed):
            raise UnparsableRow(f"line {lineno}: non-finite speed")
        if speed < 0:
            raise NegativeSpeed(f"line {lineno}: speed {speed} < 0")
        records.append((day, speed))
    if not records:
        raise Empty("no data rows")
    records.sort(key=lambda r: r[0])
    if len({r[0] for r in records}) != len(records):
        raise NonUniformSpacing("duplicate date")
    return TimeSeries(
        timestamps=[r[0] for r in records],
        values=np.array([r[1] for r in records]),
    )


def serialize_csv(ts: TimeSeries) -> str:
    """Inverse of parse_csv; values use the shortest round-tripping decimal form."""
    lines = [CSV_HEADER]
    for day, value in zip(ts.timestamps, ts.values):
        lines.append(f"{day.isoformat()},{float(value)!r}")
    return "\n".join(lines) + "\n"


def decade_monthly_average(ts: TimeSeries, month: int) -> AveragedSeries:
    """Average each day-of-month across all years of the record.

    Parameters
    ----------
    ts : TimeSeries
        Daily record covering at least one occurrence of ``month``.
    month : int
        Calendar month 1..12.

    Returns
    -------
    AveragedSeries
        One value per day-of-month that has at least one sample. February
        keeps day 29 whenever a leap year contributes, with years_used
        reflecting how rarely it occurs.
    """
    if not 1 <= month <= 12:
        raise ValueError(f"month must be 1..12, got {month}")
    per_day: dict[int, list[float]] = {}
    for day, value in zip(ts.timestamps, ts.values):
        if day.month == month:
            per_day.setdefault(day.day, []).append(value)
    if not per_day:
        raise MonthAbsent(f"no samples for month {month}")
    days = sorted(per_day)
    return AveragedSeries(
        month=month,
        day_index=days,
        values=np.array([np.mean(per_day[d]) for d in days]),
        years_used=np.array([len(per_day[d]) for d in days]),
        source_span=(ts.timestamps[0].year, ts.timestamps[-1].year),
    )


def agitation_index(values) -> float:
    """RMS of first differences over the centered RMS; 0 for constants.

    Dimensionless fluctuation measure: jittery signals score above 1,
    slowly varying ones near 0.
    """
    x = np.asarray(values, dtype=float)
    if len(x) < 2:
        raise TooShort("agitation index needs at least 2 samples")
    rms_diff = np.sqrt(np.mean(np.diff(x) ** 2))
    rms_centered = np.sqrt(np.mean((x - x.mean()) ** 2))
    return float(rms_diff / (rms_centered + 1e-12))


def series_stats(values) -> SeriesStats:
    """Population statistics (divide by n) of a nonempty sequence."""
    x = np.asarray(values, dtype=float)
    if len(x) == 0:
        raise Empty("series_stats needs at least one sample")
    return SeriesStats(
        mean=float(np.mean(x)),
        std_dev=float(np.std(x)),
        min=float(np.min(x)),
        max=float(np.max(x)),
        n=len(x),
    )
