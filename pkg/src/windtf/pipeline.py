"""Seasonal routing of decade-averaged wind series.

Winter months go straight to the wavelet scalogram and discontinuity
detector; summer months are median-filtered and S-transformed. Months in
neither set fall back to an agitation threshold. Also hosts the seeded
synthetic generator the tests and CLI lean on, since the original station
records are not redistributable.
"""
from __future__ import annotations

import calendar
import datetime as dt
import hashlib
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from .cwt import Scalogram, cwt, detect_discontinuities
from .filtering import MedianFilterConfig, median_filter
from .series import (
    AveragedSeries,
    TimeSeries,
    agitation_index,
    decade_monthly_average,
    serialize_csv,
)
from .stockwell import STConfig, STSpectrum, s_transform
from .wavelets import DESCRIPTOR_NAMES, descriptor

WINTER_BRANCH = "WinterCWT"
SUMMER_BRANCH = "SummerST"


@dataclass(frozen=True)
class PipelineConfig:
    """Routing and per-stage settings; defaults mirror the reference setup."""

    winter_months: frozenset = frozenset({12, 1, 2})
    summer_months: frozenset = frozenset({4, 5, 6})
    winter_wavelet: str = "db4"
    filter: MedianFilterConfig = field(default_factory=MedianFilterConfig)
    st: STConfig = field(default_factory=STConfig)
    agitation_threshold: float = 0.8

    def __post_init__(self):
        winter = frozenset(int(m) for m in self.winter_months)
        summer = frozenset(int(m) for m in self.summer_months)
        object.__setattr__(self, "winter_months", winter)
        object.__setattr__(self, "summer_months", summer)
        if winter & summer:
            raise ValueError(f"winter and summer months overlap: {sorted(winter & summer)}")
        for m in winter | summer:
            if not 1 <= m <= 12:
                raise ValueError(f"month out of range: {m}")
        if self.winter_wavelet not in DESCRIPTOR_NAMES:
            raise ValueError(f"unknown wavelet {self.winter_wavelet!r}; "
                             f"choose one of {DESCRIPTOR_NAMES}")
        if not self.agitation_threshold > 0:
            raise ValueError("agitation_threshold must be positive")


@dataclass
class AnalysisReport:
    """One month's products. Field presence is branch-dependent and checked."""

    month: int
    branch_taken: str
    agitation: float
    input_series: AveragedSeries
    provenance: dict
    filtered_series: Optional[np.ndarray] = None
    scalogram: Optional[Scalogram] = None
    st_spectrum: Optional[STSpectrum] = None
    discontinuities: Optional[list] = None

    def __post_init__(self):
        if self.branch_taken == WINTER_BRANCH:
            ok = self.scalogram is not None and self.st_spectrum is None
        elif self.branch_taken == SUMMER_BRANCH:
            ok = (self.filtered_series is not None
                  and self.st_spectrum is not None
                  and self.scalogram is None)
        else:
            ok = False
        if not ok:
            raise ValueError(f"report fields inconsistent with branch {self.branch_taken!r}")


def classify_month(month: int, agitation: float, cfg: PipelineConfig) -> str:
    """Pick a branch for the month; never fails for months 1..12."""
    if not 1 <= int(month) <= 12:
        raise ValueError(f"month must be 1..12, got {month}")
    if month in cfg.winter_months:
        return WINTER_BRANCH
    if month in cfg.summer_months:
        return SUMMER_BRANCH
    return SUMMER_BRANCH if agitation > cfg.agitation_threshold else WINTER_BRANCH


def _config_snapshot(cfg: PipelineConfig) -> dict:
    return {
        "winter_months": sorted(cfg.winter_months),
        "summer_months": sorted(cfg.summer_months),
        "winter_wavelet": cfg.winter_wavelet,
        "filter_window": cfg.filter.window,
        "filter_boundary": cfg.filter.boundary,
        "st_gamma": cfg.st.gamma,
        "agitation_threshold": cfg.agitation_threshold,
    }


def run_pipeline(ts: TimeSeries, month: int,
                 cfg: PipelineConfig = PipelineConfig()) -> AnalysisReport:
    """Average the decade by day-of-month, route by season, run the branch.

    Parameters
    ----------
    ts : TimeSeries
        Daily speeds spanning one or more years containing `month`.
    month : int
        Calendar month 1..12.
    cfg : PipelineConfig
        Routing and stage settings.

    Returns
    -------
    AnalysisReport
        Winter branch carries a scalogram and detected discontinuity
        indices (day-of-month positions, 0-based); summer branch carries
        the filtered series and its S-transform.
    """
    averaged = decade_monthly_average(ts, month)
    # agitation of the series the branch will actually consume
    agitation = agitation_index(averaged.values)
    branch = classify_month(month, agitation, cfg)
    provenance = {
        "config": _config_snapshot(cfg),
        "input_sha256": hashlib.sha256(serialize_csv(ts).encode("utf-8")).hexdigest(),
    }
    if branch == WINTER_BRANCH:
        desc = descriptor(cfg.winter_wavelet)
        return AnalysisReport(
            month=month,
            branch_taken=branch,
            agitation=agitation,
            input_series=averaged,
            provenance=provenance,
            scalogram=cwt(averaged.values, desc),
            discontinuities=detect_discontinuities(averaged.values, desc),
        )
    filtered = median_filter(averaged.values, cfg.filter)
    return AnalysisReport(
        month=month,
        branch_taken=branch,
        agitation=agitation,
        input_series=averaged,
        provenance=provenance,
        filtered_series=filtered,
        st_spectrum=s_transform(filtered, cfg.st),
    )


# ---------------------------------------------------------------------------
# synthetic data

@dataclass(frozen=True)
class CalmModel:
    """Low-agitation regime: Gaussian noise sigma 0.2 on the seasonal baseline."""

    sigma: float = 0.2


@dataclass(frozen=True)
class AgitatedModel:
    """High-agitation regime: Gaussian noise sigma 1.5 plus sparse gust spikes."""

    sigma: float = 1.5
    spike_probability: float = 0.05
    spike_low: float = 3.0
    spike_high: float = 8.0


@dataclass(frozen=True)
class StepModel:
    """Calm-style noise plus a persistent level shift starting at an absolute
    0-based sample index."""

    day: int
    magnitude: float
    sigma: float = 0.2


WindModel = Union[CalmModel, AgitatedModel, StepModel]

_BASE_YEAR = 2001  # fixed start so a seed alone pins the whole calendar


def synth_wind(years: int, model: WindModel, seed: int) -> TimeSeries:
    """Seeded daily wind-speed series over whole calendar years.

    Baseline is 5 m/s plus an annual sinusoid of amplitude 2; the model
    adds its noise regime on top; values are clamped at zero last. The
    same (years, model, seed) triple always yields the identical series.
    """
    if not 1 <= int(years) <= 50:
        raise ValueError(f"years must be in 1..50, got {years}")
    start = dt.date(_BASE_YEAR, 1, 1)
    stop = dt.date(_BASE_YEAR + int(years), 1, 1)
    stamps = [start + dt.timedelta(days=i) for i in range((stop - start).days)]
    doy = np.array([d.timetuple().tm_yday - 1 for d in stamps], dtype=float)
    ylen = np.array([366.0 if calendar.isleap(d.year) else 365.0 for d in stamps])
    v = 5.0 + 2.0 * np.sin(2.0 * np.pi * doy / ylen)
    rng = np.random.default_rng(seed)
    if isinstance(model, AgitatedModel):
        v = v + rng.normal(0.0, model.sigma, size=len(v))
        gusty = rng.random(len(v)) < model.spike_probability
        v[gusty] += rng.uniform(model.spike_low, model.spike_high, size=int(gusty.sum()))
    elif isinstance(model, (CalmModel, StepModel)):
        # scale 0 is legal and draws exact zeros, so the noiseless variant
        # shares this path
        v = v + rng.normal(0.0, model.sigma, size=len(v))
        if isinstance(model, StepModel):
            if not 0 <= model.day < len(v):
                raise ValueError(f"step day {model.day} outside 0..{len(v) - 1}")
            v[model.day:] += model.magnitude
    else:
        raise TypeError(f"unknown wind model: {model!r}")
    v = np.clip(v, 0.0, None)
    label = type(model).__name__.removesuffix("Model").lower()
    return TimeSeries(timestamps=stamps, values=v, label=f"synth-{label}")
