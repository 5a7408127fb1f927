"""Sliding-window median filter for suppressing impulsive wind-speed spikes."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .errors import Empty, EvenWindow, WindowTooLarge


@dataclass(frozen=True)
class MedianFilterConfig:
    """Window length (odd, in samples) and boundary policy.

    boundary 'replicate' repeats the edge sample, 'reflect' mirrors the
    interior without duplicating the edge.
    """

    window: int = 5
    boundary: str = "replicate"

    def __post_init__(self):
        if self.window < 1 or self.window % 2 == 0:
            raise EvenWindow(f"window must be a positive odd integer, got {self.window}")
        if self.boundary not in ("replicate", "reflect"):
            raise ValueError(f"unknown boundary policy {self.boundary!r}")


def median_filter(values, cfg: MedianFilterConfig = MedianFilterConfig()) -> np.ndarray:
    """Median of the window centered at each sample; output length equals input.

    Out-of-range window positions are filled by the boundary policy. The
    window may exceed the signal length up to a factor of two; the padding
    covers the overhang.
    """
    x = np.asarray(values, dtype=float)
    if len(x) == 0:
        raise Empty("median_filter needs at least one sample")
    if cfg.window > 2 * len(x):
        raise WindowTooLarge(f"window {cfg.window} > 2 * length {len(x)}")
    if cfg.window == 1:
        return x.copy()
    half = cfg.window // 2
    # window odd and <= 2n, so half <= n-1 and a single reflection suffices
    mode = "edge" if cfg.boundary == "replicate" else "reflect"
    padded = np.pad(x, half, mode=mode)
    return np.median(sliding_window_view(padded, cfg.window), axis=1)
