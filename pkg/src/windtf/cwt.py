"""Continuous wavelet transform and modulus-maxima discontinuity detection.

The transform correlates the signal with scaled copies of a sampled mother
wavelet. Maxima of |coefficient| are chained across scales; chains that
persist to the finest scale localize discontinuities (jumps survive at all
scales, smooth structure and noise die out toward one end or the other).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ScaleOutOfRange, SignalTooShort
from .wavelets import WaveletDescriptor


@dataclass
class Scalogram:
    """Scale-by-time coefficient matrix with its cone-of-influence mask.

    coefficients are real: the modulus is stored for complex wavelets.
    coi_mask is True wherever the wavelet support at that scale overruns
    the signal ends, i.e. the cell saw zero padding.
    """

    coefficients: np.ndarray
    scales: np.ndarray
    wavelet: WaveletDescriptor
    coi_mask: np.ndarray


@dataclass
class MaximaLine:
    """One chained ridge of per-scale modulus maxima, coarsest first.

    points hold (scale index, time index, |coefficient|), at most one per
    scale; a single missing scale inside a chain is tolerated (the maximum
    can dip below threshold or jitter away for one row under noise).
    """

    points: list[tuple[int, int, float]]

    @property
    def terminal_time(self) -> int:
        """Time index at the finest scale the chain reaches."""
        return self.points[-1][1]


def default_scales(n: int) -> np.ndarray:
    """Dyadic scale set, 8 voices per octave, from 2 up to n/4."""
    out = []
    v = 0
    while True:
        s = 2.0 * 2.0 ** (v / 8.0)
        if s > n / 4.0:
            break
        out.append(s)
        v += 1
    return np.array(out)


def _kernel(desc: WaveletDescriptor, s: float):
    """Resample the descriptor at scale s onto integer offsets.

    Returns (offsets d, kernel k, center c) such that
    coefficient[t] = sum_j k[j] * x[t + d[j] - c].

    The raw samples are linearly interpolated at d/s, conjugated for
    complex wavelets, mean-corrected so constants are annihilated exactly
    at every scale (the sampled sum of a zero-mean wavelet is not quite
    zero at non-dyadic scales), and L2-normalized by 1/sqrt(s). The center
    offset c aligns the response with the support midpoint, fixing the
    step-response argmax convention.
    """
    d = np.arange(int(np.ceil(s * desc.t_min)), int(np.floor(s * desc.t_max)) + 1)
    tgrid = desc.t_min + desc.grid_step * np.arange(len(desc.samples))
    k = np.interp(d / s, tgrid, desc.samples, left=0.0, right=0.0)
    k = np.conj(k)
    k = (k - k.mean()) / np.sqrt(s)
    c = int(round(s * (desc.t_min + desc.t_max) / 2.0))
    return d, k, c


def _cwt_rows(values, desc: WaveletDescriptor, scales):
    """Raw (pre-modulus) coefficient rows plus the COI mask."""
    x = np.asarray(values, dtype=float)
    n = len(x)
    scales = np.asarray(scales, dtype=float)
    rows = np.zeros((len(scales), n), dtype=complex if np.iscomplexobj(desc.samples) else float)
    coi = np.zeros((len(scales), n), dtype=bool)
    t_idx = np.arange(n)
    for i, s in enumerate(scales):
        d, k, c = _kernel(desc, s)
        # coefficient[t] = sum_j k[j] x[t + d[j] - c] = convolve(x, k reversed)[t + d_max - c]
        full = np.convolve(x, k[::-1])
        lo = d[-1] - c
        rows[i] = full[lo:lo + n]
        coi[i] = (t_idx - c + d[0] < 0) | (t_idx - c + d[-1] > n - 1)
    return rows, coi


def cwt(values, wavelet: WaveletDescriptor, scales=None) -> Scalogram:
    """Continuous wavelet transform of a real signal.

    Parameters
    ----------
    values : sequence of float
        Signal, length >= 8, zero-padded at the ends.
    wavelet : WaveletDescriptor
        Sampled mother wavelet; complex descriptors yield modulus output.
    scales : sequence of float, optional
        Strictly increasing, each in [1, length/2]; defaults to the dyadic
        ladder from default_scales.

    Returns
    -------
    Scalogram

    Raises
    ------
    SignalTooShort, ScaleOutOfRange
    """
    x = np.asarray(values, dtype=float)
    if len(x) < 8:
        raise SignalTooShort(f"cwt needs >= 8 samples, got {len(x)}")
    if scales is None:
        scales = default_scales(len(x))
    scales = np.asarray(scales, dtype=float)
    if len(scales) == 0:
        raise ScaleOutOfRange("empty scale set")
    if scales.min() < 1.0 or scales.max() > len(x) / 2.0:
        raise ScaleOutOfRange(f"scales must lie in [1, {len(x) / 2}]")
    if np.any(np.diff(scales) <= 0):
        raise ValueError("scales must be strictly increasing")
    rows, coi = _cwt_rows(x, wavelet, scales)
    if np.iscomplexobj(rows):
        rows = np.abs(rows)
    return Scalogram(coefficients=rows, scales=scales, wavelet=wavelet, coi_mask=coi)


def _scale_maxima(scal: Scalogram, threshold: float):
    """Per-scale strict local maxima of |coefficient| above the threshold.

    The threshold is relative to the largest modulus over non-COI cells;
    zero-padding edge artifacts otherwise dominate the reference level on
    short series. COI cells never become maxima themselves.
    """
    mag = np.abs(scal.coefficients)
    valid = np.where(scal.coi_mask, 0.0, mag)
    gmax = valid.max()
    maxima = []
    for i in range(mag.shape[0]):
        r = mag[i]
        keep = [(t, r[t]) for t in range(1, len(r) - 1)
                if not scal.coi_mask[i, t]
                and r[t] > r[t - 1] and r[t] > r[t + 1]
                and r[t] > threshold * gmax]
        maxima.append(keep)
    return maxima, gmax


def modulus_maxima(scal: Scalogram, threshold: float = 0.05) -> list[MaximaLine]:
    """Chain per-scale modulus maxima across scales into MaximaLines.

    Walking from the coarsest scale to the finest, every live chain claims
    the nearest unclaimed maximum within max(1, scale/2) samples of its
    current head (ties broken toward the stronger maximum); leftover maxima
    found new chains. A chain survives one scale with no match before it is
    retired, which keeps genuine ridges intact when a fine-scale maximum
    jitters out of tolerance under noise.
    """
    S = len(scal.scales)
    maxima, gmax = _scale_maxima(scal, threshold)
    if gmax == 0:
        return []
    done: list[dict] = []
    active: list[dict] = []
    for i in range(S - 1, -1, -1):
        candidates = []
        for ci, ch in enumerate(active):
            last_row, last_t, _ = ch["points"][-1]
            tol = max(1.0, scal.scales[last_row] / 2.0)
            for mi, (t, mag) in enumerate(maxima[i]):
                if abs(t - last_t) <= tol:
                    candidates.append((abs(t - last_t), -mag, ci, mi))
        candidates.sort()
        used_chain, used_max = set(), set()
        for _, _, ci, mi in candidates:
            if ci in used_chain or mi in used_max:
                continue
            used_chain.add(ci)
            used_max.add(mi)
            t, mag = maxima[i][mi]
            active[ci]["points"].append((i, t, mag))
            active[ci]["misses"] = 0
        survivors = []
        for ci, ch in enumerate(active):
            if ci in used_chain:
                survivors.append(ch)
            elif ch["misses"] >= 1:
                done.append(ch)
            else:
                ch["misses"] = 1
                survivors.append(ch)
        for mi, (t, mag) in enumerate(maxima[i]):
            if mi not in used_max:
                survivors.append({"points": [(i, t, mag)], "misses": 0})
        active = survivors
    done.extend(active)
    return [MaximaLine(points=ch["points"]) for ch in done]


def detect_discontinuities(values, wavelet: WaveletDescriptor,
                           min_scale_fraction: float = 0.7) -> list[int]:
    """Locate jump discontinuities via maxima chains over the default scales.

    A chain counts as a detection when it participates in at least
    min_scale_fraction of all scales and persists to the finest scale;
    side-lobe ridges of oscillatory wavelets fade out before the finest
    row, which is what separates them from the jump itself. Terminal
    time indices are returned sorted, deduplicated within +-1 sample.
    """
    if not 0 < min_scale_fraction <= 1:
        raise ValueError("min_scale_fraction must be in (0, 1]")
    x = np.asarray(values, dtype=float)
    scales = default_scales(len(x))
    scal = cwt(x, wavelet, scales)
    chains = modulus_maxima(scal)
    needed = min_scale_fraction * len(scales)
    terminals = sorted(ch.terminal_time for ch in chains
                       if ch.points[-1][0] == 0 and len(ch.points) >= needed)
    out: list[int] = []
    for t in terminals:
        if not out or t - out[-1] > 1:
            out.append(t)
    return out
