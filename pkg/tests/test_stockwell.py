import datetime as dt

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from windtf import (
    MalformedSpectrum,
    OracleSizeExceeded,
    STConfig,
    STSpectrum,
    SignalTooShort,
    inverse_s_transform,
    s_transform,
    s_transform_direct,
    st_magnitude,
)


def fourier_rows(x):
    """Forward coefficients with the (1/N) convention, rows 0..N//2."""
    n = len(x)
    return np.fft.fft(x)[: n // 2 + 1] / n


# --- config and metadata

def test_gamma_bounds():
    STConfig(gamma=0.2)
    STConfig(gamma=5.0)
    for bad in (0.19, 5.01, -1.0):
        with pytest.raises(ValueError):
            STConfig(gamma=bad)


def test_spectrum_shape_and_metadata():
    x = np.arange(16, dtype=float)
    spec = s_transform(x)
    assert spec.coefficients.shape == (9, 16)
    assert spec.n_samples == 16
    assert spec.sample_interval == dt.timedelta(days=1)
    assert np.iscomplexobj(spec.coefficients)


def test_zero_row_is_signal_mean():
    x = np.array([1.0, 2.0, 4.0, 8.0, 1.0, 2.0, 4.0, 8.0])
    spec = s_transform(x)
    assert np.all(spec.coefficients[0] == x.mean())


# --- exact identities

def test_time_average_identity_seeded():
    rng = np.random.default_rng(1)
    for n in (8, 16, 32, 64, 128):
        x = rng.normal(5, 2, n).clip(0)
        spec = s_transform(x)
        dev = np.max(np.abs(spec.coefficients.mean(axis=1) - fourier_rows(x)))
        assert dev <= 1e-12, n


@pytest.mark.parametrize("gamma", [0.2, 0.7, 1.0, 3.0])
def test_identities_hold_for_any_gamma(gamma):
    rng = np.random.default_rng(2)
    x = rng.normal(5, 2, 32).clip(0)
    spec = s_transform(x, STConfig(gamma=gamma))
    assert np.max(np.abs(spec.coefficients.mean(axis=1) - fourier_rows(x))) <= 1e-12
    assert np.max(np.abs(inverse_s_transform(spec) - x)) <= 1e-9


@settings(max_examples=40, deadline=None)
@given(st.lists(st.floats(min_value=0.0, max_value=50.0,
                          allow_nan=False, allow_infinity=False),
                min_size=8, max_size=33))
def test_round_trip_property(values):
    x = np.asarray(values)
    spec = s_transform(x)
    assert np.max(np.abs(inverse_s_transform(spec) - x)) <= 1e-9


def test_odd_length_round_trip():
    rng = np.random.default_rng(3)
    for n in (9, 17, 31):
        x = rng.normal(5, 1, n).clip(0)
        spec = s_transform(x)
        assert spec.coefficients.shape == (n // 2 + 1, n)
        assert np.max(np.abs(inverse_s_transform(spec) - x)) <= 1e-9


# --- fast path vs literal definition

def test_fast_matches_direct():
    rng = np.random.default_rng(4)
    for n in (8, 15, 16, 31, 32, 64):
        x = rng.normal(5, 2, n).clip(0)
        fast = s_transform(x)
        direct = s_transform_direct(x)
        assert np.max(np.abs(fast.coefficients - direct.coefficients)) <= 1e-9, n


def test_fast_matches_direct_nondefault_gamma():
    rng = np.random.default_rng(5)
    x = rng.normal(0, 1, 24)
    cfg = STConfig(gamma=2.5)
    dev = np.max(np.abs(s_transform(x, cfg).coefficients
                        - s_transform_direct(x, cfg).coefficients))
    assert dev <= 1e-9


def test_direct_refuses_large_input():
    with pytest.raises(OracleSizeExceeded):
        s_transform_direct(np.zeros(513))


# --- localization

def test_pure_tone_argmax_exact():
    for n in (64, 128):
        t = np.arange(n)
        for k0 in (4, 7, n // 8, n // 4):
            x = np.cos(2 * np.pi * k0 * t / n)
            mag = st_magnitude(s_transform(x))
            row_energy = mag.mean(axis=1)
            assert int(np.argmax(row_energy)) == k0, (n, k0)


def test_constant_rows_carry_only_window_leakage():
    # for a constant, row k >= 1 sees the DC coefficient through the
    # Gaussian window at offset m = -k, i.e. exactly mean * exp(-2 pi^2)
    spec = s_transform(np.full(16, 3.0))
    mag = st_magnitude(spec)
    assert np.all(mag[0] == 3.0)
    assert np.allclose(mag[1:], 3.0 * np.exp(-2.0 * np.pi ** 2), rtol=1e-9, atol=0)


def test_chirp_ridge_tracks_instantaneous_frequency():
    n = 256
    t = np.arange(n)
    k0, k1 = 4.0, 16.0
    phase = (k0 * t + (k1 - k0) * t ** 2 / (2 * (n - 1))) / n
    x = np.cos(2 * np.pi * phase)
    mag = st_magnitude(s_transform(x))
    inst = k0 + (k1 - k0) * t / (n - 1)
    worst = 0.0
    for c in range(n // 4, 3 * n // 4):
        ridge = int(np.argmax(mag[1:, c])) + 1
        worst = max(worst, abs(ridge - inst[c]))
    assert worst <= 2.0


# --- inverse validation

def test_inverse_rejects_wrong_shape():
    x = np.arange(16, dtype=float)
    spec = s_transform(x)
    bad = STSpectrum(coefficients=spec.coefficients[:, :-1], n_samples=16)
    with pytest.raises(MalformedSpectrum):
        inverse_s_transform(bad)
    bad_rows = STSpectrum(coefficients=spec.coefficients[:-1], n_samples=16)
    with pytest.raises(MalformedSpectrum):
        inverse_s_transform(bad_rows)
    with pytest.raises(MalformedSpectrum):
        inverse_s_transform(STSpectrum(coefficients=np.zeros(8), n_samples=8))


def test_short_signal_rejected():
    with pytest.raises(SignalTooShort):
        s_transform(np.ones(7))
    with pytest.raises(SignalTooShort):
        s_transform_direct(np.ones(7))


def test_magnitude_is_modulus():
    x = np.random.default_rng(6).normal(5, 2, 16).clip(0)
    spec = s_transform(x)
    assert np.array_equal(st_magnitude(spec), np.abs(spec.coefficients))
