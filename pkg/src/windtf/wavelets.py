"""Mother-wavelet construction: analytic forms, orthogonal filter tables, cascade sampling.

Haar and Morlet are evaluated analytically. The compactly supported
orthogonal families (Daubechies, Symlet, Coiflet) have no closed form, so
their scaling filters are built by spectral factorization and the wavelet
is sampled on a dyadic grid with the cascade algorithm.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import NonConvergent, UnsupportedFamilyOrLength

SQRT2 = np.sqrt(2.0)

# tap counts with a construction path we have validated
SUPPORTED_TAPS = {"daubechies": (4, 8, 12), "symlet": (8,), "coiflet": (6,)}

#: wavelet names accepted by descriptor() and the CLI
DESCRIPTOR_NAMES = ("haar", "db4", "db8", "db12", "sym8", "coif6", "morlet")


@dataclass(frozen=True)
class WaveletDescriptor:
    """Sampled mother wavelet plus the metadata the CWT engine needs.

    samples approximate psi on the uniform grid t_min + grid_step * k.
    They are complex for Morlet, real otherwise. grid_step is 2**-J in
    mother-wavelet time units.
    """

    kind: str
    samples: np.ndarray
    grid_step: float
    support: tuple[float, float]
    vanishing_moments: int

    @property
    def t_min(self):
        return self.support[0]

    @property
    def t_max(self):
        return self.support[1]


def haar_psi(t):
    """Haar mother wavelet: 1 on [0, 1/2), -1 on [1/2, 1), 0 elsewhere."""
    arr = np.asarray(t, dtype=float)
    out = np.where((arr >= 0.0) & (arr < 0.5), 1.0,
                   np.where((arr >= 0.5) & (arr < 1.0), -1.0, 0.0))
    return float(out) if out.ndim == 0 else out


def morlet_psi(t, omega0: float = 6.0):
    """Morlet mother wavelet pi**(-1/4) * exp(i w0 t) * exp(-t**2 / 2).

    The admissibility correction term is negligible for omega0 >= 5, which
    is why smaller carriers are rejected.
    """
    if omega0 < 5.0:
        raise ValueError(f"omega0 must be >= 5, got {omega0}")
    arr = np.asarray(t, dtype=float)
    out = np.pi ** -0.25 * np.exp(1j * omega0 * arr) * np.exp(-arr ** 2 / 2.0)
    return complex(out) if out.ndim == 0 else out


def _binomial_root_groups(p):
    """Conjugate root groups of the Daubechies autocorrelation polynomial.

    Each group is an (inside, outside) pair of z-root lists; any selection
    of one member per group factors |L|^2 into a valid spectral factor.
    """
    P = np.array([comb(p - 1 + k, k) for k in range(p)], dtype=float)
    yroots = np.roots(P[::-1]) if p > 1 else np.array([])
    groups = []
    used = set()
    for i, y in enumerate(yroots):
        if i in used:
            continue
        # y = (2 - z - 1/z)/4  ->  z^2 - (2 - 4y) z + 1 = 0
        b = 2.0 - 4.0 * y
        disc = np.sqrt(b * b - 4.0 + 0j)
        z_in, z_out = (b + disc) / 2.0, (b - disc) / 2.0
        if abs(z_in) > 1.0:
            z_in, z_out = z_out, z_in
        if abs(y.imag) < 1e-12:
            groups.append(([z_in], [z_out]))
            used.add(i)
        else:
            # complex y-roots pair up; keep conjugate z-roots together so
            # every candidate filter stays real
            j = next(k for k in range(len(yroots)) if k not in used and k != i
                     and abs(yroots[k] - np.conj(y)) < 1e-8)
            used.update({i, j})
            groups.append(([z_in, np.conj(z_in)], [z_out, np.conj(z_out)]))
    return groups


def _filter_from_roots(p, zroots):
    allroots = np.concatenate([np.full(p, -1.0 + 0j), np.asarray(zroots, dtype=complex)])
    h = np.real(np.poly(allroots))
    return h * (SQRT2 / h.sum())


def _daubechies_filter(taps):
    """Minimal-phase factorization: take every z-root inside the unit circle."""
    p = taps // 2
    roots = []
    for inside, _ in _binomial_root_groups(p):
        roots.extend(inside)
    return _filter_from_roots(p, roots)


def _symlet_filter(taps):
    """Least-asymmetric factorization: scan root-group selections for the
    flattest deviation from linear phase."""
    p = taps // 2
    groups = _binomial_root_groups(p)
    w = np.linspace(0.01, np.pi - 0.01, 256)
    best = None
    for mask in itertools.product((0, 1), repeat=len(groups)):
        h = _filter_from_roots(p, [r for g, m in zip(groups, mask) for r in g[m]])
        H = np.polyval(h[::-1], np.exp(-1j * w))
        phase = np.unwrap(np.angle(H * np.exp(1j * w * (taps - 1) / 2)))
        score = np.max(np.abs(phase - phase[0]))
        if best is None or score < best[0]:
            best = (score, h)
    return best[1]


def _coiflet_filter():
    # classical 6-tap coiflet, exact in radicals (Daubechies, Table 8.1)
    s7 = np.sqrt(7.0)
    return SQRT2 / 32.0 * np.array([s7 - 3, 1 - s7, 14 - 2 * s7, 14 + 2 * s7, 5 + s7, 1 - s7])


def orthogonal_filter(family: str, taps: int) -> np.ndarray:
    """Scaling filter h with sum(h) = sqrt(2) and double-shift orthonormality.

    Parameters
    ----------
    family : str
        'daubechies', 'symlet', or 'coiflet' (case-insensitive).
    taps : int
        Filter length; see SUPPORTED_TAPS for what each family provides.

    Raises
    ------
    UnsupportedFamilyOrLength
        If the family is unknown or the tap count has no construction.
    """
    key = family.strip().lower()
    if key not in SUPPORTED_TAPS or taps not in SUPPORTED_TAPS[key]:
        raise UnsupportedFamilyOrLength(f"no {family} filter with {taps} taps")
    if key == "daubechies":
        return _daubechies_filter(taps)
    if key == "symlet":
        return _symlet_filter(taps)
    return _coiflet_filter()


def _qmf(h):
    g = h[::-1].copy()
    g[1::2] *= -1.0
    return g


def _cascade_phi(h, levels):
    """Scaling function on grid 2**-levels over [0, taps-1] by iterated refinement."""
    taps = len(h)
    phi = np.zeros(taps)
    phi[0] = 1.0  # box samples at the integers
    for j in range(levels):
        up = np.zeros(2 * len(phi) - 1)
        up[::2] = phi
        phi = SQRT2 * np.convolve(h, up)
        # keep the exact support [0, taps-1] on the refined grid
        phi = phi[: (taps - 1) * 2 ** (j + 1) + 1]
    return phi


def cascade_wavelet(h, J: int, kind: str | None = None,
                    vanishing_moments: int | None = None) -> WaveletDescriptor:
    """Sample the wavelet psi of an orthogonal scaling filter on a dyadic grid.

    Runs the cascade to level J-1 for phi, then applies the quadrature
    mirror filter once: psi(n 2**-J) = sqrt(2) * sum_k g_k phi(n 2**-(J-1) - k).
    The iteration preserves the discrete zero-mean and unit-norm sums, so
    the descriptor invariants hold at every level for a valid filter.

    Parameters
    ----------
    h : sequence of float
        Scaling filter satisfying the orthogonal_filter postconditions.
    J : int
        Dyadic resolution, 4 <= J <= 12; the grid step is 2**-J.
    kind, vanishing_moments : optional
        Metadata overrides; default to a generic label and taps // 2.

    Raises
    ------
    NonConvergent
        If the sampled wavelet misses the zero-mean or unit-norm tolerance.
    """
    h = np.asarray(h, dtype=float)
    if not 4 <= J <= 12:
        raise ValueError(f"J must be in 4..12, got {J}")
    if abs(h.sum() - SQRT2) > 1e-8:
        raise ValueError("filter does not sum to sqrt(2)")
    taps = len(h)
    g = _qmf(h)
    phi = _cascade_phi(h, J - 1)
    half = 2 ** (J - 1)
    n_out = (taps - 1) * 2 ** J + 1
    psi = np.zeros(n_out)
    for k, gk in enumerate(g):
        lo = k * half
        hi = min(lo + len(phi), n_out)
        psi[lo:hi] += SQRT2 * gk * phi[: hi - lo]
    step = 2.0 ** -J
    if abs(psi.sum() * step) > 1e-6 or abs((psi ** 2).sum() * step - 1.0) > 1e-6:
        raise NonConvergent(f"cascade at J={J} misses descriptor tolerances")
    return WaveletDescriptor(
        kind=kind or f"cascade{taps}",
        samples=psi,
        grid_step=step,
        support=(0.0, float(taps - 1)),
        vanishing_moments=vanishing_moments if vanishing_moments is not None else taps // 2,
    )


# Morlet support is truncated where the envelope is ~1e-14 of its peak
_MORLET_HALF_SUPPORT = 8.0


def descriptor(name: str, J: int = 8, omega0: float = 6.0) -> WaveletDescriptor:
    """Build a named WaveletDescriptor: one of DESCRIPTOR_NAMES.

    J sets the sampling grid 2**-J for every family; omega0 only affects
    'morlet'.
    """
    key = name.strip().lower()
    step = 2.0 ** -J
    if key == "haar":
        t = np.arange(2 ** J + 1) * step
        return WaveletDescriptor("haar", haar_psi(t), step, (0.0, 1.0), 1)
    if key == "morlet":
        t = np.arange(-_MORLET_HALF_SUPPORT, _MORLET_HALF_SUPPORT + step / 2, step)
        return WaveletDescriptor(f"morlet{omega0:g}", morlet_psi(t, omega0), step,
                                 (-_MORLET_HALF_SUPPORT, _MORLET_HALF_SUPPORT), 1)
    if key in ("db4", "db8", "db12"):
        taps = int(key[2:])
        return cascade_wavelet(orthogonal_filter("daubechies", taps), J, kind=key)
    if key == "sym8":
        return cascade_wavelet(orthogonal_filter("symlet", 8), J, kind=key)
    if key == "coif6":
        return cascade_wavelet(orthogonal_filter("coiflet", 6), J, kind=key,
                               vanishing_moments=2)
    raise UnsupportedFamilyOrLength(f"unknown wavelet name {name!r}")
