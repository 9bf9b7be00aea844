"""Pulse-shaping filters for single-RF-chain transmitters.

Two time-limited pulse families are compared against a common spectral
mask: the dominant discrete prolate spheroidal sequence (Slepian window) and
a truncated root-raised-cosine. Frequencies are in cycles/sample unless
stated otherwise; ``oversampling`` is the number of samples per nominal
Nyquist symbol period T0.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.linalg import eigh_tridiagonal

LEVEL_FLOOR_DBR = -300.0


class FilterKind(str, Enum):
    SLEPIAN = "slepian"
    RRC = "rrc"


@dataclass(frozen=True, eq=False)
class FilterTaps:
    """Unit-energy real FIR impulse response.

    ``parameter`` is the Slepian main-lobe parameter or the RRC roll-off,
    kept for reporting.
    """

    taps: np.ndarray
    oversampling: int
    kind: FilterKind
    parameter: float = float("nan")

    def __post_init__(self):
        taps = np.asarray(self.taps, dtype=float)
        if taps.ndim != 1 or taps.size < 1:
            raise ValueError("taps must be a non-empty 1-D array")
        if not np.all(np.isfinite(taps)):
            raise ValueError("taps must be finite")
        object.__setattr__(self, "taps", taps)

    def __len__(self) -> int:
        return self.taps.size


@dataclass(frozen=True, eq=False)
class SpectrumCurve:
    freqs: np.ndarray
    level_dbr: np.ndarray


@dataclass(frozen=True)
class SpectralMask:
    """Flat stopband limit applied to every frequency above ``stopband_edge``."""

    stopband_edge: float
    stopband_level_dbr: float = -35.0

    def __post_init__(self):
        if not 0 < self.stopband_edge < 0.5:
            raise ValueError(f"stopband edge must lie in (0, 0.5), got {self.stopband_edge}")


def default_mask(
    rolloff: float = 0.4,
    oversampling: int = 4,
    transition: float = 0.05,
    level_dbr: float = -35.0,
) -> SpectralMask:
    """Mask shared by both filter families.

    The stopband starts ``transition`` symbol rates above the RRC band edge
    ``(1 + rolloff) / (2 T0)``; the defaults put it at 0.75/T0.
    """
    return SpectralMask(((1 + rolloff) / 2 + transition) / oversampling, level_dbr)


def slepian_half_bandwidth(alpha: float, oversampling: int = 4) -> float:
    """Half-bandwidth W in cycles/sample for main-lobe parameter ``alpha``.

    ``alpha`` is the main-lobe half-width in units of the nominal symbol rate
    1/T0, so W = alpha / oversampling.
    """
    return alpha / oversampling


def dpss_tridiagonal(length: int, half_bandwidth: float) -> tuple[np.ndarray, np.ndarray]:
    """Diagonal and off-diagonal of the tridiagonal matrix commuting with the
    prolate concentration operator."""
    i = np.arange(length)
    diag = ((length - 1 - 2 * i) / 2.0) ** 2 * np.cos(2 * np.pi * half_bandwidth)
    off = i[1:] * (length - i[1:]) / 2.0
    return diag, off


def concentration_matrix(length: int, half_bandwidth: float) -> np.ndarray:
    """Dense sinc kernel whose quadratic form is the in-band energy."""
    d = np.subtract.outer(np.arange(length), np.arange(length)).astype(float)
    with np.errstate(invalid="ignore", divide="ignore"):
        a = np.sin(2 * np.pi * half_bandwidth * d) / (np.pi * d)
    np.fill_diagonal(a, 2 * half_bandwidth)
    return a


def concentration(taps: np.ndarray, half_bandwidth: float) -> float:
    """Fraction of energy inside |f| <= W."""
    taps = np.asarray(taps, dtype=float)
    a = concentration_matrix(taps.size, half_bandwidth)
    return float(taps @ a @ taps / (taps @ taps))


def _normalise(taps: np.ndarray) -> np.ndarray:
    if taps[np.argmax(np.abs(taps))] < 0:
        taps = -taps
    return taps / np.sqrt(np.sum(taps**2))


def slepian_taps(length: int, alpha: float, oversampling: int = 4) -> FilterTaps:
    w = slepian_half_bandwidth(alpha, oversampling)
    if length < 2:
        raise ValueError(f"Slepian window needs at least 2 taps, got {length}")
    if not 0 < w < 0.5:
        raise ValueError(f"half-bandwidth {w} outside (0, 0.5); alpha={alpha}")
    diag, off = dpss_tridiagonal(length, w)
    _, vec = eigh_tridiagonal(diag, off, select="i", select_range=(length - 1, length - 1))
    return FilterTaps(_normalise(vec[:, 0]), oversampling, FilterKind.SLEPIAN, alpha)


def rrc_impulse(t: np.ndarray, rolloff: float) -> np.ndarray:
    """Root-raised-cosine pulse at ``t`` symbol periods (unnormalised)."""
    t = np.asarray(t, dtype=float)
    b = rolloff
    h = np.empty_like(t)
    at_zero = np.isclose(t, 0.0, rtol=0, atol=1e-12)
    at_pole = np.isclose(np.abs(t), 1 / (4 * b), rtol=0, atol=1e-12)
    rest = ~(at_zero | at_pole)
    tr = t[rest]
    h[rest] = (np.sin(np.pi * tr * (1 - b)) + 4 * b * tr * np.cos(np.pi * tr * (1 + b))) / (
        np.pi * tr * (1 - (4 * b * tr) ** 2)
    )
    h[at_zero] = 1 - b + 4 * b / np.pi
    h[at_pole] = (b / np.sqrt(2)) * (
        (1 + 2 / np.pi) * np.sin(np.pi / (4 * b)) + (1 - 2 / np.pi) * np.cos(np.pi / (4 * b))
    )
    return h


def rrc_taps(length: int, rolloff: float, oversampling: int = 4) -> FilterTaps:
    if length < 1 or length % 2 == 0:
        raise ValueError(f"RRC length must be a positive odd integer, got {length}")
    if not 0 < rolloff <= 1:
        raise ValueError(f"roll-off must be in (0, 1], got {rolloff}")
    if oversampling < 1:
        raise ValueError(f"oversampling must be >= 1, got {oversampling}")
    t = (np.arange(length) - (length - 1) / 2) / oversampling
    return FilterTaps(_normalise(rrc_impulse(t, rolloff)), oversampling, FilterKind.RRC, rolloff)


def psd(f: FilterTaps, n_fft: int = 8192) -> SpectrumCurve:
    """Peak-normalised |DTFT|^2 on ``n_fft // 2 + 1`` frequencies in [0, 0.5]."""
    if n_fft < 8 * len(f):
        raise ValueError(f"n_fft={n_fft} too small for {len(f)} taps (need >= {8 * len(f)})")
    power = np.abs(np.fft.rfft(f.taps, n_fft)) ** 2
    freqs = np.arange(power.size) / n_fft
    peak = power.max()
    with np.errstate(divide="ignore"):
        level = 10 * np.log10(power / peak)
    return SpectrumCurve(freqs, np.maximum(level, LEVEL_FLOOR_DBR))


def mask_margin(s: SpectrumCurve, m: SpectralMask) -> float:
    """Worst-case distance in dB below the mask; negative means a violation."""
    stop = s.freqs > m.stopband_edge
    if not np.any(stop):
        raise ValueError(f"spectrum grid has no points above {m.stopband_edge}")
    return float(np.min(m.stopband_level_dbr - s.level_dbr[stop]))


def rate_reduction(length: int, oversampling: int) -> float:
    """Symbol-rate reduction when pulses of ``length`` samples must not overlap."""
    return length / oversampling
