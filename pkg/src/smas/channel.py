"""I.i.d. Rayleigh block fading, complex AWGN and seeded random streams."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

import numpy as np


@dataclass(frozen=True)
class RngStream:
    """Counter-based random stream.

    The generator is derived from ``(seed, stream_id)`` alone, so a trial
    draws the same numbers no matter when or where it is executed.
    ``stream_id`` may be an int or a tuple of non-negative ints (e.g.
    ``(point_key, batch_index)``).
    """

    seed: int
    stream_id: Union[int, tuple[int, ...]] = 0

    def generator(self) -> np.random.Generator:
        key = self.stream_id if isinstance(self.stream_id, tuple) else (self.stream_id,)
        return np.random.default_rng(np.random.SeedSequence(self.seed, spawn_key=key))


RandomSource = Union[RngStream, np.random.Generator]


def as_generator(rng: RandomSource) -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    return rng.generator()


@dataclass(frozen=True, eq=False)
class ChannelMatrix:
    entries: np.ndarray

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=complex)
        if entries.ndim != 2:
            raise ValueError(f"channel matrix must be 2-D, got shape {entries.shape}")
        if not np.all(np.isfinite(entries)):
            raise ValueError("channel matrix has non-finite entries")
        object.__setattr__(self, "entries", entries)

    @property
    def n_r(self) -> int:
        return self.entries.shape[0]

    @property
    def n_t(self) -> int:
        return self.entries.shape[1]


@dataclass(frozen=True, eq=False)
class NoiseVector:
    entries: np.ndarray
    variance: float = field(default=0.0)


def complex_normal(gen: np.random.Generator, shape, variance: float = 1.0) -> np.ndarray:
    """Circularly-symmetric complex Gaussian samples with ``E|z|^2 = variance``.

    Real parts are drawn for the whole array before the imaginary parts; the
    vectorised and per-trial simulation paths rely on this ordering.
    """
    scale = np.sqrt(variance / 2.0)
    re = gen.standard_normal(shape)
    im = gen.standard_normal(shape)
    return scale * (re + 1j * im)


def draw_channel(n_r: int, n_t: int, rng: RandomSource) -> ChannelMatrix:
    if n_r < 1 or n_t < 1:
        raise ValueError(f"channel dimensions must be positive, got {n_r}x{n_t}")
    return ChannelMatrix(complex_normal(as_generator(rng), (n_r, n_t)))


def draw_noise(n_r: int, sigma2: float, rng: RandomSource) -> NoiseVector:
    if n_r < 1:
        raise ValueError(f"n_r must be positive, got {n_r}")
    if sigma2 < 0:
        raise ValueError(f"noise variance must be non-negative, got {sigma2}")
    return NoiseVector(complex_normal(as_generator(rng), (n_r,), sigma2), float(sigma2))


def column_gain(h: Union[ChannelMatrix, np.ndarray], n: int) -> float:
    """Squared norm of column ``n`` (1-based antenna index)."""
    entries = h.entries if isinstance(h, ChannelMatrix) else np.asarray(h)
    if not 1 <= n <= entries.shape[1]:
        raise ValueError(f"antenna index {n} outside 1..{entries.shape[1]}")
    col = entries[:, n - 1]
    return float(np.sum(col.real**2 + col.imag**2))
