"""Antenna selection, spatial-modulation mapping and ML detection.

Antenna indices are 1-based throughout this module's public API, so that
antenna 1 is the first column of the channel matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .channel import ChannelMatrix
from .constellation import Bits, Constellation, _as_bitstring, demap, map_bits

MatrixLike = Union[ChannelMatrix, np.ndarray]


def _entries(h: MatrixLike) -> np.ndarray:
    return h.entries if isinstance(h, ChannelMatrix) else np.asarray(h, dtype=complex)


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def index_bits(n_t: int) -> int:
    if not is_power_of_two(n_t):
        raise ValueError(f"n_t must be a power of two, got {n_t}")
    return n_t.bit_length() - 1


@dataclass(frozen=True)
class SelectionVector:
    n_t: int
    active_index: int

    def __post_init__(self):
        if not 1 <= self.active_index <= self.n_t:
            raise ValueError(f"active index {self.active_index} outside 1..{self.n_t}")

    @property
    def vector(self) -> np.ndarray:
        """One-hot selection vector b."""
        b = np.zeros(self.n_t, dtype=int)
        b[self.active_index - 1] = 1
        return b


@dataclass(frozen=True)
class SmCodeword:
    selection: SelectionVector
    symbol: complex
    bits: str


def select_antenna(h: MatrixLike) -> SelectionVector:
    """Transmit antenna with the largest column gain; lowest index on ties."""
    entries = _entries(h)
    gains = np.sum(entries.real**2 + entries.imag**2, axis=0)
    return SelectionVector(entries.shape[1], int(np.argmax(gains)) + 1)


def sm_encode(bits: Bits, n_t: int, c: Constellation) -> SmCodeword:
    """Split ``bits`` into antenna-index bits (natural binary) and symbol bits.

    An all-zero index prefix selects antenna 1.
    """
    n_idx = index_bits(n_t)
    s = _as_bitstring(bits)
    if len(s) != n_idx + c.bits_per_symbol:
        raise ValueError(
            f"SM with n_t={n_t} and {c.scheme.value} needs "
            f"{n_idx + c.bits_per_symbol} bits, got {len(s)}"
        )
    active = int(s[:n_idx], 2) + 1 if n_idx else 1
    return SmCodeword(SelectionVector(n_t, active), map_bits(s[n_idx:], c), s)


def sm_bits(active_index: int, symbol: complex, n_t: int, c: Constellation) -> str:
    n_idx = index_bits(n_t)
    prefix = format(active_index - 1, f"0{n_idx}b") if n_idx else ""
    return prefix + demap(symbol, c)


def detect_as(y: np.ndarray, h_sel: np.ndarray, c: Constellation) -> complex:
    """ML symbol decision when the active antenna is known.

    Minimises ``||y - h_sel v||^2`` over the alphabet.
    """
    y = np.asarray(y, dtype=complex).ravel()
    h_sel = np.asarray(h_sel, dtype=complex).ravel()
    if y.shape != h_sel.shape:
        raise ValueError(f"y has {y.size} entries but h_sel has {h_sel.size}")
    residual = y[:, None] - h_sel[:, None] * c.points[None, :]
    metric = np.sum(residual.real**2 + residual.imag**2, axis=0)
    return complex(c.points[np.argmin(metric)])


def detect_sm(y: np.ndarray, h: MatrixLike, c: Constellation) -> SmCodeword:
    """Joint ML decision over every (antenna, symbol) hypothesis.

    Hypotheses are ordered antenna-major, so ties resolve to the lowest
    antenna index and then the lowest symbol index.
    """
    entries = _entries(h)
    y = np.asarray(y, dtype=complex).ravel()
    if y.size != entries.shape[0]:
        raise ValueError(f"y has {y.size} entries but H has {entries.shape[0]} rows")
    n_t = entries.shape[1]
    residual = y[:, None, None] - entries[:, :, None] * c.points[None, None, :]
    metric = np.sum(residual.real**2 + residual.imag**2, axis=0)
    n_hat, v_hat = np.unravel_index(np.argmin(metric), metric.shape)
    symbol = complex(c.points[v_hat])
    return SmCodeword(
        SelectionVector(n_t, int(n_hat) + 1),
        symbol,
        sm_bits(int(n_hat) + 1, symbol, n_t, c),
    )
