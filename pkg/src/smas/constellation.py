"""Modulation alphabets with Gray bit labels and unit mean energy."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Union

import numpy as np

Bits = Union[str, Sequence[int]]


class Scheme(str, Enum):
    QPSK = "qpsk"
    QAM8 = "8qam"


@dataclass(frozen=True, eq=False)
class Constellation:
    """Ordered symbol alphabet.

    ``labels[i]`` is the bit string carried by ``points[i]``. The integer
    form of the labels (``label_values``) and its inverse are kept for the
    vectorised simulation path.
    """

    scheme: Scheme
    points: np.ndarray
    labels: tuple[str, ...]

    def __post_init__(self):
        points = np.asarray(self.points, dtype=complex)
        points.setflags(write=False)
        object.__setattr__(self, "points", points)
        m = len(points)
        if m < 2 or m & (m - 1):
            raise ValueError(f"alphabet size must be a power of two, got {m}")
        k = m.bit_length() - 1
        if len(self.labels) != m or any(len(lab) != k for lab in self.labels):
            raise ValueError("need one label of length log2(M) per point")
        if len(set(self.labels)) != m:
            raise ValueError("labels must be distinct")
        values = np.array([int(lab, 2) for lab in self.labels], dtype=np.int64)
        index_of_value = np.empty(m, dtype=np.int64)
        index_of_value[values] = np.arange(m)
        values.setflags(write=False)
        index_of_value.setflags(write=False)
        object.__setattr__(self, "label_values", values)
        object.__setattr__(self, "index_of_value", index_of_value)

    @property
    def bits_per_symbol(self) -> int:
        return len(self.points).bit_length() - 1

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def mean_energy(self) -> float:
        return float(np.mean(np.abs(self.points) ** 2))

    def __len__(self) -> int:
        return len(self.points)


def build_constellation(scheme: Union[Scheme, str]) -> Constellation:
    """Build QPSK or rectangular 8QAM, Gray labelled, unit mean energy.

    QPSK is ``{+1, +i, -1, -i}`` in phase order with labels 00, 01, 11, 10.
    8QAM is the 2x4 grid ``{-3, -1, 1, 3} + {+1, -1}i`` scaled by
    ``1/sqrt(6)``, enumerated row-major (top row first). The first label bit
    selects the row and the last two Gray-code the column.
    """
    scheme = Scheme(scheme.lower() if isinstance(scheme, str) else scheme)
    if scheme is Scheme.QPSK:
        points = np.array([1, 1j, -1, -1j], dtype=complex)
        labels = ("00", "01", "11", "10")
    else:
        column_gray = ("00", "01", "11", "10")
        points, labels = [], []
        for row_bit, imag in (("0", 1.0), ("1", -1.0)):
            for gray, real in zip(column_gray, (-3.0, -1.0, 1.0, 3.0)):
                points.append(complex(real, imag))
                labels.append(row_bit + gray)
        points = np.array(points) / np.sqrt(6.0)
        labels = tuple(labels)
    return Constellation(scheme, points, labels)


def _as_bitstring(bits: Bits) -> str:
    if isinstance(bits, str):
        s = bits
    else:
        s = "".join(str(int(b)) for b in bits)
    if set(s) - {"0", "1"}:
        raise ValueError(f"not a bit string: {bits!r}")
    return s


def map_bits(bits: Bits, c: Constellation) -> complex:
    s = _as_bitstring(bits)
    if len(s) != c.bits_per_symbol:
        raise ValueError(
            f"{c.scheme.value} carries {c.bits_per_symbol} bits per symbol, got {len(s)}"
        )
    return complex(c.points[c.index_of_value[int(s, 2)]])


def demap(symbol: complex, c: Constellation) -> str:
    """Label of ``symbol``, which must be an exact member of the alphabet."""
    hits = np.flatnonzero(c.points == complex(symbol))
    if hits.size == 0:
        raise ValueError(f"{symbol!r} is not a {c.scheme.value} point")
    return c.labels[hits[0]]
