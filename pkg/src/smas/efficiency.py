"""Spectral efficiency and transmit-array sizing for AS and SM.

Efficiencies are in bit per channel use of the nominal Nyquist symbol
period T0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .transceiver import is_power_of_two

# Absorbs representation error in quotients such as (1e-3 - 1e-6) / 4e-8
# before a floor is taken.
_FLOOR_GUARD = 1e-9


def round_half_up(x: float) -> int:
    return math.floor(x + 0.5 + _FLOOR_GUARD)


def _floor(x: float) -> int:
    return math.floor(x + _FLOOR_GUARD)


@dataclass(frozen=True)
class EfficiencyParams:
    gamma_mod: float
    rolloff: float
    zeta: float
    n_t: int
    t_c: float
    t_s: float
    t_0: float
    # channel-estimation share of the coherence interval; always zero here
    t_est: float = 0.0

    def __post_init__(self):
        if self.gamma_mod <= 0 or self.t_c <= 0 or self.t_0 <= 0 or self.n_t < 1:
            raise ValueError("gamma_mod, t_c, t_0 and n_t must be positive")
        if self.rolloff < 0 or self.t_s < 0:
            raise ValueError("rolloff and t_s must be non-negative")
        if self.zeta < 1:
            raise ValueError(f"zeta must be >= 1, got {self.zeta}")
        if self.t_s >= self.t_c:
            raise ValueError("switching time must be shorter than the coherence interval")
        if self.t_est != 0.0:
            raise ValueError("channel-estimation overhead is not modelled")


def nt_scenario1(gamma_mod: float, zeta: float) -> int:
    """Antennas whose index bits make up the SM symbol-rate loss."""
    return 2 ** round_half_up(gamma_mod * (zeta - 1))


def nt_scenario2(gamma_new: float, zeta: float, gamma_old: float) -> int:
    """Antennas so SM with ``gamma_old`` matches AS switched to ``gamma_new``."""
    exponent = round_half_up(gamma_new * zeta - gamma_old)
    if gamma_new * zeta - gamma_old <= 0 or exponent < 0:
        raise ValueError("gamma_new * zeta must exceed gamma_old")
    return 2**exponent


def gamma_as(gamma_mod: float, rolloff: float) -> float:
    return gamma_mod / (1 + rolloff)


def gamma_sm(gamma_mod: float, zeta: float, rolloff: float) -> float:
    return round_half_up(zeta * gamma_mod) / (zeta * (1 + rolloff))


def gamma_as_switching(p: EfficiencyParams) -> float:
    """AS efficiency when one switch per coherence interval costs ``t_s``."""
    slots = _floor((p.t_c - p.t_s) / p.t_0)
    return p.gamma_mod / (1 + p.rolloff) * slots * p.t_0 / p.t_c


def gamma_sm_switching(p: EfficiencyParams) -> float:
    """SM efficiency when every symbol slot of ``zeta * t_0`` carries ``t_s``."""
    if not is_power_of_two(p.n_t):
        raise ValueError(f"n_t must be a power of two, got {p.n_t}")
    bits = p.gamma_mod + math.log2(p.n_t)
    slots = _floor(p.t_c / (p.zeta * p.t_0 + p.t_s))
    return bits / (1 + p.rolloff) * slots * p.t_0 / p.t_c
