"""Monte-Carlo BER engine for antenna selection (AS) and spatial modulation (SM).

Every channel use carries unit mean symbol energy, so the receive SNR per
antenna is ``1 / sigma2`` and Eb/N0 is that SNR divided by the bits carried
per channel use. Under SM the antenna-index bits count towards those bits
even though they cost no energy.

Trials are simulated in vectorised batches. Batch ``j`` of the point at
Eb/N0 ``x`` draws from ``RngStream(seed, (key(x), j))``, so a point's result
depends only on the configuration, the seed and ``x`` itself.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

import numpy as np
from scipy.stats import binomtest

from .channel import RandomSource, RngStream, as_generator, complex_normal
from .constellation import Constellation, build_constellation
from .transceiver import detect_as, detect_sm, index_bits, select_antenna

# complex entries of H per batch; bounds memory at roughly 16 MiB
_BATCH_ELEMENTS = 1 << 20


class LinkScheme(str, Enum):
    AS = "as"
    SM = "sm"


@dataclass(frozen=True)
class LinkConfig:
    scheme: LinkScheme
    n_t: int
    n_r: int
    constellation: str = "qpsk"
    ebn0_db_grid: tuple[float, ...] = (0.0,)
    max_bits: int = 10**7
    min_errors: int = 100
    seed: int = 1
    symbols_per_block: int = 1
    batch_trials: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "scheme", LinkScheme(self.scheme))
        object.__setattr__(self, "ebn0_db_grid", tuple(float(x) for x in self.ebn0_db_grid))
        build_constellation(self.constellation)
        if self.n_t < 1 or self.n_r < 1:
            raise ValueError("n_t and n_r must be positive")
        if self.scheme is LinkScheme.SM:
            index_bits(self.n_t)
        if not self.ebn0_db_grid:
            raise ValueError("Eb/N0 grid is empty")
        if self.max_bits < 1 or self.min_errors < 1 or self.symbols_per_block < 1:
            raise ValueError("budgets and symbols_per_block must be positive")
        if self.batch_trials is not None and self.batch_trials < 1:
            raise ValueError("batch_trials must be positive")

    @property
    def modulation(self) -> Constellation:
        return build_constellation(self.constellation)

    @property
    def bits_per_use(self) -> int:
        k = self.modulation.bits_per_symbol
        return k + index_bits(self.n_t) if self.scheme is LinkScheme.SM else k

    @property
    def bits_per_trial(self) -> int:
        return self.bits_per_use * self.symbols_per_block

    @property
    def trials_per_batch(self) -> int:
        if self.batch_trials is not None:
            return self.batch_trials
        return max(64, _BATCH_ELEMENTS // (self.n_r * self.n_t))


@dataclass(frozen=True)
class BerEstimate:
    ebn0_db: float
    bit_errors: int
    bits_simulated: int
    ber: float
    ci95_low: float
    ci95_high: float
    # standard error of ber from the spread of per-trial error counts
    std_error: float = 0.0


@dataclass(frozen=True)
class BerCurve:
    config: LinkConfig
    points: tuple[BerEstimate, ...] = field(default_factory=tuple)

    @property
    def ebn0_db(self) -> np.ndarray:
        return np.array([p.ebn0_db for p in self.points])

    @property
    def ber(self) -> np.ndarray:
        return np.array([p.ber for p in self.points])


def sigma2_from_ebn0(ebn0_db: float, bits_per_use: float) -> float:
    if bits_per_use <= 0:
        raise ValueError(f"bits_per_use must be positive, got {bits_per_use}")
    return 1.0 / (bits_per_use * 10.0 ** (ebn0_db / 10.0))


def wilson_interval(errors: int, trials: int) -> tuple[float, float]:
    ci = binomtest(errors, trials).proportion_ci(confidence_level=0.95, method="wilson")
    return float(ci.low), float(ci.high)


def _point_key(ebn0_db: float) -> int:
    # milli-dB, offset so the spawn key stays non-negative
    return int(round(ebn0_db * 1000)) + (1 << 31)


def run_trial(config: LinkConfig, sigma2: float, rng: RandomSource) -> tuple[int, int]:
    """One coherence block through the scalar transmit/detect chain.

    Returns ``(bits_sent, bit_errors)``. Draws the same random numbers as a
    one-trial batch of :func:`simulate_batch` on the same stream.
    """
    gen = as_generator(rng)
    c = config.modulation
    k = c.bits_per_symbol
    s = config.symbols_per_block
    h = complex_normal(gen, (config.n_r, config.n_t))
    payload = gen.integers(0, 1 << config.bits_per_use, size=s)
    noise = complex_normal(gen, (s, config.n_r), sigma2)

    errors = 0
    if config.scheme is LinkScheme.AS:
        h_sel = h[:, select_antenna(h).active_index - 1]
        for p, w in zip(payload, noise):
            x = c.points[c.index_of_value[p]]
            x_hat = detect_as(h_sel * x + w, h_sel, c)
            p_hat = c.label_values[np.flatnonzero(c.points == x_hat)[0]]
            errors += int(p ^ p_hat).bit_count()
    else:
        for p, w in zip(payload, noise):
            antenna = int(p >> k)
            x = c.points[c.index_of_value[p & ((1 << k) - 1)]]
            decided = detect_sm(h[:, antenna] * x + w, h, c)
            p_hat = int(decided.bits, 2)
            errors += int(p ^ p_hat).bit_count()
    return config.bits_per_trial, errors


def simulate_batch(
    config: LinkConfig, sigma2: float, rng: RandomSource, n_trials: int
) -> np.ndarray:
    """Bit errors of ``n_trials`` independent blocks, vectorised.

    ML metrics use the expanded form ``|v|^2 ||h_n||^2 - 2 Re(conj(v) h_n^H y)``,
    which differs from ``||y - h_n v||^2`` only by the hypothesis-independent
    ``||y||^2``.
    """
    gen = as_generator(rng)
    c = config.modulation
    k = c.bits_per_symbol
    s = config.symbols_per_block
    b = n_trials
    h = complex_normal(gen, (b, config.n_r, config.n_t))
    payload = gen.integers(0, 1 << config.bits_per_use, size=(b, s))
    noise = complex_normal(gen, (b, s, config.n_r), sigma2)

    gains = np.sum(h.real**2 + h.imag**2, axis=1)
    energy = np.abs(c.points) ** 2
    rows = np.arange(b)[:, None]

    if config.scheme is LinkScheme.AS:
        active = np.argmax(gains, axis=1)
        h_sel = h[np.arange(b), :, active]
        x = c.points[c.index_of_value[payload]]
        y = h_sel[:, None, :] * x[..., None] + noise
        z = np.einsum("br,bsr->bs", h_sel.conj(), y)
        g = gains[np.arange(b), active]
        metric = energy * g[:, None, None] - 2 * (c.points.conj() * z[..., None]).real
        p_hat = c.label_values[np.argmin(metric, axis=-1)]
    else:
        antenna = payload >> k
        x = c.points[c.index_of_value[payload & ((1 << k) - 1)]]
        h_act = h[rows, :, antenna]
        y = h_act * x[..., None] + noise
        z = np.einsum("brn,bsr->bsn", h.conj(), y)
        metric = energy * gains[:, None, :, None] - 2 * (c.points.conj() * z[..., None]).real
        best = np.argmin(metric.reshape(b, s, -1), axis=-1)
        n_hat, v_hat = np.divmod(best, c.size)
        p_hat = (n_hat << k) | c.label_values[v_hat]

    return np.bitwise_count(payload ^ p_hat).sum(axis=1).astype(np.int64)


def run_point(config: LinkConfig, ebn0_db: float) -> BerEstimate:
    """Simulate batches until ``min_errors`` errors or ``max_bits`` bits."""
    if config.max_bits < 1 or config.min_errors < 1:
        raise ValueError("zero simulation budget")
    sigma2 = sigma2_from_ebn0(ebn0_db, config.bits_per_use)
    key = _point_key(ebn0_db)
    per_trial = config.bits_per_trial
    batch = config.trials_per_batch

    errors = bits = trials = 0
    sq_errors = 0
    j = 0
    while errors < config.min_errors and bits < config.max_bits:
        n = min(batch, math.ceil((config.max_bits - bits) / per_trial))
        e = simulate_batch(config, sigma2, RngStream(config.seed, (key, j)), n)
        errors += int(e.sum())
        sq_errors += int((e * e).sum())
        bits += n * per_trial
        trials += n
        j += 1

    ber = errors / bits
    lo, hi = wilson_interval(errors, bits)
    mean = errors / trials
    var = max(sq_errors / trials - mean * mean, 0.0) * trials / max(trials - 1, 1)
    se = math.sqrt(var / trials) / per_trial
    return BerEstimate(float(ebn0_db), errors, bits, ber, lo, hi, se)


def _run_point_args(args):
    return run_point(*args)


def run_sweep(config: LinkConfig, workers: int = 1) -> BerCurve:
    """One independent :class:`BerEstimate` per grid point."""
    jobs = [(config, x) for x in config.ebn0_db_grid]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            points = list(pool.map(_run_point_args, jobs))
    else:
        points = [run_point(*job) for job in jobs]
    return BerCurve(config, tuple(points))


def find_crossover(a: BerCurve, b: BerCurve) -> Optional[float]:
    """Eb/N0 where ``a`` first crosses ``b``, interpolating ``log10`` BER.

    Grid points where either curve has no errors are skipped. Returns
    ``None`` if the log-ratio never strictly changes sign.
    """
    xa, xb = a.ebn0_db, b.ebn0_db
    if xa.shape != xb.shape or not np.array_equal(xa, xb):
        raise ValueError("curves must share the same Eb/N0 grid")
    return crossover_from_arrays(xa, a.ber, b.ber)


def crossover_from_arrays(
    x: Sequence[float], ber_a: Sequence[float], ber_b: Sequence[float]
) -> Optional[float]:
    x = np.asarray(x, dtype=float)
    ber_a = np.asarray(ber_a, dtype=float)
    ber_b = np.asarray(ber_b, dtype=float)
    valid = (ber_a > 0) & (ber_b > 0)
    x, d = x[valid], np.log10(ber_a[valid]) - np.log10(ber_b[valid])

    last = None  # index of last non-zero difference
    first_zero = None
    for i, di in enumerate(d):
        if di == 0:
            if last is not None and first_zero is None:
                first_zero = i
            continue
        if last is not None and np.sign(di) != np.sign(d[last]):
            if first_zero is not None:
                return float(x[first_zero])
            return float(x[last] + (x[i] - x[last]) * d[last] / (d[last] - di))
        last, first_zero = i, None
    return None
