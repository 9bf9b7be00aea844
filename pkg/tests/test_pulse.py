import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.signal.windows import dpss as scipy_dpss

from smas.pulse import (
    FilterKind,
    FilterTaps,
    SpectralMask,
    concentration,
    concentration_matrix,
    default_mask,
    mask_margin,
    psd,
    rate_reduction,
    rrc_impulse,
    rrc_taps,
    slepian_half_bandwidth,
    slepian_taps,
)


def dense_dpss(length, w):
    """Dominant eigenvector of the sinc concentration kernel, built by loops."""
    a = np.empty((length, length))
    for m in range(length):
        for n in range(length):
            a[m, n] = 2 * w if m == n else np.sin(2 * np.pi * w * (m - n)) / (np.pi * (m - n))
    vals, vecs = np.linalg.eigh(a)
    v = vecs[:, -1]
    return v if v[np.argmax(np.abs(v))] > 0 else -v, vals[-1]


def naive_dtft_db(taps, n_fft):
    freqs = np.arange(n_fft // 2 + 1) / n_fft
    n = np.arange(len(taps))
    power = np.array([abs(np.sum(taps * np.exp(-2j * np.pi * f * n))) ** 2 for f in freqs])
    return 10 * np.log10(power / power.max())


def test_half_bandwidth_mapping():
    assert slepian_half_bandwidth(0.65, 4) == pytest.approx(0.1625)


def test_slepian_symmetric_and_unit_energy():
    f = slepian_taps(10, 0.65)
    assert f.kind is FilterKind.SLEPIAN
    np.testing.assert_allclose(f.taps, f.taps[::-1], atol=1e-10)
    assert abs(np.sum(f.taps**2) - 1) < 1e-12
    assert f.taps.max() > 0


@pytest.mark.parametrize("length,alpha", [(10, 0.65), (10, 0.3), (16, 1.0), (7, 0.4), (20, 0.3), (24, 0.5)])
def test_slepian_matches_dense_eigensolve(length, alpha):
    taps = slepian_taps(length, alpha).taps
    ref, lam = dense_dpss(length, slepian_half_bandwidth(alpha))
    np.testing.assert_allclose(taps, ref, atol=1e-8)
    assert concentration(taps, slepian_half_bandwidth(alpha)) == pytest.approx(lam, abs=1e-10)


def test_slepian_matches_scipy():
    w = slepian_half_bandwidth(0.65)
    np.testing.assert_allclose(slepian_taps(10, 0.65).taps, scipy_dpss(10, 10 * w, norm=2), atol=1e-8)


def test_slepian_beats_truncated_rrc_in_band():
    w = slepian_half_bandwidth(0.65)
    assert concentration(slepian_taps(37, 0.65).taps, w) >= concentration(rrc_taps(37, 0.4).taps, w)
    assert concentration(slepian_taps(11, 0.65).taps, w) >= concentration(rrc_taps(11, 0.4).taps, w)


@settings(max_examples=50)
@given(st.lists(st.floats(-1, 1), min_size=10, max_size=10).filter(lambda v: np.sum(np.square(v)) > 1e-6))
def test_slepian_concentration_is_maximal(seq):
    w = slepian_half_bandwidth(0.65)
    best = concentration(slepian_taps(10, 0.65).taps, w)
    assert concentration(np.array(seq), w) <= best + 1e-12


def test_concentration_matrix_diagonal():
    a = concentration_matrix(5, 0.1)
    np.testing.assert_allclose(np.diag(a), 0.2)
    np.testing.assert_allclose(a, a.T)


def test_slepian_meets_mask():
    assert mask_margin(psd(slepian_taps(10, 0.65)), default_mask()) >= 0


@pytest.mark.parametrize("length,alpha", [(1, 0.65), (10, 2.0), (10, -0.1)])
def test_slepian_errors(length, alpha):
    with pytest.raises(ValueError):
        slepian_taps(length, alpha)


def test_rrc_centre_tap_limit():
    b = 0.4
    limit = 1 - b + 4 * b / np.pi
    assert rrc_impulse(np.array([0.0]), b)[0] == pytest.approx(limit, rel=1e-15)
    near = rrc_impulse(np.array([-1e-8, 1e-8]), b)
    np.testing.assert_allclose(near, limit, rtol=1e-9)


@pytest.mark.parametrize("b", [0.25, 0.4, 0.5, 1.0])
def test_rrc_pole_limit_is_continuous(b):
    t0 = 1 / (4 * b)
    at = rrc_impulse(np.array([t0, -t0]), b)
    near = rrc_impulse(np.array([t0 - 1e-5, t0 + 1e-5]), b)
    assert near.mean() == pytest.approx(at[0], rel=1e-8)
    assert at[0] == at[1]


def test_rrc_taps_hit_pole_sample():
    # roll-off 0.25 with 4x oversampling puts samples exactly on t = +-1
    f = rrc_taps(17, 0.25, 4)
    assert np.all(np.isfinite(f.taps))


def test_rrc_symmetric_unit_energy():
    f = rrc_taps(37, 0.4, 4)
    assert f.kind is FilterKind.RRC
    np.testing.assert_allclose(f.taps, f.taps[::-1], atol=1e-15)
    assert abs(np.sum(f.taps**2) - 1) < 1e-12


def test_rrc_mask_37_passes_17_fails():
    mask = default_mask()
    assert mask_margin(psd(rrc_taps(37, 0.4, 4)), mask) >= 0
    assert mask_margin(psd(rrc_taps(17, 0.4, 4)), mask) < 0


@pytest.mark.parametrize("length,rolloff,os", [(36, 0.4, 4), (0, 0.4, 4), (37, 0.0, 4), (37, 1.2, 4), (37, 0.4, 0)])
def test_rrc_errors(length, rolloff, os):
    with pytest.raises(ValueError):
        rrc_taps(length, rolloff, os)


def test_psd_impulse_is_flat():
    s = psd(FilterTaps(np.array([1.0]), 1, FilterKind.RRC), 64)
    assert s.freqs[0] == 0 and s.freqs[-1] == 0.5
    np.testing.assert_allclose(s.level_dbr, 0.0, atol=1e-12)


def test_psd_two_tap_null_at_nyquist():
    s = psd(FilterTaps(np.array([1, 1]) / np.sqrt(2), 1, FilterKind.RRC), 64)
    assert s.level_dbr.max() == 0
    assert s.level_dbr[-1] == -300.0


def test_psd_matches_direct_summation():
    rng = np.random.default_rng(0)
    for length in (3, 10, 37):
        taps = rng.standard_normal(length)
        f = FilterTaps(taps / np.linalg.norm(taps), 4, FilterKind.RRC)
        np.testing.assert_allclose(psd(f, 16 * length).level_dbr, naive_dtft_db(f.taps, 16 * length), atol=1e-9)


def test_psd_grid_too_small():
    with pytest.raises(ValueError):
        psd(slepian_taps(10, 0.65), 79)


def test_mask_margin_flat_spectrum():
    s = psd(FilterTaps(np.array([1.0]), 1, FilterKind.RRC), 64)
    assert mask_margin(s, SpectralMask(0.2, -35.0)) == pytest.approx(-35.0)


@given(st.floats(-80, 0), st.floats(0, 40))
def test_mask_margin_monotone_in_level(level, delta):
    s = psd(slepian_taps(10, 0.65))
    lo = mask_margin(s, SpectralMask(0.1875, level))
    hi = mask_margin(s, SpectralMask(0.1875, level + delta))
    assert hi >= lo


def test_mask_margin_empty_stopband():
    s = psd(slepian_taps(10, 0.65))
    short = type(s)(s.freqs[:10], s.level_dbr[:10])
    with pytest.raises(ValueError):
        mask_margin(short, SpectralMask(0.3))


def test_mask_validation():
    with pytest.raises(ValueError):
        SpectralMask(0.5)
    assert default_mask().stopband_edge == pytest.approx(0.1875)


def test_rate_reduction():
    assert rate_reduction(10, 4) == 2.5
    assert rate_reduction(37, 4) == 9.25
    assert rate_reduction(4, 4) == 1
    assert rate_reduction(37, 4) / rate_reduction(10, 4) == pytest.approx(3.7)
