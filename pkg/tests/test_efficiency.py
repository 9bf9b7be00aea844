import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from smas.efficiency import (
    EfficiencyParams,
    gamma_as,
    gamma_as_switching,
    gamma_sm,
    gamma_sm_switching,
    nt_scenario1,
    nt_scenario2,
    round_half_up,
)


def test_round_half_up():
    assert round_half_up(4.5) == 5
    assert round_half_up(5.5) == 6
    assert round_half_up(2.4999) == 2


@pytest.mark.parametrize("args,expected", [((2, 2.5), 8), ((2, 1), 1), ((3, 2.5), 32)])
def test_nt_scenario1(args, expected):
    assert nt_scenario1(*args) == expected


@pytest.mark.parametrize("args,expected", [((3, 2.5, 2), 64), ((2, 1, 1), 2), ((3, 3, 2), 128)])
def test_nt_scenario2(args, expected):
    assert nt_scenario2(*args) == expected


def test_nt_scenario2_rejects_non_positive_exponent():
    with pytest.raises(ValueError):
        nt_scenario2(1, 1, 2)


def test_gamma_as_examples():
    assert gamma_as(2, 0.4) == pytest.approx(1.4286, abs=1e-4)
    assert gamma_as(3, 0.4) == pytest.approx(2.1429, abs=1e-4)
    assert gamma_as(2, 0) == 2


def test_gamma_sm_examples():
    assert gamma_sm(2, 2.5, 0.4) == pytest.approx(5 / 3.5, abs=1e-12)
    assert gamma_sm(3, 2.5, 0.4) == pytest.approx(8 / 3.5, abs=1e-12)
    assert gamma_sm(2, 1, 0) == 2


def test_scenario1_parity():
    assert abs(gamma_as(2, 0.4) - gamma_sm(2, 2.5, 0.4)) < 1e-9


def params(**kw):
    base = dict(gamma_mod=2, rolloff=0.4, zeta=2.5, n_t=8, t_c=1e-3, t_s=0.0, t_0=40e-9)
    base.update(kw)
    return EfficiencyParams(**base)


def test_as_switching_without_switch_time():
    p = params(t_c=1000 * 40e-9)
    assert gamma_as_switching(p) == pytest.approx(gamma_as(2, 0.4), rel=1e-15)


def test_as_switching_example():
    # floor((1e-3 - 1e-6) / 4e-8) = 24975 slots
    expected = 2 / 1.4 * 24975 * 4e-8 / 1e-3
    assert gamma_as_switching(params(t_s=1e-6)) == pytest.approx(expected, rel=1e-12)
    assert expected == pytest.approx(1.42714, abs=1e-5)


@given(st.floats(0, 5e-4), st.floats(0, 5e-4))
def test_as_switching_monotone(a, b):
    lo, hi = sorted((a, b))
    assert gamma_as_switching(params(t_s=hi)) <= gamma_as_switching(params(t_s=lo))


def test_sm_switching_limit():
    t_0 = 40e-9
    p = params(t_c=1e4 * 2.5 * t_0)
    limit = (2 + math.log2(8)) / (2.5 * 1.4)
    assert gamma_sm_switching(p) == pytest.approx(limit, rel=1e-3)
    # for N_t = 8 the two switch-free formulations coincide
    assert limit == pytest.approx(gamma_sm(2, 2.5, 0.4), rel=1e-12)


def test_sm_slot_is_100ns_at_25_msymb():
    p = params()
    assert p.zeta * p.t_0 == pytest.approx(100e-9)


def test_sm_switching_inverse_proportional():
    base = gamma_sm_switching(params())
    doubled = gamma_sm_switching(params(t_s=2.5 * 40e-9))
    assert doubled / base == pytest.approx(0.5, rel=0.01)


def test_sm_switching_needs_power_of_two():
    with pytest.raises(ValueError):
        gamma_sm_switching(params(n_t=6))


@given(st.sampled_from([1, 2, 4, 8, 64]), st.floats(0, 1e-6), st.floats(1, 4))
def test_efficiencies_bounded(n_t, t_s, zeta):
    p = params(n_t=n_t, t_s=t_s, zeta=zeta)
    top = p.gamma_mod + math.log2(n_t)
    for g in (gamma_as_switching(p), gamma_sm_switching(p)):
        assert 0 < g <= top


@pytest.mark.parametrize(
    "kw",
    [dict(t_s=2e-3), dict(zeta=0.5), dict(gamma_mod=0), dict(t_0=-1.0), dict(rolloff=-0.1), dict(t_est=1e-6)],
)
def test_params_validation(kw):
    with pytest.raises(ValueError):
        params(**kw)
