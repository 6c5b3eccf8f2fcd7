import dataclasses
import math

import pytest
from hypothesis import given, strategies as st

from udwdelta import Family, make_scenario, validate
from udwdelta.errors import OrderingError, RangeError
from udwdelta.pipeline import evaluate
from udwdelta.scenario import interference_phase

TWO_PI = 2 * math.pi


def test_zero_phase():
    assert interference_phase(make_scenario(0.5, gap=0.0)) == 0.0


def test_theta_only():
    s = make_scenario(0.5, theta=math.pi / 2, separation=1.0, delay=0.0, tau_a=0.0)
    assert interference_phase(s) == pytest.approx(3 * math.pi / 2, abs=1e-15)


def test_delay_phase():
    s = make_scenario(0.5, gap=1.0, delay=3.0, tau_a=0.0)
    assert interference_phase(s) == pytest.approx(3.0 % TWO_PI, abs=1e-15)


def test_ge_negates_gap_b():
    s = make_scenario(0.5, gap=1.0, delay=3.0, tau_a=0.5, family="ge")
    assert interference_phase(s) == pytest.approx((0.5 - 3.5) % TWO_PI, abs=1e-14)


@given(st.floats(0.0, 6.28), st.floats(-20, 20), st.floats(0, 20), st.integers(-3, 3))
def test_periodicity(theta, tau_a, delay, n):
    base = make_scenario(0.3, theta=theta, gap=1.0, tau_a=tau_a, delay=delay)
    shifted = make_scenario(0.3, theta=theta, gap=1.0, tau_a=tau_a + n * TWO_PI, delay=delay)
    a, b = interference_phase(base), interference_phase(shifted)
    d = abs(a - b) % TWO_PI
    assert min(d, TWO_PI - d) < 1e-9
    assert 0.0 <= a < TWO_PI


def test_negative_delay():
    with pytest.raises(OrderingError, match="no later"):
        make_scenario(0.5, delay=-1.0)


def test_alpha_range():
    with pytest.raises(RangeError, match="alpha"):
        make_scenario(1.5)


@pytest.mark.parametrize("sigma", [0.0, -2.0])
def test_sigma_range(sigma):
    with pytest.raises(RangeError, match="sigma"):
        make_scenario(0.5, sigma=sigma)


def test_theta_range():
    with pytest.raises(RangeError):
        make_scenario(0.5, theta=TWO_PI)


def test_inconsistent_switch_times():
    s = make_scenario(0.5, delay=1.0)
    bad = dataclasses.replace(s, detector_b=dataclasses.replace(s.detector_b, switch_time=5.0))
    with pytest.raises(OrderingError):
        validate(bad)


def test_fig2_configuration_valid():
    s = make_scenario(1 / math.sqrt(2), theta=0.0, gap=1.0, coupling=1.0, eta=1.0)
    assert validate(s) is s
    assert s.initial.family is Family.GG


@given(
    st.floats(0, 1), st.floats(0, 6.28), st.floats(0, 5), st.floats(0, 10),
    st.floats(0.05, 5), st.floats(0, 30), st.floats(0, 30), st.sampled_from(["gg", "ge"]),
)
def test_total_over_domain(alpha, theta, gap, lam, eta, L, dt, fam):
    ev = evaluate(make_scenario(alpha, theta=theta, gap=gap, coupling=lam, eta=eta,
                                separation=L, delay=dt, family=fam))
    assert all(math.isfinite(v) for v in dataclasses.astuple(ev.kernels))
    assert abs(ev.state.trace - 1.0) < 1e-12
