import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from udwdelta import oracle
from udwdelta.errors import DomainError
from udwdelta.kernels import (
    SMALL_SEPARATION,
    DetectorParams,
    Geometry,
    compute_kernels,
    f_kernel,
    omega_kernel,
    theta_kernel,
)
from udwdelta.specfun import dawson

UNIT = DetectorParams(1.0, 1.0)


def close(value, reference, rel=1e-6, abs_floor=1e-8, abs_tol=1e-10):
    if abs(reference) < abs_floor:
        return abs(value - reference) <= abs_tol
    return abs(value - reference) <= rel * abs(reference)


class TestF:
    def test_no_coupling(self):
        assert f_kernel(DetectorParams(0.0, 1.0)) == 1.0

    def test_unit(self):
        assert f_kernel(UNIT) == pytest.approx(math.exp(-1 / (2 * math.pi ** 2)), rel=1e-15)
        assert f_kernel(UNIT) == pytest.approx(0.9506012576, abs=1e-10)
        assert f_kernel(UNIT) == pytest.approx(math.exp(-oracle.f_exponent_quadrature(UNIT)), rel=1e-9)

    def test_strong_coupling(self):
        assert f_kernel(DetectorParams(100.0, 1.0)) < 1e-10

    def test_sigma_scaling(self):
        assert f_kernel(DetectorParams(1.0, 2.0), 2.0) == f_kernel(UNIT)

    @pytest.mark.parametrize("sigma", [0.0, -1.0, math.nan])
    def test_bad_sigma(self, sigma):
        with pytest.raises(DomainError):
            f_kernel(UNIT, sigma)

    def test_monotone(self):
        lam = np.linspace(0.0, 10.0, 101)
        fs = [f_kernel(DetectorParams(l, 1.0)) for l in lam]
        assert all(a > b for a, b in zip(fs, fs[1:]))
        fe = [f_kernel(DetectorParams(1.0, e)) for e in np.linspace(0.01, 10, 101)]
        assert all(a > b for a, b in zip(fe, fe[1:]))
        assert all(f < 1.0 for f in fs[1:])


class TestTheta:
    @pytest.mark.parametrize("L", [0.0, 1e-6, 0.5, 1.0, 10.0])
    def test_equal_time(self, L):
        assert theta_kernel(UNIT, UNIT, Geometry(L, 0.0)) == 0.0

    def test_far_spacelike(self):
        assert abs(theta_kernel(UNIT, UNIT, Geometry(20.0, 0.1))) < 1e-12

    def test_matches_difference_form(self):
        L, dt = 1.0, 1.0
        ref = (1 / (4 * math.pi ** 2 * L)) * math.sqrt(math.pi / 2) * (
            math.exp(-(dt + L) ** 2 / 2) - math.exp(-(dt - L) ** 2 / 2)
        )
        assert theta_kernel(UNIT, UNIT, Geometry(L, dt)) == pytest.approx(ref, rel=1e-14)

    def test_lightlike_quadrature(self):
        g = Geometry(1.0, 1.0)
        assert close(theta_kernel(UNIT, UNIT, g), oracle.theta_quadrature(UNIT, UNIT, g))

    @given(
        st.floats(0.0, 30.0), st.floats(-30.0, 30.0),
        st.floats(0.0, 3.0), st.floats(0.1, 3.0),
    )
    def test_antisymmetric_in_delay(self, L, dt, lam, eta):
        d = DetectorParams(lam, eta)
        assert theta_kernel(d, d, Geometry(L, -dt)) == -theta_kernel(d, d, Geometry(L, dt))

    @given(st.floats(0.0, 30.0), st.floats(0.0, 30.0))
    def test_symmetric_in_separation(self, L, dt):
        assert theta_kernel(UNIT, UNIT, Geometry(-L, dt)) == theta_kernel(UNIT, UNIT, Geometry(L, dt))

    def test_large_arguments_finite(self):
        assert theta_kernel(UNIT, UNIT, Geometry(40.0, 40.0)) == pytest.approx(
            -(1 / (4 * math.pi ** 2 * 40.0)) * math.sqrt(math.pi / 2), rel=1e-12
        )


class TestOmega:
    def test_equal_time_sign(self):
        value = omega_kernel(UNIT, UNIT, Geometry(1.0, 0.0))
        assert value == pytest.approx(-(2 / (math.sqrt(2) * math.pi ** 2)) * dawson(1 / math.sqrt(2)), rel=1e-14)
        assert value < 0

    def test_zero_separation_limit(self):
        limit = -1.0 / math.pi ** 2
        assert omega_kernel(UNIT, UNIT, Geometry(0.0, 0.0)) == pytest.approx(limit, rel=1e-15)
        e3 = abs(omega_kernel(UNIT, UNIT, Geometry(1e-3, 0.0)) - limit)
        e4 = abs(omega_kernel(UNIT, UNIT, Geometry(1e-4, 0.0)) - limit)
        assert e4 < e3 < 1e-6
        # the full formula converges quadratically
        full = lambda L: -(1 / (math.sqrt(2) * math.pi ** 2 * L)) * (dawson(L / math.sqrt(2)) - dawson(-L / math.sqrt(2)))
        assert abs(full(1e-3) - limit) < 1e-6
        assert abs(full(1e-4) - limit) < 1e-8

    def test_spacelike_quadrature(self):
        g = Geometry(10.0, 0.0)
        assert close(omega_kernel(UNIT, UNIT, g), oracle.omega_quadrature(UNIT, UNIT, g))

    @given(st.floats(0.0, 30.0), st.floats(-30.0, 30.0))
    def test_symmetric_in_separation(self, L, dt):
        assert omega_kernel(UNIT, UNIT, Geometry(-L, dt)) == omega_kernel(UNIT, UNIT, Geometry(L, dt))


@pytest.mark.parametrize("dt", [0.0, 0.5, 1.0, 2.0, 5.0])
def test_series_continuity(dt):
    below = Geometry(math.nextafter(SMALL_SEPARATION, 0.0), dt)
    at = Geometry(SMALL_SEPARATION, dt)
    for kernel in (theta_kernel, omega_kernel):
        a, b = kernel(UNIT, UNIT, below), kernel(UNIT, UNIT, at)
        if b == 0.0:
            assert a == 0.0
        else:
            assert abs(a - b) <= 1e-9 * abs(b)


@pytest.mark.parametrize("L", [0.5, 1.0, 2.0, 5.0, 10.0])
@pytest.mark.parametrize("dt", [0.0, 1.0, 3.0, 10.0])
def test_kernel_oracle_grid(L, dt):
    g = Geometry(L, dt)
    for d in (UNIT, DetectorParams(0.5, 2.0)):
        assert close(theta_kernel(d, d, g), oracle.theta_quadrature(d, d, g))
        assert close(omega_kernel(d, d, g), oracle.omega_quadrature(d, d, g))


def test_unequal_detectors_factorise():
    # the prefactor lambda_A lambda_B eta_A eta_B is checked against the
    # angular quadrature, which never assumes identical detectors
    da, db = DetectorParams(0.7, 1.3), DetectorParams(1.9, 0.4)
    q = oracle.QuadratureSettings(method="angular")
    for L, dt in [(0.5, 0.2), (1.0, 1.0), (3.0, 2.0), (2.0, 6.0)]:
        g = Geometry(L, dt)
        assert close(theta_kernel(da, db, g), oracle.theta_quadrature(da, db, g, q))
        assert close(omega_kernel(da, db, g), oracle.omega_quadrature(da, db, g, q))


def test_compute_kernels():
    k = compute_kernels(UNIT, DetectorParams(0.0, 1.0), Geometry(1.0, 1.0))
    assert (k.f_a, k.f_b, k.theta, k.omega) == (f_kernel(UNIT), 1.0, 0.0, 0.0)
    assert 0 < k.f_a <= 1
