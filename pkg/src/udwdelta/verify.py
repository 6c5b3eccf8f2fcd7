"""Closed-form versus independent-route verification harness."""

import itertools
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import oracle
from .density import assemble_xstate, assemble_xstate_coefficients, reduce_a, reduce_b
from .kernels import DetectorParams, Geometry, f_kernel, omega_kernel, theta_kernel
from .measures import concurrence_wootters_general, concurrence_xstate, joint_eigenvalues
from .pipeline import kernels_for
from .scenario import Family, make_scenario

__all__ = ["CheckResult", "GRIDS", "relative_error", "run_verification"]

GRIDS = {
    "default": ((0.5, 1.0, 2.0, 5.0, 10.0), (0.0, 1.0, 3.0, 10.0)),
    "dense": (
        tuple(float(v) for v in np.linspace(0.5, 10.0, 10)),
        tuple(float(v) for v in np.linspace(0.0, 10.0, 8)),
    ),
}
STRENGTHS = (0.5, 1.0, 2.0)
_ALPHAS = (0.0, 1.0 / 3.0, 1.0 / math.sqrt(2.0), 0.9, 1.0)


@dataclass
class CheckResult:
    name: str
    tolerance: float
    max_error: float = 0.0
    worst: object = None

    @property
    def passed(self):
        return self.max_error <= self.tolerance

    def update(self, error, where):
        if error > self.max_error or self.worst is None:
            self.max_error = max(self.max_error, error)
            self.worst = where


def relative_error(value, reference, floor=1e-8):
    """Relative error, or absolute error scaled to the 1e-6 budget below ``floor``.

    Values whose magnitude is below ``floor`` are compared absolutely against
    1e-10; the result is rescaled so that a single 1e-6 threshold applies.
    """
    if abs(reference) < floor:
        return abs(value - reference) * (1e-6 / 1e-10)
    return abs(value - reference) / abs(reference)


def _kernel_checks(grid, f_perturbation):
    seps, delays = GRIDS[grid]
    f_chk = CheckResult("f vs quadrature (relative)", 1e-9)
    th_chk = CheckResult("Theta vs quadrature (relative; 1e-10 abs below 1e-8)", 1e-6)
    om_chk = CheckResult("omega vs quadrature (relative; 1e-10 abs below 1e-8)", 1e-6)
    for lam, eta in itertools.product(STRENGTHS, STRENGTHS):
        d = DetectorParams(lam, eta)
        closed = f_kernel(d) * (1.0 + f_perturbation)
        numeric = math.exp(-oracle.f_exponent_quadrature(d))
        f_chk.update(abs(closed - numeric) / numeric, {"lambda": lam, "eta_over_sigma": eta})
        for L, dt in itertools.product(seps, delays):
            g = Geometry(L, dt)
            where = {"lambda": lam, "eta_over_sigma": eta, "L_over_sigma": L, "dtau_over_sigma": dt}
            th_chk.update(relative_error(theta_kernel(d, d, g), oracle.theta_quadrature(d, d, g)), where)
            om_chk.update(relative_error(omega_kernel(d, d, g), oracle.omega_quadrature(d, d, g)), where)
    return [f_chk, th_chk, om_chk]


def _state_checks(grid):
    seps, delays = GRIDS[grid]
    asm = CheckResult("main-text vs f_(jklm) assembly (abs)", 1e-12)
    eig = CheckResult("closed-form p_i vs eig_hermitian_4 (abs)", 1e-10)
    conc = CheckResult("X-state vs Wootters concurrence (abs)", 1e-10)
    red = CheckResult("reduced states vs partial trace (abs)", 1e-14)
    for L, dt, lam, alpha, fam in itertools.product(seps, delays, STRENGTHS, _ALPHAS, Family):
        s = make_scenario(alpha, theta=0.3, family=fam, coupling=lam, separation=L, delay=dt, gap=1.0)
        where = {"alpha": alpha, "lambda": lam, "L_over_sigma": L, "dtau_over_sigma": dt, "family": fam.value}
        k = kernels_for(s)
        x = assemble_xstate(s, k)
        y = assemble_xstate_coefficients(s, k)
        asm.update(float(np.max(np.abs(x.to_matrix() - y.to_matrix()))), where)
        m = x.to_matrix()
        closed = np.sort(joint_eigenvalues(x))[::-1]
        eig.update(float(np.max(np.abs(closed - oracle.eig_hermitian_4(m)))), where)
        conc.update(abs(concurrence_xstate(x, fam) - concurrence_wootters_general(m)), where)
        t = m.reshape(2, 2, 2, 2)
        rho_a = np.einsum("ijkj->ik", t)
        rho_b = np.einsum("ijil->jl", t)
        pa, pb = reduce_a(x), reduce_b(x)
        red.update(
            max(abs(pa.p_ground - rho_a[0, 0].real), abs(pa.p_excited - rho_a[1, 1].real),
                abs(pb.p_ground - rho_b[0, 0].real), abs(pb.p_excited - rho_b[1, 1].real)),
            where,
        )
    return [asm, eig, conc, red]


def run_verification(grid="default", f_perturbation=0.0, stream=None):
    """Run every check, print one line per check, return the results."""
    if grid not in GRIDS:
        raise ValueError(f"unknown verification grid {grid!r}; choose from {sorted(GRIDS)}")
    stream = sys.stdout if stream is None else stream
    results = _kernel_checks(grid, f_perturbation) + _state_checks(grid)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name}: max error {r.max_error:.3e} (tol {r.tolerance:.0e})", file=stream)
        if not r.passed:
            print(f"      worst point: {r.worst}", file=stream)
    return results
