"""Post-interaction two-detector density matrix.

Two independent assembly routes are provided:

* :func:`assemble_xstate` evaluates the simplified element formulas in
  terms of ``(f_A, f_B, Theta, omega)`` directly;
* :func:`assemble_xstate_coefficients` first builds the sixteen vacuum
  expectation values ``f_(jklm) = <0|X_(j,k)^dagger X_(l,m)|0>`` and then
  combines them with the initial-state amplitudes.

:func:`operator_sum_density` goes one step further back and forms
``sum f_(jklm) M_(lm) rho_0 M_(jk)^dagger`` with explicit monopole
operators, for either initial-state family.

Basis order throughout is ``{|gg>, |ge>, |eg>, |ee>}`` (A first).
"""

import cmath
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, PositivityError
from .scenario import Family, interference_phase, phases

__all__ = [
    "TwoQubitXState",
    "SingleDetectorState",
    "SIGN_PATTERNS",
    "ZERO_PATTERNS",
    "f_jklm",
    "f_table",
    "assemble_xstate",
    "assemble_xstate_coefficients",
    "operator_sum_density",
    "reduce_a",
    "reduce_b",
    "ground_probability_a",
    "ground_probability_b",
]

POPULATION_TOL = 1e-12
COHERENCE_TOL = 1e-10

#: (j, k, l, m) in {+1, -1}^4, row-major.
SIGN_PATTERNS = tuple(itertools.product((1, -1), repeat=4))
#: Patterns whose expectation value vanishes identically.
ZERO_PATTERNS = (
    (1, 1, 1, -1), (1, 1, -1, 1), (1, -1, 1, 1), (-1, 1, 1, 1),
    (-1, -1, -1, 1), (-1, -1, 1, -1), (-1, 1, -1, -1), (1, -1, -1, -1),
)

_BITFLIP_B = (1, 0, 3, 2)


@dataclass(frozen=True)
class TwoQubitXState:
    """X-shaped two-qubit density matrix.

    Only the upper coherences are stored; ``r41 = conj(r14)`` and
    ``r32 = conj(r23)``.
    """

    r11: float
    r22: float
    r33: float
    r44: float
    r14: complex
    r23: complex

    @property
    def populations(self):
        return (self.r11, self.r22, self.r33, self.r44)

    @property
    def trace(self):
        return self.r11 + self.r22 + self.r33 + self.r44

    def to_matrix(self):
        m = np.zeros((4, 4), dtype=complex)
        m[0, 0], m[1, 1], m[2, 2], m[3, 3] = self.populations
        m[0, 3] = self.r14
        m[3, 0] = self.r14.conjugate()
        m[1, 2] = self.r23
        m[2, 1] = self.r23.conjugate()
        return m

    @classmethod
    def from_matrix(cls, m):
        m = np.asarray(m)
        return cls(
            float(m[0, 0].real), float(m[1, 1].real), float(m[2, 2].real),
            float(m[3, 3].real), complex(m[0, 3]), complex(m[1, 2]),
        )

    def bit_flipped(self):
        """Conjugate by ``I (x) sigma_x`` (swap g and e of detector B)."""
        return TwoQubitXState(
            self.r22, self.r11, self.r44, self.r33, self.r23, self.r14
        )

    def check(self):
        """Raise :class:`PositivityError` if the X-state is not a valid state."""
        if abs(self.trace - 1.0) > POPULATION_TOL:
            raise PositivityError(f"trace is {self.trace!r}, expected 1")
        for name, p in zip(("r11", "r22", "r33", "r44"), self.populations):
            if p < -POPULATION_TOL:
                raise PositivityError(f"population {name} = {p!r} is negative")
        if abs(self.r14) ** 2 > self.r11 * self.r44 + COHERENCE_TOL:
            raise PositivityError("|r14|^2 exceeds r11 r44")
        if abs(self.r23) ** 2 > self.r22 * self.r33 + COHERENCE_TOL:
            raise PositivityError("|r23|^2 exceeds r22 r33")
        return self


@dataclass(frozen=True)
class SingleDetectorState:
    p_ground: float
    p_excited: float


def _check_kernels(s, k):
    if k.sigma != s.geometry.sigma:
        raise ConsistencyError(
            f"kernels were computed with sigma = {k.sigma!r}, "
            f"scenario has sigma = {s.geometry.sigma!r}"
        )


def _gg_elements(alpha, vartheta, phi_a, phi_b, k):
    a = alpha * math.sqrt(max(0.0, 1.0 - alpha * alpha))
    q = 2.0 * alpha * alpha - 1.0
    fa, fb = k.f_a, k.f_b
    c2, s2 = math.cos(2.0 * k.theta), math.sin(2.0 * k.theta)
    fch = fa * fb * math.cosh(k.omega)
    fsh = fa * math.sinh(k.omega)
    cv, sv = math.cos(vartheta), math.sin(vartheta)
    plus = fa + fb * c2
    minus = fa - fb * c2

    r11 = 0.25 * (1.0 + fch + q * plus) + 0.5 * a * fb * (fsh * cv - s2 * sv)
    r22 = 0.25 * (1.0 - fch + q * minus) - 0.5 * a * fb * (fsh * cv - s2 * sv)
    r33 = 0.25 * (1.0 - fch - q * minus) - 0.5 * a * fb * (fsh * cv + s2 * sv)
    r44 = 0.25 * (1.0 + fch - q * plus) + 0.5 * a * fb * (fsh * cv + s2 * sv)
    r14 = 0.25 * fb * complex(fsh, q * s2) + 0.5 * a * complex((1.0 + fch) * cv, plus * sv)
    r23 = -0.25 * fb * complex(fsh, q * s2) + 0.5 * a * complex((1.0 - fch) * cv, minus * sv)
    # r14 carries exp(-i(phi_A + phi_B)); r23 carries exp(-i(phi_A - phi_B)).
    r14 *= cmath.exp(-1j * (phi_a + phi_b))
    r23 *= cmath.exp(-1j * (phi_a - phi_b))
    return TwoQubitXState(r11, r22, r33, r44, r14, r23)


def assemble_xstate(s, k):
    """X-state from the simplified closed-form elements.

    The ``ge`` family is obtained from the ``gg`` result with Omega_B
    negated, followed by the bit flip on detector B.
    """
    _check_kernels(s, k)
    phi_a, phi_b = phases(s)
    x = _gg_elements(s.initial.alpha, interference_phase(s), phi_a, phi_b, k)
    if s.initial.family is Family.GE:
        x = x.bit_flipped()
    return x.check()


def f_jklm(j, k, l, m, kv):
    """Vacuum expectation ``<0|X_(j,k)^dagger X_(l,m)|0>`` for signs in {+1, -1}."""
    e2 = cmath.exp(2j * kv.theta)
    fab = kv.f_a * kv.f_b
    return (
        (1 + j * l + k * m + j * k * l * m)
        + (1 + j * l) * (k + m) * kv.f_a
        + ((l + j * k * m) * e2 + (j + k * l * m) / e2) * kv.f_b
        + ((j * k + l * m) * math.exp(kv.omega) + (j * m + k * l) * math.exp(-kv.omega)) * fab
    ) / 16.0


def f_table(kv):
    """All sixteen ``f_(jklm)`` keyed by sign tuple; structural zeros asserted."""
    table = {p: f_jklm(*p, kv) for p in SIGN_PATTERNS}
    for p in ZERO_PATTERNS:
        if table[p] != 0.0:
            raise ConsistencyError(f"f{p} should vanish, got {table[p]!r}")
    return table


def assemble_xstate_coefficients(s, k):
    """X-state built from the sixteen ``f_(jklm)`` values."""
    _check_kernels(s, k)
    f = f_table(k)
    phi_a, phi_b = phases(s)
    alpha = s.initial.alpha
    aa = alpha * alpha
    bb = 1.0 - aa
    a = alpha * math.sqrt(max(0.0, bb))
    em = a * cmath.exp(-1j * s.initial.theta)
    ep = a * cmath.exp(1j * s.initial.theta)
    tot = cmath.exp(1j * (phi_a + phi_b))
    rel = cmath.exp(1j * (phi_a - phi_b))

    pppp, mmmm = f[1, 1, 1, 1], f[-1, -1, -1, -1]
    mmpp, ppmm = f[-1, -1, 1, 1], f[1, 1, -1, -1]
    mpmp, pmpm = f[-1, 1, -1, 1], f[1, -1, 1, -1]
    pmmp, mppm = f[1, -1, -1, 1], f[-1, 1, 1, -1]

    r11 = aa * pppp + em * mmpp * tot + ep * ppmm / tot + bb * mmmm
    r44 = aa * mmmm + em * ppmm * tot + ep * mmpp / tot + bb * pppp
    r22 = aa * mpmp + em * pmmp * tot + ep * mppm / tot + bb * pmpm
    r33 = aa * pmpm + em * mppm * tot + ep * pmmp / tot + bb * mpmp
    r14 = aa * mmpp / tot + em * pppp + ep * mmmm / (tot * tot) + bb * ppmm / tot
    r23 = (
        aa * pmmp / rel
        + em * mpmp * cmath.exp(2j * phi_b)
        + ep * pmpm * cmath.exp(-2j * phi_a)
        + bb * mppm / rel
    )
    x = TwoQubitXState(r11.real, r22.real, r33.real, r44.real, r14, r23)
    if s.initial.family is Family.GE:
        x = x.bit_flipped()
    return x.check()


def _monopole(phase):
    # |e><g| e^{i phase} + |g><e| e^{-i phase}
    return np.array([[0.0, cmath.exp(-1j * phase)], [cmath.exp(1j * phase), 0.0]])


def operator_sum_density(s, k):
    """Full 4x4 density matrix ``sum f_(jklm) M_(lm) rho_0 M_(jk)^dagger``.

    ``M_(++) = I``, ``M_(+-) = mu_A``, ``M_(-+) = mu_B``, ``M_(--) = mu_A mu_B``
    with the physical gaps and switching times; the initial state vector is
    taken literally for either family, so no sign substitution is involved.
    """
    _check_kernels(s, k)
    f = f_table(k)
    eye = np.eye(2)
    mu_a = _monopole(s.detector_a.gap * s.detector_a.switch_time)
    mu_b = _monopole(s.detector_b.gap * s.detector_b.switch_time)
    ops = {
        (1, 1): np.kron(eye, eye),
        (1, -1): np.kron(mu_a, eye),
        (-1, 1): np.kron(eye, mu_b),
        (-1, -1): np.kron(mu_a, mu_b),
    }
    psi = s.initial.amplitudes
    rho0 = np.outer(psi, psi.conj())
    rho = np.zeros((4, 4), dtype=complex)
    for (j, kk), left in ops.items():
        for (l, m), right in ops.items():
            rho += f[j, kk, l, m] * (right @ rho0 @ left.conj().T)
    return rho


def reduce_a(x):
    return SingleDetectorState(x.r11 + x.r22, x.r33 + x.r44)


def reduce_b(x):
    return SingleDetectorState(x.r11 + x.r33, x.r22 + x.r44)


def ground_probability_a(s, k):
    """Closed-form ground-state probability of A for the ``gg`` family."""
    q = 2.0 * s.initial.alpha ** 2 - 1.0
    return 0.5 * (1.0 + q * k.f_a)


def ground_probability_b(s, k):
    """Closed-form ground-state probability of B for the ``gg`` family."""
    alpha = s.initial.alpha
    q = 2.0 * alpha ** 2 - 1.0
    a = alpha * math.sqrt(max(0.0, 1.0 - alpha * alpha))
    return (
        0.5 * (1.0 + q * k.f_b * math.cos(2.0 * k.theta))
        - a * k.f_b * math.sin(2.0 * k.theta) * math.sin(interference_phase(s))
    )
