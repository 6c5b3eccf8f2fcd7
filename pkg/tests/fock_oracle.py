"""Brute-force reference: the detector pair coupled to two truncated bosonic
modes whose smeared-field statistics reproduce (f_A, f_B, Theta, omega).

The time-evolution operator exp(mu_B Y_B) exp(mu_A Y_A) is applied to the
initial state times the vacuum with a sparse matrix exponential and the
modes are then traced out. Nothing from the closed-form assembly is used.
"""

import math

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import expm_multiply


def _monopole(phase):
    return np.array([[0.0, np.exp(-1j * phase)], [np.exp(1j * phase), 0.0]])


def fock_density(scenario, kernels, n_max=30):
    f_a, f_b, theta, omega = kernels.f_a, kernels.f_b, kernels.theta, kernels.omega
    # Y_j = c_j . a^dagger - conj(c_j) . a, so <Y_j^2> = -|c_j|^2 and
    # <Y_A Y_B> = -<c_A, c_B> = omega/4 + i theta/2.
    na = math.sqrt(max(0.0, -math.log(f_a) / 2.0))
    nb = math.sqrt(max(0.0, -math.log(f_b) / 2.0))
    z = -(omega / 4.0 + 0.5j * theta)
    if na > 0.0:
        c_a = np.array([na, 0.0], dtype=complex)
        b1 = z / na
        c_b = np.array([b1, math.sqrt(max(0.0, nb * nb - abs(b1) ** 2))], dtype=complex)
    else:
        c_a = np.zeros(2, dtype=complex)
        c_b = np.array([nb, 0.0], dtype=complex)

    a = sp.diags(np.sqrt(np.arange(1, n_max)), 1, format="csr")
    eye = sp.identity(n_max, format="csr")
    modes = (sp.kron(a, eye, format="csr"), sp.kron(eye, a, format="csr"))

    def field_op(c):
        return sum(c[i] * modes[i].T - np.conj(c[i]) * modes[i] for i in range(2))

    i2 = sp.identity(2, format="csr")
    mu_a = sp.kron(sp.csr_matrix(_monopole(scenario.detector_a.gap * scenario.detector_a.switch_time)), i2)
    mu_b = sp.kron(i2, sp.csr_matrix(_monopole(scenario.detector_b.gap * scenario.detector_b.switch_time)))
    gen_a = sp.kron(mu_a, field_op(c_a), format="csc")
    gen_b = sp.kron(mu_b, field_op(c_b), format="csc")

    vac = np.zeros(n_max * n_max)
    vac[0] = 1.0
    state = np.kron(scenario.initial.amplitudes, vac)
    state = expm_multiply(gen_b, expm_multiply(gen_a, state))
    block = state.reshape(4, n_max * n_max)
    return block @ block.conj().T
