"""Entanglement and correlation measures for the detector pair."""

import math
from dataclasses import dataclass

import numpy as np

from .density import POPULATION_TOL, reduce_a, reduce_b
from .errors import ConsistencyError, DomainError, PositivityError
from .oracle import eigh_hermitian_4
from .scenario import Family

__all__ = [
    "CorrelationReport",
    "concurrence_xstate",
    "concurrence_wootters_general",
    "entropy_single",
    "entropy_joint",
    "joint_eigenvalues",
    "mutual_information",
    "correlation_report",
]

EIGEN_TOL = 1e-10

_SIGMA_YY = np.array(
    [[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]], dtype=complex
)


@dataclass(frozen=True)
class CorrelationReport:
    concurrence: float
    entropy_a: float
    entropy_b: float
    entropy_joint: float
    mutual_information: float


def _clamp(p, tol=POPULATION_TOL):
    if p < -tol:
        raise PositivityError(f"probability {p!r} is negative beyond tolerance")
    return max(p, 0.0)


def _xlogx(p):
    return p * math.log(p) if p > 0.0 else 0.0


def _radicand(a, b):
    prod = _clamp(a) * _clamp(b)
    return math.sqrt(prod)


def concurrence_xstate(x, family=Family.GG):
    """Concurrence from the X-state elements.

    ``gg`` states: ``2 max(0, |r14| - sqrt(r22 r33))``;
    ``ge`` states: ``2 max(0, |r23| - sqrt(r11 r44))``.
    """
    if Family(family) is Family.GG:
        value = abs(x.r14) - _radicand(x.r22, x.r33)
    else:
        value = abs(x.r23) - _radicand(x.r11, x.r44)
    return 2.0 * max(0.0, value)


def concurrence_wootters_general(rho):
    """Wootters concurrence of an arbitrary two-qubit density matrix.

    The ``w_i`` (square roots of the eigenvalues of ``rho rho~``) are the
    singular values of ``B^dagger (sigma_y x sigma_y) B^*`` for any factor
    ``rho = B B^dagger``; using the eigen-factor avoids the square root of
    floating-point noise in near-zero eigenvalues of ``rho rho~``.
    """
    rho = np.asarray(rho, dtype=complex)
    w, v = eigh_hermitian_4(rho, tol=1e-10)
    if w[-1] < -EIGEN_TOL:
        raise DomainError(f"matrix is not positive semidefinite: min eigenvalue {w[-1]!r}")
    if abs(np.trace(rho).real - 1.0) > 1e-10:
        raise DomainError("density matrix must have unit trace")
    b = v * np.sqrt(np.clip(w, 0.0, None))
    c = b.conj().T @ _SIGMA_YY @ b.conj()
    s = np.linalg.svd(c, compute_uv=False)
    return float(max(0.0, s[0] - s[1] - s[2] - s[3]))


def entropy_single(p):
    """Von Neumann entropy (nats) of a diagonal qubit state."""
    return -(_xlogx(_clamp(p.p_ground)) + _xlogx(_clamp(p.p_excited)))


def _block_eigs(a, b, c):
    # eigenvalues of [[a, c], [c*, b]], small one via the determinant
    mean = 0.5 * (a + b)
    rad = math.hypot(0.5 * (a - b), abs(c))
    big = mean + rad
    det = a * b - abs(c) ** 2
    small = det / big if big > 0.0 else mean - rad
    return big, small


def joint_eigenvalues(x):
    """The four eigenvalues ``p_1..p_4`` of the X-state."""
    p1, p2 = _block_eigs(x.r11, x.r44, x.r14)
    p3, p4 = _block_eigs(x.r22, x.r33, x.r23)
    return p1, p2, p3, p4


def entropy_joint(x):
    """Von Neumann entropy (nats) of the joint detector state."""
    total = 0.0
    for p in joint_eigenvalues(x):
        total -= _xlogx(_clamp(p, EIGEN_TOL))
    return total


def mutual_information(entropy_a, entropy_b, entropy_ab):
    value = entropy_a + entropy_b - entropy_ab
    if abs(value) < 1e-14:
        return 0.0
    if value < -1e-10:
        raise ConsistencyError(f"mutual information {value!r} is negative")
    return value


def correlation_report(x, family=Family.GG):
    sa = entropy_single(reduce_a(x))
    sb = entropy_single(reduce_b(x))
    sab = entropy_joint(x)
    return CorrelationReport(
        concurrence=concurrence_xstate(x, family),
        entropy_a=sa,
        entropy_b=sb,
        entropy_joint=sab,
        mutual_information=mutual_information(sa, sb, sab),
    )
