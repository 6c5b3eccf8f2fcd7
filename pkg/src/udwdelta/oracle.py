"""Independent numerical checks: momentum-space quadrature of the kernel
integrals and a small Hermitian eigenvalue primitive.

Nothing here calls the closed forms in :mod:`udwdelta.kernels`.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .errors import AccuracyError, DomainError

__all__ = [
    "QuadratureSettings",
    "f_exponent_quadrature",
    "theta_quadrature",
    "omega_quadrature",
    "eig_hermitian_4",
    "eigh_hermitian_4",
]

_TWO_PI3 = (2.0 * math.pi) ** 3


@dataclass(frozen=True)
class QuadratureSettings:
    """Adaptive Gauss-Kronrod settings.

    ``k_max`` is the radial cutoff in units of ``1/sigma``. ``method`` is
    ``"radial"`` (angles integrated analytically) or ``"angular"`` (the
    polar angle is integrated numerically as well).
    """

    k_max: float = 20.0
    epsabs: float = 1e-14
    epsrel: float = 1e-11
    limit: int = 400
    method: str = "radial"

    def __post_init__(self):
        if self.k_max < 20.0:
            raise DomainError(f"k_max must be >= 20/sigma, got {self.k_max!r}")
        if self.epsrel > 1e-9 or self.epsabs > 1e-9:
            raise DomainError("quadrature tolerance must be <= 1e-9")
        if self.method not in ("radial", "angular"):
            raise DomainError(f"unknown quadrature method {self.method!r}")


DEFAULT_SETTINGS = QuadratureSettings()


def _quad(func, upper, q, points=None):
    value, abserr, info, *rest = integrate.quad(
        func, 0.0, upper, epsabs=q.epsabs, epsrel=q.epsrel, limit=q.limit,
        points=points, full_output=1,
    )
    if rest:
        raise AccuracyError(f"quadrature did not converge: {rest[0]}", achieved=abserr)
    return value, abserr


def f_exponent_quadrature(d, sigma=1.0, q=DEFAULT_SETTINGS):
    """``(1/2) int d^3k |beta(k)|^2`` as a radial integral.

    The corresponding ``f`` is ``exp(-result)``.
    """
    pref = 2.0 * d.coupling ** 2 * d.eta ** 2 * 4.0 * math.pi / (_TWO_PI3 * 2.0)
    value, _ = _quad(
        lambda k: k * math.exp(-0.5 * (k * sigma) ** 2), q.k_max / sigma, q
    )
    return pref * value


def _angular(da, db, g, q, part):
    # int d^3k beta_A^* beta_B with the polar angle done numerically.
    sigma = g.sigma
    pref = (
        2.0 * math.pi * 4.0 * da.coupling * db.coupling * da.eta * db.eta
        / (2.0 * _TWO_PI3)
    )
    ang = np.cos if part == "re" else np.sin

    def inner(k):
        # int_{-1}^{1} dc exp(i k (dtau - L c)), real or imaginary part, by
        # fixed high-order Gauss-Legendre (integrand is entire in c).
        nodes, weights = _LEGENDRE
        return float(np.dot(weights, ang(k * (g.delay - g.separation * nodes))))

    value, _ = _quad(
        lambda k: k * math.exp(-0.5 * (k * sigma) ** 2) * inner(k), q.k_max / sigma, q
    )
    return pref * value


_LEGENDRE = np.polynomial.legendre.leggauss(160)


def theta_quadrature(da, db, g, q=DEFAULT_SETTINGS):
    """Smeared commutator from its momentum-space integral (``L > 0``)."""
    if g.separation <= 0.0:
        raise DomainError("theta_quadrature requires L > 0")
    if q.method == "angular":
        return -0.5 * _angular(da, db, g, q, "im")
    L, dt = g.separation, g.delay
    pref = -2.0 * da.coupling * db.coupling * da.eta * db.eta / ((2.0 * math.pi) ** 2 * L)
    value, _ = _quad(
        lambda k: math.exp(-0.5 * (k * g.sigma) ** 2) * math.sin(k * L) * math.sin(k * dt),
        q.k_max / g.sigma, q,
    )
    return pref * value


def omega_quadrature(da, db, g, q=DEFAULT_SETTINGS):
    """Smeared anti-commutator from its momentum-space integral (``L > 0``)."""
    if g.separation <= 0.0:
        raise DomainError("omega_quadrature requires L > 0")
    if q.method == "angular":
        return -_angular(da, db, g, q, "re")
    L, dt = g.separation, g.delay
    pref = -0.5 * 4.0 * da.coupling * db.coupling * da.eta * db.eta * 2.0 * math.pi / (2.0 * _TWO_PI3)

    def integrand(k):
        if k == 0.0:
            return 0.0
        return (
            k * math.exp(-0.5 * (k * g.sigma) ** 2)
            * (2.0 * math.sin(k * L) / (k * L)) * 2.0 * math.cos(k * dt)
        )

    value, _ = _quad(integrand, q.k_max / g.sigma, q)
    return pref * value


def _check_hermitian(m, tol):
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise DomainError(f"expected a 4x4 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise DomainError("matrix has non-finite entries")
    if np.max(np.abs(m - m.conj().T)) > tol:
        raise DomainError("matrix is not Hermitian within tolerance")
    return 0.5 * (m + m.conj().T)


def eigh_hermitian_4(m, tol=1e-12):
    """Eigenvalues (descending) and matching eigenvector columns."""
    h = _check_hermitian(m, tol)
    w, v = np.linalg.eigh(h)
    return w[::-1].copy(), v[:, ::-1].copy()


def eig_hermitian_4(m, tol=1e-12):
    """Four real eigenvalues of a Hermitian 4x4 matrix, descending."""
    h = _check_hermitian(m, tol)
    return np.linalg.eigvalsh(h)[::-1].copy()
