"""Closed-form interaction kernels for delta-switched, Gaussian-smeared
detectors at rest in (3+1)-dimensional Minkowski vacuum.

Three numbers summarise how the field acts on the detector pair:

``f_j``
    vacuum expectation of detector j's own displacement, ``<0|e^{2Y_j}|0>``;
``theta``
    the smeared field commutator (Pauli-Jordan part), nonzero only when a
    signal from A can reach B;
``omega``
    the smeared anti-commutator (Hadamard part), nonzero even for causally
    disconnected detectors.

Lengths and times may be given in any unit as long as the smearing width
``sigma`` uses the same one; every formula depends only on ``L/sigma``,
``dtau/sigma`` and ``eta/sigma``.
"""

import math
from dataclasses import dataclass

from .errors import DomainError
from .specfun import dawson, dawson_prime, dawson_third

__all__ = [
    "DetectorParams",
    "Geometry",
    "KernelValues",
    "SMALL_SEPARATION",
    "f_kernel",
    "theta_kernel",
    "omega_kernel",
    "compute_kernels",
]

#: Below this value of L/sigma the 1/L kernels switch to their Taylor series.
SMALL_SEPARATION = 1e-4

_SQRT2 = math.sqrt(2.0)
_SQRT_HALF_PI = math.sqrt(math.pi / 2.0)
_PI2 = math.pi ** 2


@dataclass(frozen=True)
class DetectorParams:
    """One detector: coupling, switching weight, energy gap, switching time.

    ``eta`` carries units of time and ``gap`` units of inverse time; the
    switching function is ``eta * delta(tau - switch_time)``.
    """

    coupling: float
    eta: float
    gap: float = 0.0
    switch_time: float = 0.0


@dataclass(frozen=True)
class Geometry:
    """Separation ``L``, switching delay ``dtau = tau_B - tau_A`` and
    smearing width ``sigma``."""

    separation: float
    delay: float
    sigma: float = 1.0


@dataclass(frozen=True)
class KernelValues:
    f_a: float
    f_b: float
    theta: float
    omega: float
    sigma: float = 1.0


def _check_sigma(sigma):
    if not (math.isfinite(sigma) and sigma > 0.0):
        raise DomainError(f"smearing width must be positive, got {sigma!r}")


def f_kernel(d, sigma=1.0):
    """Return ``exp(-lambda^2 eta^2 / (2 pi^2 sigma^2))`` for detector ``d``."""
    _check_sigma(sigma)
    s = d.coupling * d.eta / sigma
    return math.exp(-s * s / (2.0 * _PI2))


def _prefactor(da, db, sigma):
    return da.coupling * db.coupling * da.eta * db.eta / (sigma * sigma)


def theta_kernel(da, db, g):
    """Smeared commutator between the two switching events.

    Uses ``exp(-(v+u)^2/2) - exp(-(v-u)^2/2) = -2 exp(-(u^2+v^2)/2) sinh(uv)``
    with ``u = |L|/sigma`` and ``v = dtau/sigma``, which avoids the
    cancellation of the difference form. Any real ``dtau`` is accepted.
    """
    _check_sigma(g.sigma)
    u = abs(g.separation) / g.sigma
    v = g.delay / g.sigma
    p = _prefactor(da, db, g.sigma) * _SQRT_HALF_PI / (4.0 * _PI2)
    if u < SMALL_SEPARATION:
        # g(v+u) - g(v-u) = 2u g'(v) + (u^3/3) g'''(v), g = exp(-v^2/2)
        return p * math.exp(-0.5 * v * v) * (-2.0 * v - (u * u / 3.0) * (v ** 3 - 3.0 * v))
    uv = u * v
    if abs(uv) < 300.0:
        return -2.0 * p * math.exp(-0.5 * (u * u + v * v)) * math.sinh(uv) / u
    diff = math.exp(-0.5 * (v + u) ** 2) - math.exp(-0.5 * (v - u) ** 2)
    return p * diff / u


def omega_kernel(da, db, g):
    """Smeared anti-commutator, expressed through the Dawson function."""
    _check_sigma(g.sigma)
    u = abs(g.separation) / g.sigma
    v = g.delay / g.sigma
    p = _prefactor(da, db, g.sigma) / _PI2
    if u < SMALL_SEPARATION:
        x0 = v / _SQRT2
        return -p * (dawson_prime(x0) + (u * u / 12.0) * dawson_third(x0))
    diff = dawson((v + u) / _SQRT2) - dawson((v - u) / _SQRT2)
    return -p * diff / (_SQRT2 * u)


def compute_kernels(da, db, g):
    """Evaluate all four kernels for one detector pair and geometry."""
    return KernelValues(
        f_a=f_kernel(da, g.sigma),
        f_b=f_kernel(db, g.sigma),
        theta=theta_kernel(da, db, g),
        omega=omega_kernel(da, db, g),
        sigma=g.sigma,
    )
