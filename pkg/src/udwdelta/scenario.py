"""Validated physical configurations: two detectors, their geometry and
the initial entangled state."""

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import OrderingError, RangeError
from .kernels import DetectorParams, Geometry

__all__ = [
    "Family",
    "InitialState",
    "Scenario",
    "make_scenario",
    "validate",
    "interference_phase",
    "phases",
]

TWO_PI = 2.0 * math.pi


class Family(str, enum.Enum):
    """Initial-state family.

    ``GG``: ``alpha|g g> + sqrt(1-alpha^2) e^{i theta}|e e>``.
    ``GE``: ``alpha|g e> + sqrt(1-alpha^2) e^{i theta}|e g>``.
    """

    GG = "gg"
    GE = "ge"


@dataclass(frozen=True)
class InitialState:
    alpha: float
    theta: float = 0.0
    family: Family = Family.GG

    @property
    def amplitudes(self):
        """State vector in the basis {|gg>, |ge>, |eg>, |ee>}."""
        psi = np.zeros(4, dtype=complex)
        second = math.sqrt(max(0.0, 1.0 - self.alpha ** 2)) * complex(
            math.cos(self.theta), math.sin(self.theta)
        )
        if self.family is Family.GG:
            psi[0], psi[3] = self.alpha, second
        else:
            psi[1], psi[2] = self.alpha, second
        return psi


@dataclass(frozen=True)
class Scenario:
    detector_a: DetectorParams
    detector_b: DetectorParams
    geometry: Geometry
    initial: InitialState


def make_scenario(
    alpha,
    *,
    theta=0.0,
    family=Family.GG,
    coupling=None,
    coupling_a=1.0,
    coupling_b=1.0,
    eta=1.0,
    gap=1.0,
    separation=10.0,
    delay=0.0,
    tau_a=0.0,
    sigma=1.0,
):
    """Build and validate a :class:`Scenario` from scalar parameters.

    ``coupling``, when given, sets both detectors' coupling. Detector B's
    switching time is ``tau_a + delay``.
    """
    if coupling is not None:
        coupling_a = coupling_b = coupling
    s = Scenario(
        detector_a=DetectorParams(coupling_a, eta, gap, tau_a),
        detector_b=DetectorParams(coupling_b, eta, gap, tau_a + delay),
        geometry=Geometry(separation, delay, sigma),
        initial=InitialState(alpha, theta, Family(family)),
    )
    return validate(s)


def _finite(name, value):
    if not math.isfinite(value):
        raise RangeError(f"{name} must be finite, got {value!r}")


def validate(s):
    """Return ``s`` unchanged if every invariant holds, raise otherwise."""
    g = s.geometry
    for label, d in (("detector_a", s.detector_a), ("detector_b", s.detector_b)):
        for field in ("coupling", "eta", "gap", "switch_time"):
            _finite(f"{label}.{field}", getattr(d, field))
        if d.coupling < 0.0:
            raise RangeError(f"{label}.coupling must be >= 0, got {d.coupling!r}")
        if d.eta <= 0.0:
            raise RangeError(f"{label}.eta must be > 0, got {d.eta!r}")
    for field in ("separation", "delay", "sigma"):
        _finite(f"geometry.{field}", getattr(g, field))
    if g.sigma <= 0.0:
        raise RangeError(f"geometry.sigma must be > 0, got {g.sigma!r}")
    if g.separation < 0.0:
        raise RangeError(f"geometry.separation must be >= 0, got {g.separation!r}")
    if g.delay < 0.0:
        raise OrderingError(
            f"detector A must switch no later than B: delay = {g.delay!r} < 0"
        )
    gap_times = s.detector_b.switch_time - s.detector_a.switch_time
    scale = max(1.0, abs(s.detector_a.switch_time), abs(s.detector_b.switch_time))
    if abs(gap_times - g.delay) > 1e-12 * scale:
        raise OrderingError(
            "switch times disagree with geometry.delay: "
            f"tau_B - tau_A = {gap_times!r}, delay = {g.delay!r}"
        )
    ini = s.initial
    _finite("initial.alpha", ini.alpha)
    _finite("initial.theta", ini.theta)
    if not 0.0 <= ini.alpha <= 1.0:
        raise RangeError(f"initial.alpha must lie in [0, 1], got {ini.alpha!r}")
    if not 0.0 <= ini.theta < TWO_PI:
        raise RangeError(f"initial.theta must lie in [0, 2pi), got {ini.theta!r}")
    if not isinstance(ini.family, Family):
        raise RangeError(f"unknown initial-state family {ini.family!r}")
    return s


def phases(s):
    """Return ``(Omega_A tau_A, Omega_B tau_B)`` for the effective ``gg`` problem.

    For the ``ge`` family Omega_B enters with the opposite sign.
    """
    sign_b = -1.0 if s.initial.family is Family.GE else 1.0
    return (
        s.detector_a.gap * s.detector_a.switch_time,
        sign_b * s.detector_b.gap * s.detector_b.switch_time,
    )


def interference_phase(s):
    """``Omega_A tau_A + Omega_B tau_B - theta`` reduced to [0, 2pi)."""
    phi_a, phi_b = phases(s)
    value = math.fmod(phi_a + phi_b - s.initial.theta, TWO_PI)
    if value < 0.0:
        value += TWO_PI
    return 0.0 if value == TWO_PI else value
