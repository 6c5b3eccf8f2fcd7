"""Parameter sweeps over the closed-form pipeline and their CSV output."""

import concurrent.futures
import dataclasses
import io
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError
from .pipeline import evaluate
from .scenario import Family, make_scenario

__all__ = [
    "AXES",
    "DEFAULT_PARAMS",
    "PRESETS",
    "Axis",
    "SweepSpec",
    "ResultRow",
    "SweepError",
    "evaluate_point",
    "run_sweep",
    "format_csv",
    "write_csv",
    "preset_spec",
]

#: Sweep axis name -> fixed-parameter keys it overrides.
AXES = {
    "lambda": ("lambda_a", "lambda_b"),
    "lambda_a": ("lambda_a",),
    "lambda_b": ("lambda_b",),
    "alpha": ("alpha",),
    "L_over_sigma": ("L_over_sigma",),
    "dtau_over_sigma": ("dtau_over_sigma",),
    "eta_over_sigma": ("eta_over_sigma",),
    "theta_phase": ("theta_phase",),
}

DEFAULT_PARAMS = {
    "alpha": 1.0 / math.sqrt(2.0),
    "theta_phase": 0.0,
    "omega_gap": 1.0,
    "lambda_a": 1.0,
    "lambda_b": 1.0,
    "eta_over_sigma": 1.0,
    "L_over_sigma": 10.0,
    "dtau_over_sigma": 0.0,
    "tau_a_over_sigma": 0.0,
    "family": "gg",
}

_FLOAT_PARAMS = tuple(k for k in DEFAULT_PARAMS if k != "family")


class SweepError(ValidationError):
    """A grid point failed validation; carries its index and parameters."""

    def __init__(self, message, index=None, params=None):
        super().__init__(message)
        self.index = index
        self.params = params


@dataclass(frozen=True)
class Axis:
    name: str
    values: tuple

    @classmethod
    def linspace(cls, name, start, stop, steps):
        if int(steps) != steps or steps < 2:
            raise ValidationError(f"axis {name!r}: step count must be an integer >= 2")
        return cls(name, tuple(float(v) for v in np.linspace(start, stop, int(steps))))

    @classmethod
    def parse(cls, text):
        """Parse ``NAME:START:STOP:STEPS``."""
        parts = text.split(":")
        if len(parts) != 4:
            raise ValidationError(f"sweep axis must be NAME:START:STOP:STEPS, got {text!r}")
        name, start, stop, steps = parts
        try:
            start, stop, steps_f = float(start), float(stop), float(steps)
        except ValueError as exc:
            raise ValidationError(f"bad sweep axis {text!r}: {exc}") from None
        return cls.linspace(name, start, stop, steps_f)


@dataclass(frozen=True)
class SweepSpec:
    params: dict = field(default_factory=lambda: dict(DEFAULT_PARAMS))
    axes: tuple = ()
    preset: str = None

    def validate(self):
        if not 1 <= len(self.axes) <= 2:
            raise ValidationError(f"a sweep needs one or two axes, got {len(self.axes)}")
        names = [a.name for a in self.axes]
        for a in self.axes:
            if a.name not in AXES:
                raise ValidationError(
                    f"unknown sweep axis {a.name!r}; choose from {sorted(AXES)}"
                )
            if len(a.values) < 2:
                raise ValidationError(f"axis {a.name!r} needs at least two values")
        touched = [k for n in names for k in AXES[n]]
        if len(set(touched)) != len(touched):
            raise ValidationError(f"sweep axes overlap: {names}")
        unknown = set(self.params) - set(DEFAULT_PARAMS)
        if unknown:
            raise ValidationError(f"unknown parameters: {sorted(unknown)}")
        return self

    def grid(self):
        """Parameter dicts in row-major order (first axis outermost)."""
        base = dict(DEFAULT_PARAMS)
        base.update(self.params)
        for combo in itertools.product(*(a.values for a in self.axes)):
            point = dict(base)
            for axis, value in zip(self.axes, combo):
                for key in AXES[axis.name]:
                    point[key] = value
            yield point


@dataclass(frozen=True)
class ResultRow:
    alpha: float
    theta_phase: float
    omega_gap: float
    lambda_a: float
    lambda_b: float
    eta_over_sigma: float
    L_over_sigma: float
    dtau_over_sigma: float
    tau_a_over_sigma: float
    family: str
    f_a: float
    f_b: float
    theta_comm: float
    omega_anti: float
    r11: float
    r22: float
    r33: float
    r44: float
    abs_r14: float
    abs_r23: float
    concurrence: float
    entropy_a: float
    entropy_b: float
    entropy_joint: float
    mutual_information: float


COLUMNS = tuple(f.name for f in dataclasses.fields(ResultRow))


def scenario_from_params(p):
    return make_scenario(
        float(p["alpha"]),
        theta=float(p["theta_phase"]),
        family=Family(p["family"]),
        coupling_a=float(p["lambda_a"]),
        coupling_b=float(p["lambda_b"]),
        eta=float(p["eta_over_sigma"]),
        gap=float(p["omega_gap"]),
        separation=float(p["L_over_sigma"]),
        delay=float(p["dtau_over_sigma"]),
        tau_a=float(p["tau_a_over_sigma"]),
    )


def evaluate_point(p):
    """Evaluate one parameter dict and return its :class:`ResultRow`."""
    ev = evaluate(scenario_from_params(p))
    k, x, r = ev.kernels, ev.state, ev.report
    return ResultRow(
        **{name: float(p[name]) for name in _FLOAT_PARAMS},
        family=Family(p["family"]).value,
        f_a=k.f_a, f_b=k.f_b, theta_comm=k.theta, omega_anti=k.omega,
        r11=x.r11, r22=x.r22, r33=x.r33, r44=x.r44,
        abs_r14=abs(x.r14), abs_r23=abs(x.r23),
        concurrence=r.concurrence, entropy_a=r.entropy_a, entropy_b=r.entropy_b,
        entropy_joint=r.entropy_joint, mutual_information=r.mutual_information,
    )


def _indexed(args):
    index, p = args
    try:
        return evaluate_point(p)
    except ValidationError as exc:
        raise SweepError(f"grid point {index} {p}: {exc}", index, p) from None


def run_sweep(spec, workers=1):
    """Evaluate every grid point; rows come back in grid order."""
    spec.validate()
    points = list(enumerate(spec.grid()))
    if workers <= 1:
        return [_indexed(item) for item in points]
    chunk = max(1, len(points) // (8 * workers))
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_indexed, points, chunksize=chunk))


def _fmt(value):
    if isinstance(value, str):
        return value
    if value == 0.0:
        value = 0.0  # drop the sign of negative zero
    return format(value, ".17g")


def format_csv(rows):
    out = io.StringIO()
    out.write(",".join(COLUMNS) + "\n")
    for row in rows:
        out.write(",".join(_fmt(getattr(row, c)) for c in COLUMNS) + "\n")
    return out.getvalue()


def write_csv(rows, path):
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(format_csv(rows))


def _lin(name, start, stop, steps):
    return Axis.linspace(name, start, stop, steps)


_FIG3_ALPHAS = (0.0, 1.0 / 3.0, 1.0 / math.sqrt(2.0), math.sqrt(8.0) / 3.0, 1.0)
_SPACELIKE = {"L_over_sigma": 10.0, "dtau_over_sigma": 0.0, "tau_a_over_sigma": 0.0}
_LIGHTLIKE = {"L_over_sigma": 1.0, "dtau_over_sigma": 1.0}
_COMMON = {"theta_phase": 0.0, "omega_gap": 1.0, "eta_over_sigma": 1.0}
_GRID2D = 120
_GRID1D = 200


def _spacetime_axes(n=_GRID2D):
    return (_lin("L_over_sigma", 0.1, 12.0, n), _lin("dtau_over_sigma", 0.0, 12.0, n))


def _coupling_axes(n=_GRID1D):
    return (Axis("alpha", _FIG3_ALPHAS), _lin("lambda", 0.0, 5.0, n))


#: name -> (description, fixed parameters, axes factory)
PRESETS = {
    "fig1": (
        "single-detector trade-off: lambda_A = 0, alpha = 1/3, eta/sigma = 1, "
        "axis lambda_B (Omega sigma is accepted but does not affect any output)",
        {"alpha": 1.0 / 3.0, "lambda_a": 0.0, **_COMMON},
        lambda: (_lin("lambda_b", 0.0, 20.0, _GRID1D),),
    ),
    "fig2": (
        "concurrence over L/sigma x dtau/sigma, alpha = 1/sqrt2, lambda = 1",
        {"alpha": 1.0 / math.sqrt(2.0), "lambda_a": 1.0, "lambda_b": 1.0, **_COMMON},
        _spacetime_axes,
    ),
    "fig3a": ("concurrence vs lambda, spacelike L/sigma = 10", {**_COMMON, **_SPACELIKE}, _coupling_axes),
    "fig3b": ("concurrence vs lambda, lightlike L = dtau = sigma", {**_COMMON, **_LIGHTLIKE}, _coupling_axes),
    "fig3c": ("mutual information vs lambda, spacelike L/sigma = 10", {**_COMMON, **_SPACELIKE}, _coupling_axes),
    "fig3d": ("mutual information vs lambda, lightlike L = dtau = sigma", {**_COMMON, **_LIGHTLIKE}, _coupling_axes),
    "fig4": (
        "mutual information over L/sigma x dtau/sigma, alpha = 1/sqrt2, lambda = 1",
        {"alpha": 1.0 / math.sqrt(2.0), "lambda_a": 1.0, "lambda_b": 1.0, **_COMMON},
        _spacetime_axes,
    ),
    "fig5": (
        "mutual information harvested from |gg>: alpha = 0, lambda = 1",
        {"alpha": 0.0, "lambda_a": 1.0, "lambda_b": 1.0, **_COMMON},
        _spacetime_axes,
    ),
    "fig6": (
        "mutual information acquisition, alpha in {0, 1/5000, 1/2000}, spacelike L/sigma = 10",
        {**_COMMON, **_SPACELIKE},
        lambda: (Axis("alpha", (0.0, 1.0 / 5000.0, 1.0 / 2000.0)), _lin("lambda", 0.0, 3.0, _GRID1D)),
    ),
}


def preset_spec(name):
    try:
        _, params, axes = PRESETS[name]
    except KeyError:
        raise ValidationError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None
    merged = dict(DEFAULT_PARAMS)
    merged.update(params)
    return SweepSpec(params=merged, axes=tuple(axes()), preset=name)
