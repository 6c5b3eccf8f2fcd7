"""Command-line front end.

Exit codes: 0 success, 1 validation error, 2 verification failure,
3 I/O error.
"""

import argparse
import math
import sys

from .errors import ValidationError
from .sweep import (
    DEFAULT_PARAMS,
    PRESETS,
    Axis,
    SweepSpec,
    evaluate_point,
    format_csv,
    preset_spec,
    run_sweep,
)
from .verify import GRIDS, run_verification

EXIT_OK, EXIT_VALIDATION, EXIT_VERIFY, EXIT_IO = 0, 1, 2, 3

#: config/flag key -> fixed parameter key
_PARAM_KEYS = {
    "alpha": "alpha",
    "theta": "theta_phase",
    "omega-gap": "omega_gap",
    "lambda-a": "lambda_a",
    "lambda-b": "lambda_b",
    "eta": "eta_over_sigma",
    "L": "L_over_sigma",
    "dtau": "dtau_over_sigma",
    "tau-a": "tau_a_over_sigma",
    "family": "family",
}
_OTHER_KEYS = {"lambda", "sweep", "preset", "out", "workers"}


def parse_config(text):
    """Parse ``key=value`` lines; ``#`` starts a comment. ``sweep`` may repeat."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValidationError(f"config line {lineno}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.replace("_", "-")
        if key not in _PARAM_KEYS and key not in _OTHER_KEYS:
            raise ValidationError(f"config line {lineno}: unknown key {key!r}")
        if key == "sweep":
            values.setdefault("sweep", []).append(value)
        else:
            values[key] = value
    return values


def build_parser():
    presets = "\n".join(f"  {name}: {desc}" for name, (desc, _, _) in PRESETS.items())
    p = argparse.ArgumentParser(
        prog="udwdelta",
        description=(
            "Final state and correlations of two delta-switched detectors in the "
            "Minkowski vacuum. Lengths and times are in units of the smearing width."
        ),
        epilog="presets:\n" + presets,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--config", metavar="PATH", help="key=value configuration file")
    p.add_argument("--alpha", type=float)
    p.add_argument("--theta", type=float, help="initial relative phase in [0, 2pi)")
    p.add_argument("--omega-gap", type=float, help="energy gap Omega*sigma (both detectors)")
    p.add_argument("--lambda-a", type=float)
    p.add_argument("--lambda-b", type=float)
    p.add_argument("--lambda", dest="lambda_", type=float, help="sets both couplings")
    p.add_argument("--eta", type=float, help="switching weight eta/sigma")
    p.add_argument("--L", type=float, help="separation L/sigma")
    p.add_argument("--dtau", type=float, help="switching delay dtau/sigma >= 0")
    p.add_argument("--tau-a", type=float, help="switching time of A, tau_A/sigma")
    p.add_argument("--family", choices=("gg", "ge"))
    p.add_argument("--sweep", action="append", metavar="AXIS:START:STOP:STEPS",
                   help="sweep axis (repeat for a second axis)")
    p.add_argument("--preset", choices=sorted(PRESETS))
    p.add_argument("--out", metavar="PATH", help="CSV output path (default: stdout)")
    p.add_argument("--workers", type=int)
    p.add_argument("--verify", action="store_true",
                   help="check closed forms against the quadrature and matrix oracles")
    p.add_argument("--grid", choices=sorted(GRIDS), default="default",
                   help="verification grid")
    p.add_argument("--inject-fault", type=float, default=0.0, help=argparse.SUPPRESS)
    return p


def _float(key, value):
    try:
        return float(value)
    except ValueError:
        raise ValidationError(f"{key}: expected a number, got {value!r}") from None


def _resolve(args):
    """Merge preset < config file < flags into a spec, output path and workers."""
    config = {}
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            config = parse_config(fh.read())
    flags = {
        "alpha": args.alpha, "theta": args.theta, "omega-gap": args.omega_gap,
        "lambda-a": args.lambda_a, "lambda-b": args.lambda_b, "eta": args.eta,
        "L": args.L, "dtau": args.dtau, "tau-a": args.tau_a, "family": args.family,
        "lambda": args.lambda_, "preset": args.preset, "out": args.out,
        "workers": args.workers, "sweep": args.sweep,
    }
    merged = dict(config)
    merged.update({k: v for k, v in flags.items() if v is not None})

    if merged.get("preset"):
        spec = preset_spec(merged["preset"])
        params, axes = dict(spec.params), spec.axes
    else:
        params, axes = dict(DEFAULT_PARAMS), ()

    # lambda applies first so that per-detector keys can refine it
    if "lambda" in merged:
        params["lambda_a"] = params["lambda_b"] = _float("lambda", merged["lambda"])
    for key, pkey in _PARAM_KEYS.items():
        if key in merged:
            params[pkey] = merged[key] if key == "family" else _float(key, merged[key])
    if merged.get("sweep"):
        axes = tuple(Axis.parse(text) for text in merged["sweep"])
    workers = int(_float("workers", merged.get("workers", 1)))
    if workers < 1:
        raise ValidationError("workers must be >= 1")
    return SweepSpec(params=params, axes=axes, preset=merged.get("preset")), merged.get("out"), workers


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.verify:
        results = run_verification(args.grid, f_perturbation=args.inject_fault)
        return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY
    try:
        spec, out, workers = _resolve(args)
        if spec.axes:
            rows = run_sweep(spec, workers=workers)
        else:
            rows = [evaluate_point(spec.params)]
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    text = format_csv(rows)
    try:
        if out:
            with open(out, "w", encoding="ascii", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
