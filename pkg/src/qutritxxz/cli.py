"""Command-line interface.

Subcommands: spectrum, negativity, sweep, figure, critical, validate.
Exit codes: 0 success, 2 invalid arguments, 3 numerical failure,
4 validation failure.
"""

import argparse
import json
import sys

import numpy as np

from . import __version__
from .entanglement import InvalidState, negativity
from .matkernel import NoConvergence, NotHermitian, hermitian_eig
from .model import (
    HF_RANGE,
    DegenerateCoupling,
    DomainError,
    ModelParams,
    analytic_spectrum,
    effective_coupling,
    hamiltonian_tensor,
)
from .output import emit_csv, emit_svg
from .sweeps import (
    CSV_COLUMNS,
    FIGURE_NAMES,
    ONSET_THRESHOLD,
    NoOnset,
    SweepError,
    SweepSpec,
    detect_critical_dz,
    detect_critical_field,
    figure_preset,
    run_sweep,
)
from .thermal import gibbs, ground_state_mixture, partition_function
from .validate import validate

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3
EXIT_VALIDATION = 4

_PARAM_KEYS = ("R", "B", "Dz", "gamma", "T", "J")


def _add_common(parser):
    parser.add_argument("--R", type=float, default=None, help="HF coupling distance")
    parser.add_argument("--J", type=float, default=None,
                        help="direct exchange coupling (mutually exclusive with --R)")
    parser.add_argument("--B", type=float, default=None, help="uniform magnetic field")
    parser.add_argument("--Dz", type=float, default=None, help="z-axis DM strength")
    parser.add_argument("--gamma", type=float, default=None, help="anisotropy (default 1)")
    parser.add_argument("--T", type=float, default=None, help="temperature (k_B = 1)")
    parser.add_argument("--config", default=None, help="JSON config file; flags override it")
    parser.add_argument("--out", default=None, help="output file (default stdout)")
    parser.add_argument("--svg", default=None, help="also write an SVG chart here")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qutritxxz",
        description="Thermal entanglement (negativity) of a two-qutrit XXZ pair "
                    "with z-axis DM interaction and Herring-Flicker coupling",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="closed-form spectrum plus numeric cross-check")
    _add_common(sp)

    ng = sub.add_parser("negativity", help="thermal negativity at a single point")
    _add_common(ng)

    sw = sub.add_parser("sweep", help="vary one parameter over a grid")
    _add_common(sw)
    sw.add_argument("--vary", required=True, choices=("T", "B", "Dz", "R"))
    sw.add_argument("--from", dest="start", type=float, required=True)
    sw.add_argument("--to", dest="stop", type=float, required=True)
    sw.add_argument("--steps", type=int, required=True)

    fg = sub.add_parser("figure", help="published figure sweep presets")
    _add_common(fg)
    fg.add_argument("name", choices=FIGURE_NAMES)

    cr = sub.add_parser("critical", help="critical-point detection")
    _add_common(cr)
    cr.add_argument("--axis", required=True, choices=("B", "Dz"),
                    help="B: T=0 ground-level crossings; Dz: negativity onset at --T")
    cr.add_argument("--max", dest="axis_max", type=float, default=None,
                    help="scan limit (default 5 for B, 10 for Dz)")
    cr.add_argument("--threshold", type=float, default=ONSET_THRESHOLD,
                    help="onset negativity threshold for --axis Dz")

    va = sub.add_parser("validate", help="run the full cross-validation suite")
    va.add_argument("--format", choices=("text", "json"), default="text")
    va.add_argument("--fast", action="store_true", help="reduced draw counts")
    va.add_argument("--out", default=None)
    return parser


def _load_config(path):
    with open(path) as fh:
        cfg = json.load(fh)
    unknown = set(cfg) - set(_PARAM_KEYS)
    if unknown:
        raise DomainError(f"unknown config keys: {sorted(unknown)}")
    return cfg


def _resolve(args):
    """Merge config file and flags into (ModelParams, T); flags win."""
    cfg = _load_config(args.config) if args.config else {}

    def pick(key, default):
        flag = getattr(args, key)
        if flag is not None:
            return flag
        return cfg.get(key, default)

    r_val, j_val = pick("R", None), pick("J", None)
    if r_val is not None and j_val is not None:
        raise DomainError("--R and --J are mutually exclusive")
    if j_val is not None:
        p = ModelParams(R=1.0, gamma=pick("gamma", 1.0), Dz=pick("Dz", 0.0),
                        B=pick("B", 0.0), j_override=j_val)
    else:
        p = ModelParams(R=r_val if r_val is not None else 0.5,
                        gamma=pick("gamma", 1.0), Dz=pick("Dz", 0.0), B=pick("B", 0.0))
        if not p.in_hf_window():
            lo, hi = HF_RANGE
            print(f"warning: R = {p.R} outside the HF validity window ({lo}, {hi}); "
                  "J(R) is essentially zero there", file=sys.stderr)
    return p, pick("T", 1.0)


def _write(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _cmd_spectrum(args):
    p, _ = _resolve(args)
    spec = analytic_spectrum(p)
    numeric = hermitian_eig(hamiltonian_tensor(p)).eigenvalues
    gap = float(np.max(np.abs(spec.sorted_eigenvalues() - numeric)))
    r, theta, _ = effective_coupling(p)
    if args.format == "json":
        payload = {
            "params": {"R": p.R, "gamma": p.gamma, "Dz": p.Dz, "B": p.B,
                       "J": p.J, "r": r, "theta": theta},
            "eigenvalues": {f"eps{i + 1}": float(e) for i, e in enumerate(spec.eps)},
            "chi1": spec.chi1, "chi2": spec.chi2,
            "numeric_sorted": [float(x) for x in numeric],
            "max_gap_vs_numeric": gap,
        }
        _write(json.dumps(payload, indent=2), args.out)
    else:
        lines = ["label,eigenvalue"]
        lines += [f"eps{i + 1},{e!r}" for i, e in enumerate(spec.eps)]
        lines.append(f"max_gap_vs_numeric,{gap!r}")
        _write("\n".join(lines), args.out)
    return EXIT_OK


def _point_row(p, T):
    r, theta, _ = effective_coupling(p)
    if T == 0.0:
        state = ground_state_mixture(p)
        z = state.Z
    else:
        state = gibbs(p, T)
        z = partition_function(p, T)
    ground = float(hermitian_eig(hamiltonian_tensor(p)).eigenvalues[0])
    n = negativity(state.rho).value
    return {"grid_param": "T", "grid_value": T, "T": T, "B": p.B, "Dz": p.Dz,
            "R": p.R, "gamma": p.gamma, "J": p.J, "r": r, "theta": theta,
            "Z": z, "ground_energy": ground, "negativity": n}


def _cmd_negativity(args):
    p, t = _resolve(args)
    if t < 0:
        raise DomainError(f"temperature must be >= 0, got {t}")
    row = _point_row(p, t)
    if args.format == "json":
        _write(json.dumps(row, indent=2), args.out)
    else:
        header = ",".join(CSV_COLUMNS)
        values = ",".join(repr(row[c]) if isinstance(row[c], float) else str(row[c])
                          for c in CSV_COLUMNS)
        _write(header + "\n" + values, args.out)
    return EXIT_OK


def _emit(results, args):
    if args.out:
        emit_csv(results, args.out)
    else:
        lines = [",".join(CSV_COLUMNS)]
        for res in results:
            for row in res.rows:
                lines.append(",".join(repr(row[c]) if isinstance(row[c], float)
                                      else str(row[c]) for c in CSV_COLUMNS))
        print("\n".join(lines))
    if args.svg:
        y = "J" if results[0].rows and results[0].meta.get("label") == "J(R)" else "negativity"
        emit_svg(results, args.svg, y_column=y)


def _cmd_sweep(args):
    p, t = _resolve(args)
    spec = SweepSpec(vary=args.vary, start=args.start, stop=args.stop,
                     steps=args.steps, fixed=p, T=t)
    _emit([run_sweep(spec)], args)
    return EXIT_OK


def _cmd_figure(args):
    _emit(figure_preset(args.name), args)
    return EXIT_OK


def _cmd_critical(args):
    p, t = _resolve(args)
    if args.axis == "B":
        b_max = args.axis_max if args.axis_max is not None else 5.0
        points = detect_critical_field(p, b_max=b_max)
        payload = [{"parameter": cp.parameter, "value": cp.value, "kind": cp.kind,
                    "bracket": list(cp.bracket)} for cp in points]
        _write(json.dumps(payload, indent=2), args.out)
        return EXIT_OK
    if t <= 0:
        raise DomainError("--axis Dz requires a positive --T")
    dz_max = args.axis_max if args.axis_max is not None else 10.0
    try:
        cp = detect_critical_dz(p, t, dz_max=dz_max, threshold=args.threshold)
    except NoOnset as exc:
        _write(json.dumps({"error": "NoOnset", "detail": str(exc)}, indent=2), args.out)
        return EXIT_OK
    _write(json.dumps({"parameter": cp.parameter, "value": cp.value, "kind": cp.kind,
                       "bracket": list(cp.bracket)}, indent=2), args.out)
    return EXIT_OK


def _cmd_validate(args):
    report = validate(fast=args.fast)
    if args.format == "json":
        _write(json.dumps(report, indent=2), args.out)
    else:
        lines = []
        for c in report["checks"]:
            status = "PASS" if c["passed"] else "FAIL"
            line = (f"{status}  {c['name']}  residual={c['worst_residual']:.3e}  "
                    f"tol={c['tolerance']:.0e}")
            if c["detail"]:
                line += f"  ({c['detail']})"
            lines.append(line)
        lines.append(f"{'ALL CHECKS PASSED' if report['passed'] else 'VALIDATION FAILED'} "
                     f"in {report['elapsed_seconds']:.1f}s")
        _write("\n".join(lines), args.out)
    return EXIT_OK if report["passed"] else EXIT_VALIDATION


_COMMANDS = {
    "spectrum": _cmd_spectrum,
    "negativity": _cmd_negativity,
    "sweep": _cmd_sweep,
    "figure": _cmd_figure,
    "critical": _cmd_critical,
    "validate": _cmd_validate,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (DomainError, DegenerateCoupling, InvalidState, ValueError,
            OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NoConvergence, NotHermitian, SweepError, FloatingPointError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
