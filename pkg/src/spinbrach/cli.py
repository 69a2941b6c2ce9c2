"""Command-line front end.

Every subcommand writes JSON or CSV to stdout (or ``--output``). Exit codes:
0 on success, 2 for invalid arguments, 3 when the requested transfer is
geometrically impossible.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from .brachistochrone import TransferProblem, optimal_transfer, sweep_tilt, transfer_at_tilt
from .errors import SpinGeometryError
from .evolution import FieldSpec, clamp_polar, trace
from .fubini import manifold_radius, metric_tensor_closed, metric_tensor_numeric
from .halfint import HalfInt, as_projection, as_spin
from .spin import spin_operators

EXIT_USAGE = 2
EXIT_INFEASIBLE = 3

ANGLE_ARGS = ("theta", "phi", "field_theta", "field_phi", "theta_f", "phi_f")


def _spin_arg(text: str) -> HalfInt:
    try:
        return as_spin(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _projection_arg(text: str) -> HalfInt:
    try:
        return HalfInt.of(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _precision_arg(text: str) -> int:
    p = int(text)
    if not 4 <= p <= 17:
        raise argparse.ArgumentTypeError(f"precision must be in [4, 17], got {p}")
    return p


def _positive(text: str) -> float:
    x = float(text)
    if not x > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return x


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    def d(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--gamma", type=_positive, default=d(1.0),
                        help="Fubini-Study scale factor (default 1)")
    parser.add_argument("--format", choices=("json", "csv"), default=d(None),
                        help="output format (default depends on the command)")
    parser.add_argument("--precision", type=_precision_arg, default=d(12),
                        help="decimal digits in the output, 4..17 (default 12)")
    parser.add_argument("--output", default=d(None), help="write to this file instead of stdout")
    parser.add_argument("--degrees", action="store_true", default=d(False),
                        help="read angle arguments in degrees")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinbrach",
        description="Rotational-manifold geometry and magnetic-field brachistochrone for spin s.",
    )
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("operators", parents=[common], help="print Sx, Sy, Sz")
    p.add_argument("--s", type=_spin_arg, required=True)

    p = sub.add_parser("metric", parents=[common], help="Fubini-Study metric of a rotational manifold")
    p.add_argument("--s", type=_spin_arg, required=True)
    p.add_argument("--m", type=_projection_arg, required=True)
    p.add_argument("--theta", type=float, default=None, help="polar angle (default pi/2)")
    p.add_argument("--phi", type=float, default=0.0)

    p = sub.add_parser("evolve", parents=[common], help="trace evolution of |m> in a static field")
    p.add_argument("--s", type=_spin_arg, required=True)
    p.add_argument("--m", type=_projection_arg, required=True)
    p.add_argument("--field-theta", type=float, required=True)
    p.add_argument("--field-phi", type=float, default=0.0)
    p.add_argument("--omega", type=_positive, default=1.0)
    p.add_argument("--t", type=float, required=True, help="final time")
    p.add_argument("--steps", type=int, default=100, help="number of intervals in [0, t]")

    p = sub.add_parser("brach", parents=[common], help="fastest transfer |m> -> psi_m(theta_f, phi_f)")
    p.add_argument("--s", type=_spin_arg, required=True)
    p.add_argument("--m", type=_projection_arg, required=True)
    p.add_argument("--theta-f", type=float, required=True)
    p.add_argument("--phi-f", type=float, default=0.0)
    p.add_argument("--omega", type=_positive, default=1.0)
    p.add_argument("--field-theta", type=float, default=None,
                   help="fix the field tilt instead of optimizing it")

    p = sub.add_parser("sweep", parents=[common], help="transfer time versus field tilt")
    p.add_argument("--s", type=_spin_arg, required=True)
    p.add_argument("--m", type=_projection_arg, required=True)
    p.add_argument("--theta-f", type=float, required=True)
    p.add_argument("--phi-f", type=float, default=0.0)
    p.add_argument("--omega", type=_positive, default=1.0)
    p.add_argument("--grid", type=int, default=101)
    return parser


def _num(x: float, precision: int) -> float:
    return round(float(x), precision) + 0.0  # + 0.0 folds -0.0


def _complex_matrix(a: np.ndarray, precision: int) -> list:
    return [[[_num(z.real, precision), _num(z.imag, precision)] for z in row] for row in a]


def cmd_operators(args) -> tuple[object, str]:
    ops = spin_operators(args.s)
    p = args.precision
    if args.format == "csv":
        rows = []
        for name, mat in zip(("sx", "sy", "sz"), ops):
            for i, j in np.ndindex(mat.shape):
                rows.append({"operator": name, "row": i, "col": j,
                             "re": _num(mat[i, j].real, p), "im": _num(mat[i, j].imag, p)})
        return rows, "csv"
    return {
        "s": str(args.s),
        "dim": ops.dim,
        "sx": _complex_matrix(ops.sx, p),
        "sy": _complex_matrix(ops.sy, p),
        "sz": _complex_matrix(ops.sz, p),
    }, "json"


def cmd_metric(args) -> tuple[object, str]:
    s = args.s
    m = as_projection(s, args.m)
    theta = 0.5 * math.pi if args.theta is None else args.theta
    num = metric_tensor_numeric(s, m, theta, args.phi, args.gamma)
    closed = metric_tensor_closed(s, m, theta, args.gamma)
    p = args.precision
    return {
        "s": str(s),
        "m": str(m),
        "theta": _num(theta, p),
        "phi": _num(args.phi, p),
        "gamma": _num(args.gamma, p),
        "g_tt": _num(num.g_tt, p),
        "g_tp": _num(num.g_tp, p),
        "g_pp": _num(num.g_pp, p),
        "closed_form": {
            "g_tt": _num(closed.g_tt, p),
            "g_tp": _num(closed.g_tp, p),
            "g_pp": _num(closed.g_pp, p),
        },
        "max_abs_dev": _num(num.max_abs_dev(closed), p),
        "radius": _num(manifold_radius(s, m, args.gamma), p),
    }, "json"


def cmd_evolve(args) -> tuple[object, str]:
    s = args.s
    m = as_projection(s, args.m)
    if args.steps < 1:
        raise ValueError(f"--steps must be at least 1, got {args.steps}")
    if args.t < 0:
        raise ValueError(f"--t must be non-negative, got {args.t}")
    field = FieldSpec(args.omega, args.field_theta, args.field_phi)
    times = [args.t * k / args.steps for k in range(args.steps + 1)]
    p = args.precision
    rows = []
    for smp in trace(s, m, field, times):
        row = {"t": _num(smp.t, p)}
        for i, z in enumerate(smp.state):
            row[f"re_{i}"] = _num(z.real, p)
            row[f"im_{i}"] = _num(z.imag, p)
        row["predicted_theta"] = _num(smp.predicted_theta, p)
        row["predicted_phi"] = _num(smp.predicted_phi, p)
        row["residency_fidelity"] = _num(smp.residency_fidelity, p)
        row["phase_beta"] = _num(smp.phase_beta, p)
        rows.append(row)
    return rows, "csv"


def _solution_record(problem: TransferProblem, sol, p: int) -> dict:
    return {
        "s": str(problem.s),
        "m": str(problem.m),
        "theta_f": _num(problem.theta_f, p),
        "phi_f": _num(problem.phi_f, p),
        "omega": _num(problem.omega, p),
        "gamma": _num(problem.gamma, p),
        "field": {"theta": _num(sol.field.theta, p), "phi": _num(sol.field.phi, p)},
        "time": _num(sol.time, p),
        "path_length": _num(sol.path_length, p),
        "speed": _num(sol.speed, p),
        "arc_angle": _num(sol.arc_angle, p),
        "circle_radius": _num(sol.circle_radius, p),
    }


def cmd_brach(args) -> tuple[object, str]:
    problem = TransferProblem(args.s, args.m, args.theta_f, args.phi_f, args.omega, args.gamma)
    if args.field_theta is None:
        sol = optimal_transfer(problem)
    else:
        tilt = clamp_polar(args.field_theta)
        if not 0.0 <= tilt <= math.pi:
            raise ValueError(f"--field-theta must lie in [0, pi], got {args.field_theta}")
        sol = transfer_at_tilt(problem, tilt)
    return _solution_record(problem, sol, args.precision), "json"


def cmd_sweep(args) -> tuple[object, str]:
    problem = TransferProblem(args.s, args.m, args.theta_f, args.phi_f, args.omega, args.gamma)
    p = args.precision
    rows = [{k: _num(v, p) for k, v in row._asdict().items()} for row in sweep_tilt(problem, args.grid)]
    return rows, "csv"


COMMANDS = {
    "operators": cmd_operators,
    "metric": cmd_metric,
    "evolve": cmd_evolve,
    "brach": cmd_brach,
    "sweep": cmd_sweep,
}


def _flatten(record: dict, prefix: str = "") -> dict:
    flat = {}
    for key, value in record.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, f"{name}."))
        elif isinstance(value, list):
            flat[name] = json.dumps(value)
        else:
            flat[name] = value
    return flat


def render(result, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result, indent=2) + "\n"
    rows = result if isinstance(result, list) else [result]
    rows = [_flatten(r) for r in rows]
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return buf.getvalue()


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.degrees:
        for name in ANGLE_ARGS:
            if getattr(args, name, None) is not None:
                setattr(args, name, math.radians(getattr(args, name)))
    try:
        result, default_fmt = COMMANDS[args.command](args)
    except SpinGeometryError as exc:
        print(f"spinbrach {args.command}: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        print(f"spinbrach {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(result, args.format or default_fmt)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0
