"""Command-line surface: reproduction runs, table generation, grid export.

Subcommands:

* ``sweep``        entanglement characteristics across squeeze parameters
* ``wigner``       phase-space distribution grid over a 2D slice
* ``verify``       run a library invariant suite, exit nonzero on failure
* ``hamiltonian``  export the reconstructed Hamiltonian and its ground-state check

Every global flag can also be set through an environment variable with the
``CVSQUEEZE_`` prefix (flags win over the environment).  Output files embed
the full parameter set that produced them, use a fixed field order, and
serialize floats with 17 significant digits, so identical inputs produce
byte-identical files.  Exit codes: 0 success, 1 check failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import model, phase_space, states, verify

_AXES = ("x1", "x2", "p1", "p2")


def _env(name: str, fallback: str) -> str:
    return os.environ.get(f"CVSQUEEZE_{name}", fallback)


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from exc
    if not value > 0.0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _unit_alpha(text: str) -> float:
    try:
        value = float(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from exc
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError(f"alpha must lie in (0, 1), got {text}")
    return value


def _alpha_list(text: str) -> list[float]:
    values = [_unit_alpha(part) for part in text.split(",") if part.strip()]
    if not values:
        raise argparse.ArgumentTypeError("need at least one alpha")
    return values


def _complex_arg(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from exc


def _range_arg(text: str) -> tuple[float, float]:
    parts = text.split(":")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"range must look like lo:hi, got {text!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"range bounds must be numbers: {text!r}") from exc
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise argparse.ArgumentTypeError(f"range must be finite and ordered, got {text!r}")
    return lo, hi


def _fix_arg(text: str) -> tuple[str, float]:
    name, _, raw = text.partition("=")
    if name not in _AXES or not raw:
        raise argparse.ArgumentTypeError(f"expected AXIS=VALUE with axis in {_AXES}, got {text!r}")
    try:
        return name, float(raw)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"fixed value must be a number: {text!r}") from exc


def _fmt(value) -> str:
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


@dataclass(frozen=True)
class RunConfig:
    hbar: float
    mass: float
    order: int
    trunc: int
    tol: float
    fmt: str
    out: str | None


def _common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--hbar", type=_positive_float, default=float(_env("HBAR", "1.0")), help="reduced Planck constant (default 1)"
    )
    parser.add_argument(
        "--mass", type=_positive_float, default=float(_env("MASS", "1.0")), help="oscillator mass (default 1)"
    )
    parser.add_argument(
        "--order", type=int, default=int(_env("ORDER", "80")), help="quadrature / grid refinement order"
    )
    parser.add_argument(
        "--trunc", type=int, default=int(_env("TRUNC", "20")), help="Fock-space truncation"
    )
    parser.add_argument(
        "--tol", type=_positive_float, default=float(_env("TOL", "1e-6")), help="acceptance tolerance for reported checks"
    )
    parser.add_argument(
        "--format", dest="fmt", choices=("csv", "json"), default=_env("FORMAT", "csv"), help="output format"
    )
    parser.add_argument(
        "--out", default=_env("OUT", "") or None, help="output path (stdout when omitted)"
    )


def _config(args: argparse.Namespace) -> RunConfig:
    if args.fmt not in ("csv", "json"):
        # argparse does not validate defaults, so a bad CVSQUEEZE_FORMAT
        # environment value lands here
        raise ValueError(f"format must be csv or json, got {args.fmt!r}")
    return RunConfig(
        hbar=args.hbar, mass=args.mass, order=args.order, trunc=args.trunc,
        tol=args.tol, fmt=args.fmt, out=args.out,
    )


def _emit_table(params: dict, columns: list[str], rows: list[list], config: RunConfig) -> str:
    if config.fmt == "csv":
        lines = [f"# {key} = {_fmt(value)}" for key, value in params.items()]
        lines.append(",".join(columns))
        lines.extend(",".join(_fmt(cell) for cell in row) for row in rows)
        return "\n".join(lines) + "\n"
    payload = {"params": {k: (str(v) if isinstance(v, complex) else v) for k, v in params.items()},
               "columns": columns,
               "rows": rows}
    return json.dumps(payload, indent=2) + "\n"


def _write(text: str, config: RunConfig) -> int:
    if config.out is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(config.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        print(f"error: cannot write {config.out}: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    config = _config(args)
    geom = states.OscillatorGeometry(a=args.a, b=args.b, hbar=config.hbar)
    rows: list[list] = []
    for k in (1, 2):
        for alpha in args.alphas:
            cov = phase_space.covariance(k, alpha, geom)
            spectrum = phase_space.symplectic_spectrum(phase_space.partial_transpose(cov))
            verdict = phase_space.ppt_separable(cov)
            negativity = phase_space.log_negativity(cov)
            closed = max(-math.log(alpha), 0.0) if k == 2 else 0.0
            rows.append(
                [
                    k,
                    alpha,
                    -0.5 * math.log(alpha),
                    spectrum.values[0],
                    spectrum.values[1],
                    verdict.verdict,
                    negativity,
                    closed,
                    abs(negativity - closed),
                ]
            )
    params = {
        "command": "sweep", "a": args.a, "b": args.b, "hbar": config.hbar,
        "alphas": ",".join(format(a, ".17g") for a in args.alphas),
    }
    columns = [
        "mode", "alpha", "squeeze_xi", "lambda_min_pt", "lambda_max_pt",
        "verdict", "log_negativity", "log_negativity_closed", "residual",
    ]
    return _write(_emit_table(params, columns, rows, config), config)


def cmd_wigner(args: argparse.Namespace) -> int:
    config = _config(args)
    geom = states.OscillatorGeometry(a=args.a, b=args.b, hbar=config.hbar)
    labels = states.DisplacementLabels(z1=args.z1, z2=args.z2)
    axis1, axis2 = args.axes
    if args.n1 < 2 or args.n2 < 2:
        print("error: grid counts must be >= 2", file=sys.stderr)
        return 2

    gaussian = states.unshifted_gaussian(args.k, args.alpha, geom)
    _, evaluator = phase_space.wigner_gaussian(gaussian, config.hbar)
    shift = states.shift_params(args.k, args.alpha, geom, labels)
    offsets = {"x1": shift.y1, "x2": shift.y2, "p1": shift.q1, "p2": shift.q2}

    coords = {name: float(value) for name, value in args.fix}
    for name in _AXES:
        coords.setdefault(name, 0.0)

    grid1 = np.linspace(args.range1[0], args.range1[1], args.n1)
    grid2 = np.linspace(args.range2[0], args.range2[1], args.n2)
    rows: list[list] = []
    for v1 in grid1:
        point = dict(coords)
        point[axis1] = float(v1)
        for v2 in grid2:
            point[axis2] = float(v2)
            value = float(
                evaluator(
                    point["x1"] - offsets["x1"],
                    point["x2"] - offsets["x2"],
                    point["p1"] - offsets["p1"],
                    point["p2"] - offsets["p2"],
                )
            )
            rows.append([float(v1), float(v2), value])
    params = {
        "command": "wigner", "mode": args.k, "alpha": args.alpha,
        "a": args.a, "b": args.b, "hbar": config.hbar,
        "z1": args.z1, "z2": args.z2,
        "axis1": axis1, "axis2": axis2,
        "range1": f"{args.range1[0]:.17g}:{args.range1[1]:.17g}",
        "range2": f"{args.range2[0]:.17g}:{args.range2[1]:.17g}",
        "n1": args.n1, "n2": args.n2,
    }
    for name in _AXES:
        if name not in (axis1, axis2):
            params[f"fixed_{name}"] = coords[name]
    return _write(_emit_table(params, [axis1, axis2, "wigner"], rows, config), config)


def cmd_verify(args: argparse.Namespace) -> int:
    results = verify.run_suite(args.suite)
    for result in results:
        print(result.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def cmd_hamiltonian(args: argparse.Namespace) -> int:
    config = _config(args)
    spec = model.OscillatorSpec(
        omega1=args.omega1, omega2=args.omega2, mass=config.mass, hbar=config.hbar
    )
    quad = model.hamiltonian_quadratic(args.alpha, spec, args.z1, args.z2)
    ladder = model.hamiltonian_fock(args.alpha, spec, args.z1, args.z2, config.trunc, "ladder")
    expanded = model.hamiltonian_fock(args.alpha, spec, args.z1, args.z2, config.trunc, "expanded")
    path_gap = float(np.abs(ladder.interior() - expanded.interior()).max())
    hermiticity = float(np.abs(ladder.matrix - ladder.matrix.conj().T).max())

    a, b = spec.inverse_lengths()
    geom = states.OscillatorGeometry(a=a, b=b, hbar=config.hbar)
    grid_points = max(81, 2 * config.order + 1)
    ground = model.ground_state_energy_check(
        args.alpha, spec, geom, args.z1, args.z2, grid_points=grid_points
    )

    diag = np.real(np.diag(ladder.matrix))
    payload = {
        "params": {
            "command": "hamiltonian",
            "alpha": args.alpha,
            "omega1": args.omega1,
            "omega2": args.omega2,
            "mass": config.mass,
            "hbar": config.hbar,
            "z1": str(args.z1),
            "z2": str(args.z2),
            "n_trunc": config.trunc,
            "tolerance": config.tol,
        },
        "geometry": {"a": a, "b": b},
        "quadratic": {
            "q": [[float(v) for v in row] for row in quad.q],
            "linear": [float(v) for v in quad.linear],
            "constant": float(quad.constant),
        },
        "fock": {
            "n_trunc": config.trunc,
            "path_agreement_interior": path_gap,
            "hermiticity_defect": hermiticity,
            "diagonal_head": [float(v) for v in diag[:6]],
        },
        "ground_state": {
            "energy": ground.energy,
            "expected": ground.expected,
            "residual": ground.residual,
            "grid_points": ground.grid_points,
            "within_tolerance": bool(abs(ground.energy - ground.expected) <= config.tol),
        },
    }
    text = json.dumps(payload, indent=2) + "\n"
    status = _write(text, config)
    if status != 0:
        return status
    return 0 if payload["ground_state"]["within_tolerance"] and path_gap <= config.tol else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cvsqueeze",
        description="Bipartite squeezed coherent states: entanglement tables, "
        "Wigner grids, invariant suites, and the reconstructed Hamiltonian.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="entanglement sweep over squeeze parameters")
    _common_flags(sweep)
    sweep.add_argument("--alphas", type=_alpha_list, required=True, help="comma-separated alphas in (0,1)")
    sweep.add_argument("--a", type=_positive_float, default=1.0, help="inverse oscillator length, first mode")
    sweep.add_argument("--b", type=_positive_float, default=1.0, help="inverse oscillator length, second mode")
    sweep.set_defaults(handler=cmd_sweep)

    wigner = sub.add_parser("wigner", help="export a 2D slice of the Wigner distribution")
    _common_flags(wigner)
    wigner.add_argument("--k", type=int, choices=(1, 2), default=2, help="squeezing mode tag")
    wigner.add_argument("--alpha", type=_unit_alpha, required=True)
    wigner.add_argument("--a", type=_positive_float, default=1.0)
    wigner.add_argument("--b", type=_positive_float, default=1.0)
    wigner.add_argument("--z1", type=_complex_arg, default=0j, help="first displacement label, e.g. 0.3+0.1j")
    wigner.add_argument("--z2", type=_complex_arg, default=0j)
    wigner.add_argument(
        "--axes", type=lambda t: tuple(t.split(",")), default=("x1", "x2"),
        help="two comma-separated axes to vary, from x1,x2,p1,p2",
    )
    wigner.add_argument("--range1", type=_range_arg, default=(-3.0, 3.0), help="lo:hi for the first axis")
    wigner.add_argument("--range2", type=_range_arg, default=(-3.0, 3.0), help="lo:hi for the second axis")
    wigner.add_argument("--n1", type=int, default=41)
    wigner.add_argument("--n2", type=int, default=41)
    wigner.add_argument(
        "--fix", type=_fix_arg, action="append", default=[],
        help="fix a non-varied coordinate, e.g. --fix p1=0.5 (repeatable; default 0)",
    )
    wigner.set_defaults(handler=cmd_wigner)

    ver = sub.add_parser("verify", help="run a library invariant suite")
    _common_flags(ver)
    ver.add_argument("suite", choices=verify.suite_names())
    ver.set_defaults(handler=cmd_verify)

    ham = sub.add_parser("hamiltonian", help="export the reconstructed Hamiltonian")
    _common_flags(ham)
    ham.add_argument("--alpha", type=_unit_alpha, required=True)
    ham.add_argument("--omega1", type=_positive_float, default=1.0)
    ham.add_argument("--omega2", type=_positive_float, default=1.0)
    ham.add_argument("--z1", type=_complex_arg, default=0j)
    ham.add_argument("--z2", type=_complex_arg, default=0j)
    ham.set_defaults(handler=cmd_hamiltonian)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "axes", None) is not None and args.command == "wigner":
        axes = args.axes
        if len(axes) != 2 or any(a not in _AXES for a in axes) or axes[0] == axes[1]:
            parser.error(f"--axes must name two distinct axes from {_AXES}")
    try:
        return args.handler(args)
    except (ValueError, phase_space.SpectrumPairingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
