"""Command-line front end: single points, sector spectra, and named sweeps.

Exit codes: 0 on success, 2 for usage errors (bad flags or values), 1 for
numerical or i/o failures.  Sweep output is CSV (default) or JSON with the
numbers printed to 9 significant digits either way.
"""

import argparse
import contextlib
import json
import sys

from .eigen import NumericalError, eigh
from .model import GEOMETRIES, ModelParams, build_hamiltonian
from .quantum_state import reduce_to_sites, thermal_density_matrix, von_neumann_entropy
from .sweep import (
    Axis,
    SweepResult,
    SweepRow,
    SweepSpec,
    run_sweep,
    u_site_layout,
)

CSV_HEADER = "geometry,u0_over_t,u_over_t,kT_over_t,entropy_bits,ground_energy,degenerate,gap"

SCENARIOS = {
    "fig2a": SweepSpec(
        axis1=Axis("u0", -30.0, 30.0, 121), geometries=("chain",), L=2, u=0.0, kT=0.0
    ),
    "fig2b": SweepSpec(
        axis1=Axis("u0", -200.0, 200.0, 121),
        geometries=("chain", "ring"), L=3, u=80.0, kT=0.0,
    ),
    "fig2c": SweepSpec(
        axis1=Axis("u0", -200.0, 100.0, 121),
        geometries=("chain", "ring"), L=3, u=-80.0, kT=0.0,
    ),
    "fig3a": SweepSpec(
        axis1=Axis("u0", -100.0, 100.0, 81), axis2=Axis("u", -100.0, 100.0, 81),
        geometries=("ring",), L=3, kT=0.0,
    ),
    "fig3b": SweepSpec(
        axis1=Axis("u0", -100.0, 100.0, 81), axis2=Axis("u", -100.0, 100.0, 81),
        geometries=("ring",), L=3, kT=10.0,
    ),
    "fig3c": SweepSpec(
        axis1=Axis("u0", -100.0, 100.0, 81), axis2=Axis("u", -100.0, 100.0, 81),
        geometries=("ring",), L=3, kT=80.0,
    ),
}


def _g9(value: float) -> str:
    return "%.9g" % value


def _round9(value: float) -> float:
    return float(_g9(value))


def format_row(row: SweepRow) -> str:
    return ",".join(
        (
            row.geometry,
            _g9(row.u0_over_t),
            _g9(row.u_over_t),
            _g9(row.kT_over_t),
            _g9(row.entropy_bits),
            _g9(row.ground_energy),
            "true" if row.degenerate else "false",
            _g9(row.gap),
        )
    )


def write_sweep_csv(result: SweepResult, stream) -> None:
    stream.write(CSV_HEADER + "\n")
    for row in result.rows:
        stream.write(format_row(row) + "\n")


def read_sweep_csv(stream) -> tuple:
    """Parse rows written by write_sweep_csv; ValueError names the bad line."""
    header = stream.readline().rstrip("\n")
    if header != CSV_HEADER:
        raise ValueError(f"unexpected CSV header: {header!r}")
    rows = []
    for lineno, line in enumerate(stream, start=2):
        line = line.rstrip("\n")
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != 8:
            raise ValueError(f"line {lineno}: expected 8 fields, got {len(parts)}")
        if parts[0] not in GEOMETRIES:
            raise ValueError(f"line {lineno}: unknown geometry {parts[0]!r}")
        if parts[6] not in ("true", "false"):
            raise ValueError(f"line {lineno}: degenerate must be true/false, got {parts[6]!r}")
        try:
            numbers = [float(p) for p in parts[1:6]] + [float(parts[7])]
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        rows.append(
            SweepRow(
                geometry=parts[0],
                u0_over_t=numbers[0],
                u_over_t=numbers[1],
                kT_over_t=numbers[2],
                entropy_bits=numbers[3],
                ground_energy=numbers[4],
                degenerate=parts[6] == "true",
                gap=numbers[5],
            )
        )
    return tuple(rows)


def write_sweep_json(result: SweepResult, stream, scenario=None) -> None:
    spec = result.spec

    def axis_dict(axis):
        if axis is None:
            return None
        return {
            "name": axis.name, "start": axis.start, "stop": axis.stop, "count": axis.count,
        }

    payload = {
        "config": {
            "scenario": scenario,
            "L": spec.L,
            "geometries": sorted(spec.geometries),
            "u0": spec.u0,
            "u": spec.u,
            "kT": spec.kT,
            "n_up": spec.n_up,
            "n_down": spec.n_down,
            "axis1": axis_dict(spec.axis1),
            "axis2": axis_dict(spec.axis2),
        },
        "rows": [
            {
                "geometry": row.geometry,
                "u0_over_t": _round9(row.u0_over_t),
                "u_over_t": _round9(row.u_over_t),
                "kT_over_t": _round9(row.kT_over_t),
                "entropy_bits": _round9(row.entropy_bits),
                "ground_energy": _round9(row.ground_energy),
                "degenerate": row.degenerate,
                "gap": _round9(row.gap),
            }
            for row in result.rows
        ],
    }
    json.dump(payload, stream, indent=1)
    stream.write("\n")


def _parse_axis(text: str) -> Axis:
    parts = text.split(":")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(
            f"axis must look like name:start:stop:count, got {text!r}"
        )
    try:
        return Axis(parts[0], float(parts[1]), float(parts[2]), int(parts[3]))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _parse_floats(text: str) -> tuple:
    try:
        return tuple(float(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _parse_geometries(text: str) -> tuple:
    parts = tuple(p.strip() for p in text.split(",") if p.strip())
    for p in parts:
        if p not in GEOMETRIES:
            raise argparse.ArgumentTypeError(f"unknown geometry {p!r}")
    return parts


def _params_from(args) -> ModelParams:
    u_site = args.u_site
    if u_site is None:
        u_site = u_site_layout(args.L, args.u0, args.u)
    return ModelParams(
        L=args.L,
        geometry=args.geometry,
        u_site=u_site,
        n_up=args.n_up,
        n_down=args.n_down,
    )


def cmd_point(args) -> int:
    params = _params_from(args)
    ham = build_hamiltonian(params)
    spectrum = eigh(ham.matrix)
    rho = thermal_density_matrix(spectrum, args.kT, basis=ham.basis)
    entropy = von_neumann_entropy(reduce_to_sites(rho, (1,)))
    print(f"E = {_g9(entropy)}")
    print(f"ground_energy = {_g9(spectrum.ground_energy)}")
    print(f"degenerate = {'true' if rho.degeneracy > 1 else 'false'}")
    print(f"gap = {_g9(spectrum.gap())}")
    return 0


def cmd_spectrum(args) -> int:
    params = _params_from(args)
    spectrum = eigh(build_hamiltonian(params).matrix)
    print("eigenvalues:")
    for value in spectrum.eigenvalues:
        print(f"  {_g9(value)}")
    print(f"gap = {_g9(spectrum.gap())}")
    return 0


def cmd_sweep(args) -> int:
    if args.scenario is not None:
        spec = SCENARIOS[args.scenario]
    else:
        if args.axis1 is None:
            raise ValueError("sweep needs either --scenario or --axis1")
        spec = SweepSpec(
            axis1=args.axis1,
            axis2=args.axis2,
            geometries=args.geometries,
            L=args.L,
            u0=args.u0,
            u=args.u,
            kT=args.kT,
            n_up=args.n_up,
            n_down=args.n_down,
        )
    result = run_sweep(spec, workers=args.workers)
    out = (
        contextlib.nullcontext(sys.stdout)
        if args.output == "-"
        else open(args.output, "w")
    )
    with out as stream:
        if args.format == "csv":
            write_sweep_csv(result, stream)
        else:
            write_sweep_json(result, stream, scenario=args.scenario)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hubbard-ed",
        description="Site-1 entanglement entropy of small Hubbard clusters "
        "(energies in units of the hopping t).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--L", type=int, default=3, help="number of sites (default 3)")
    common.add_argument("--geometry", choices=GEOMETRIES, default="ring")
    common.add_argument("--u0", type=float, default=0.0, help="on-site energy U0/t")
    common.add_argument(
        "--u", type=float, default=0.0, help="last-site energy U/t (ignored for L=2)"
    )
    common.add_argument(
        "--u-site", dest="u_site", type=_parse_floats, default=None, metavar="U1,U2,...",
        help="explicit per-site energies, overrides --u0/--u",
    )
    common.add_argument("--n-up", dest="n_up", type=int, default=1)
    common.add_argument("--n-down", dest="n_down", type=int, default=1)

    point = sub.add_parser(
        "point", parents=[common], help="entropy and spectrum facts at one parameter point"
    )
    point.add_argument("--kT", type=float, default=0.0, help="temperature kT/t")
    point.set_defaults(func=cmd_point)

    spectrum = sub.add_parser(
        "spectrum", parents=[common], help="all sector eigenvalues and the gap"
    )
    spectrum.set_defaults(func=cmd_spectrum)

    sweep = sub.add_parser("sweep", help="entropy over a 1- or 2-axis parameter grid")
    sweep.add_argument(
        "--scenario", choices=sorted(SCENARIOS), default=None,
        help="named grid; overrides the manual axis flags",
    )
    sweep.add_argument(
        "--axis1", type=_parse_axis, default=None, metavar="NAME:START:STOP:COUNT",
        help="swept axis, NAME one of u0,u,kT",
    )
    sweep.add_argument(
        "--axis2", type=_parse_axis, default=None, metavar="NAME:START:STOP:COUNT"
    )
    sweep.add_argument(
        "--geometries", type=_parse_geometries, default=("ring",), metavar="G1,G2",
        help="comma-separated subset of ring,chain (default ring)",
    )
    sweep.add_argument("--L", type=int, default=3)
    sweep.add_argument("--u0", type=float, default=0.0)
    sweep.add_argument("--u", type=float, default=0.0)
    sweep.add_argument("--kT", type=float, default=0.0)
    sweep.add_argument("--n-up", dest="n_up", type=int, default=1)
    sweep.add_argument("--n-down", dest="n_down", type=int, default=1)
    sweep.add_argument(
        "--output", "-o", default="-", help="output path, or - for stdout (default)"
    )
    sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    sweep.add_argument("--workers", type=int, default=1)
    sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
