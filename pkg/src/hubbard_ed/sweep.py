"""Parameter sweeps of the site-1 entropy over interaction and temperature grids.

A sweep walks one or two axes drawn from {u0, u, kT} for one or more
geometries and yields one row per grid point.  On-site energies follow
the two-knob layout: every site gets u0 except the last, which gets u
(for L = 2 there is no distinguished last site and u is ignored).
Row order is deterministic: geometry, then axis1, then axis2, each
ascending, so repeated runs are bit-identical.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .eigen import NumericalError, eigh, ground_manifold
from .model import GEOMETRIES, ModelParams, build_hamiltonian
from .quantum_state import reduce_to_sites, thermal_density_matrix, von_neumann_entropy

AXIS_NAMES = ("u0", "u", "kT")


@dataclass(frozen=True)
class Axis:
    """Uniform grid over one sweep parameter."""

    name: str
    start: float
    stop: float
    count: int

    def __post_init__(self):
        if self.name not in AXIS_NAMES:
            raise ValueError(f"axis name must be one of {AXIS_NAMES}, got {self.name!r}")
        if self.count < 2:
            raise ValueError(f"an axis needs at least 2 points, got count={self.count}")
        if not self.start < self.stop:
            raise ValueError(f"axis needs start < stop, got [{self.start}, {self.stop}]")
        if self.name == "kT" and self.start < 0:
            raise ValueError(f"kT axis cannot go below 0, starts at {self.start}")

    def values(self) -> tuple:
        return tuple(float(v) for v in np.linspace(self.start, self.stop, self.count))


@dataclass(frozen=True)
class SweepSpec:
    """One- or two-axis sweep; scalars hold whatever the axes do not vary."""

    axis1: Axis
    axis2: Axis = None
    geometries: tuple = ("ring",)
    L: int = 3
    u0: float = 0.0
    u: float = 0.0
    kT: float = 0.0
    n_up: int = 1
    n_down: int = 1

    def __post_init__(self):
        if self.axis2 is not None and self.axis2.name == self.axis1.name:
            raise ValueError(f"both axes sweep {self.axis1.name!r}")
        if not self.geometries:
            raise ValueError("at least one geometry is required")
        for g in self.geometries:
            if g not in GEOMETRIES:
                raise ValueError(f"geometry must be one of {GEOMETRIES}, got {g!r}")
        if self.kT < 0:
            raise ValueError(f"kT must be non-negative, got {self.kT}")

    def num_rows(self) -> int:
        n = self.axis1.count * len(self.geometries)
        if self.axis2 is not None:
            n *= self.axis2.count
        return n


@dataclass(frozen=True)
class SweepRow:
    """One grid point; field names match the CSV columns."""

    geometry: str
    u0_over_t: float
    u_over_t: float
    kT_over_t: float
    entropy_bits: float
    ground_energy: float
    degenerate: bool
    gap: float


@dataclass(frozen=True)
class SweepResult:
    spec: SweepSpec
    rows: tuple = field(default=())


def u_site_layout(L: int, u0: float, u: float) -> tuple:
    """On-site energies from the two knobs: u0 everywhere, u on the last site."""
    layout = [float(u0)] * L
    if L >= 3:
        layout[-1] = float(u)
    return tuple(layout)


def evaluate_point(
    geometry: str,
    L: int,
    u0: float,
    u: float,
    kT: float,
    n_up: int = 1,
    n_down: int = 1,
) -> SweepRow:
    """Diagonalize one parameter point and report entropy plus spectrum facts."""
    params = ModelParams(
        L=L,
        geometry=geometry,
        u_site=u_site_layout(L, u0, u),
        n_up=n_up,
        n_down=n_down,
    )
    ham = build_hamiltonian(params)
    spectrum = eigh(ham.matrix)
    rho = thermal_density_matrix(spectrum, kT, basis=ham.basis)
    entropy = von_neumann_entropy(reduce_to_sites(rho, (1,)))
    return SweepRow(
        geometry=geometry,
        u0_over_t=float(u0),
        u_over_t=float(u),
        kT_over_t=float(kT),
        entropy_bits=entropy,
        ground_energy=spectrum.ground_energy,
        degenerate=len(ground_manifold(spectrum)) > 1,
        gap=spectrum.gap(),
    )


def _grid(spec: SweepSpec):
    axis2_values = spec.axis2.values() if spec.axis2 is not None else (None,)
    for geometry in sorted(spec.geometries):
        for v1 in spec.axis1.values():
            for v2 in axis2_values:
                yield geometry, v1, v2


def _point_args(spec: SweepSpec, geometry: str, v1: float, v2) -> dict:
    args = {"u0": spec.u0, "u": spec.u, "kT": spec.kT}
    args[spec.axis1.name] = v1
    if spec.axis2 is not None:
        args[spec.axis2.name] = v2
    return args


def run_sweep(spec: SweepSpec, workers: int = 1) -> SweepResult:
    """Evaluate the whole grid; any failure aborts with its grid coordinates.

    workers > 1 spreads points over a thread pool (the eigensolver kernel
    releases the GIL); the row order is identical either way.
    """
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")

    def point(coords) -> SweepRow:
        geometry, v1, v2 = coords
        args = _point_args(spec, geometry, v1, v2)
        try:
            return evaluate_point(
                geometry, spec.L, args["u0"], args["u"], args["kT"],
                n_up=spec.n_up, n_down=spec.n_down,
            )
        except NumericalError as err:
            raise NumericalError(
                f"sweep point failed at geometry={geometry} u0={args['u0']:g} "
                f"u={args['u']:g} kT={args['kT']:g}: {err}"
            ) from err

    coords = list(_grid(spec))
    if workers == 1:
        rows = tuple(point(c) for c in coords)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = tuple(pool.map(point, coords))
    return SweepResult(spec, rows)
