"""Exact diagonalization and site entanglement for small Hubbard clusters."""

from .eigen import NumericalError, Spectrum, eigh, ground_manifold
from .fock import (
    DOWN,
    UP,
    SectorBasis,
    annihilate,
    create,
    enumerate_sector,
    mode_index,
    site_occupation,
)
from .model import (
    GEOMETRIES,
    HamiltonianMatrix,
    ModelParams,
    bonds,
    build_hamiltonian,
    double_occupancy_energy,
)
from .quantum_state import (
    DensityMatrix,
    LocalBasis,
    PositivityError,
    ground_density_matrix,
    reduce_to_sites,
    site1_entanglement,
    thermal_density_matrix,
    von_neumann_entropy,
)
from .sweep import (
    Axis,
    SweepResult,
    SweepRow,
    SweepSpec,
    evaluate_point,
    run_sweep,
    u_site_layout,
)

__version__ = "0.1.0"

__all__ = [
    "DOWN",
    "UP",
    "Axis",
    "DensityMatrix",
    "GEOMETRIES",
    "HamiltonianMatrix",
    "LocalBasis",
    "ModelParams",
    "NumericalError",
    "PositivityError",
    "SectorBasis",
    "Spectrum",
    "SweepResult",
    "SweepRow",
    "SweepSpec",
    "annihilate",
    "bonds",
    "build_hamiltonian",
    "create",
    "double_occupancy_energy",
    "eigh",
    "enumerate_sector",
    "evaluate_point",
    "ground_density_matrix",
    "ground_manifold",
    "mode_index",
    "reduce_to_sites",
    "run_sweep",
    "site1_entanglement",
    "site_occupation",
    "thermal_density_matrix",
    "u_site_layout",
    "von_neumann_entropy",
]
