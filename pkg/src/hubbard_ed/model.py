"""Hubbard clusters on a chain or ring: parameters and the sector Hamiltonian.

H = -t * sum over bonds (i,j) and spins of (c^dag_i c_j + c^dag_j c_i)
    + sum over sites of u_site[i] * n_up(i) * n_down(i)

built directly in a fixed (n_up, n_down) sector.  Energies are in units of
the hopping t, which stays at 1 everywhere in practice.
"""

from dataclasses import dataclass

import numpy as np

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

GEOMETRIES = ("chain", "ring")


@dataclass(frozen=True)
class ModelParams:
    """Cluster description: size, geometry, on-site terms, particle counts."""

    L: int
    geometry: str
    u_site: tuple
    t: float = 1.0
    n_up: int = 1
    n_down: int = 1

    def __post_init__(self):
        if self.L < 2:
            raise ValueError(f"need at least two sites, got L={self.L}")
        if self.geometry not in GEOMETRIES:
            raise ValueError(f"geometry must be one of {GEOMETRIES}, got {self.geometry!r}")
        if self.geometry == "ring" and self.L == 2:
            # the wrap-around bond would duplicate the single chain bond
            raise ValueError("a ring needs L >= 3; use the chain for L = 2")
        object.__setattr__(self, "u_site", tuple(float(u) for u in self.u_site))
        if len(self.u_site) != self.L:
            raise ValueError(
                f"u_site has {len(self.u_site)} entries for L={self.L} sites"
            )
        if not self.t > 0:
            raise ValueError(f"hopping t must be positive, got {self.t}")
        if not 0 <= self.n_up <= self.L or not 0 <= self.n_down <= self.L:
            raise ValueError(
                f"particle counts ({self.n_up}, {self.n_down}) do not fit on {self.L} sites"
            )

    @property
    def num_modes(self) -> int:
        return 2 * self.L


def bonds(params: ModelParams) -> tuple:
    """Hopping bonds as 1-based site pairs; a ring adds the wrap-around bond."""
    pairs = [(i, i + 1) for i in range(1, params.L)]
    if params.geometry == "ring":
        pairs.append((params.L, 1))
    return tuple(pairs)


def double_occupancy_energy(state: int, u_site) -> float:
    """Sum of u_site[i] over the doubly occupied sites of a bitmask state."""
    total = 0.0
    for i, u in enumerate(u_site):
        if site_occupation(state, i + 1) == 3:
            total += u
    return total


@dataclass(frozen=True)
class HamiltonianMatrix:
    """Dense symmetric sector Hamiltonian together with its basis."""

    basis: SectorBasis
    matrix: np.ndarray


def build_hamiltonian(params: ModelParams) -> HamiltonianMatrix:
    """Assemble the dense Hamiltonian of the (n_up, n_down) sector.

    Both hop directions are applied explicitly, so the matrix is symmetric
    to the bit (each off-diagonal pair is the same signed product of t).
    """
    basis = enumerate_sector(params.L, params.n_up, params.n_down)
    nm = params.num_modes
    h = np.zeros((basis.dim, basis.dim))
    for col, state in enumerate(basis.states):
        h[col, col] = double_occupancy_energy(state, params.u_site)
        for i, j in bonds(params):
            for spin in (UP, DOWN):
                # c^dag_dst c_src for both directions of the bond
                for src, dst in ((j, i), (i, j)):
                    hop = annihilate(state, mode_index(src, spin), nm)
                    if hop is None:
                        continue
                    part, sign_a = hop
                    put = create(part, mode_index(dst, spin), nm)
                    if put is None:
                        continue
                    moved, sign_c = put
                    # hopping conserves (n_up, n_down), so the target
                    # must sit in the same sector
                    assert moved in basis.index
                    h[basis.index[moved], col] += -params.t * sign_a * sign_c
    return HamiltonianMatrix(basis, h)
