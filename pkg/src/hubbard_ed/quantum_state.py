"""Density matrices, partial traces over sites, and von Neumann entropy.

States live in a fixed (n_up, n_down) sector.  Reduced matrices are
expressed in the local site basis (empty, up, down, up+down), encoded as
up + 2*down per site, with the first kept site most significant.  Tracing
out sites reorders fermionic modes, so each sector state contributes with
the parity of that reordering; within a fixed sector the signs cancel in
the end result, but they are carried explicitly so any subset of sites,
in any listed order, reduces correctly.
"""

import math
from dataclasses import dataclass

import numpy as np

from .eigen import NumericalError, Spectrum, eigh, ground_manifold
from .fock import DOWN, UP, SectorBasis, mode_index, site_occupation
from .model import ModelParams, build_hamiltonian

TRACE_TOL = 1e-10
SYMMETRY_TOL = 1e-10
POSITIVITY_TOL = 1e-10
INFINITE_T_RATIO = 1e6

_LOCAL_LABELS = ("0", "u", "d", "ud")


class PositivityError(NumericalError):
    """An eigenvalue of a density matrix came out below -1e-10."""


@dataclass(frozen=True)
class LocalBasis:
    """Product basis of the local states of the listed sites.

    Index layout: the first listed site is the most significant base-4
    digit, each digit being the local code up + 2*down.
    """

    sites: tuple

    @property
    def dim(self) -> int:
        return 4 ** len(self.sites)

    def occupation_codes(self, index: int) -> tuple:
        codes = []
        for _ in self.sites:
            codes.append(index & 3)
            index >>= 2
        return tuple(reversed(codes))

    def label(self, index: int) -> str:
        return "|".join(_LOCAL_LABELS[c] for c in self.occupation_codes(index))


@dataclass(frozen=True)
class DensityMatrix:
    """Validated density matrix with the basis it is written in.

    ``degeneracy`` records the ground-manifold size of the spectrum the
    matrix came from (1 for a non-degenerate ground state); reductions
    inherit it.
    """

    matrix: np.ndarray
    basis: object = None
    degeneracy: int = 1

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=np.float64)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {m.shape}")
        skew = np.abs(m - m.T).max()
        if skew > SYMMETRY_TOL:
            raise ValueError(f"density matrix is not symmetric: max skew {skew:g}")
        tr = float(np.trace(m))
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"density matrix trace is {tr!r}, expected 1")
        if self.degeneracy < 1:
            raise ValueError(f"degeneracy must be >= 1, got {self.degeneracy}")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def ground_density_matrix(spectrum: Spectrum, basis=None, rel_tol: float = 1e-9) -> DensityMatrix:
    """Equal-weight mixture over the ground manifold.

    A unique ground state gives the pure projector; a g-fold degenerate
    one gives the maximally mixed state on the manifold, which is the
    kT -> 0 limit of the Gibbs state.
    """
    idx = ground_manifold(spectrum, rel_tol)
    vecs = spectrum.eigenvectors[:, idx]
    rho = (vecs @ vecs.T) / len(idx)
    return DensityMatrix(rho, basis, degeneracy=len(idx))


def thermal_density_matrix(
    spectrum: Spectrum, kT: float, basis=None, rel_tol: float = 1e-9
) -> DensityMatrix:
    """Gibbs state exp(-H/kT)/Z restricted to the spectrum's sector.

    Weights are computed from gap-shifted energies e_i - e_0, so large
    negative energies never overflow.  kT = 0 returns the ground-manifold
    mixture; kT at or beyond 1e6 times the spectral spread snaps to exactly
    equal weights, making the infinite-temperature limit reproducible.
    """
    if kT < 0:
        raise ValueError(f"temperature must be non-negative, got kT={kT}")
    if kT == 0:
        return ground_density_matrix(spectrum, basis, rel_tol)
    energies = spectrum.eigenvalues
    spread = float(energies[-1] - energies[0])
    if kT >= INFINITE_T_RATIO * spread:
        weights = np.full(spectrum.dim, 1.0 / spectrum.dim)
    else:
        weights = np.exp(-(energies - energies[0]) / kT)
        weights /= weights.sum()
    vecs = spectrum.eigenvectors
    rho = (vecs * weights) @ vecs.T
    return DensityMatrix(rho, basis, degeneracy=len(ground_manifold(spectrum, rel_tol)))


def _reduction_map(basis: SectorBasis, keep: tuple):
    """Per sector state: (local index of kept sites, traced config, sign)."""
    kept_modes = [mode_index(s, spin) for s in keep for spin in (UP, DOWN)]
    kept_set = set(kept_modes)
    traced_modes = [m for m in range(2 * basis.L) if m not in kept_set]
    # position of each mode once kept modes are moved, in listed order,
    # in front of the traced ones
    rank = {m: pos for pos, m in enumerate(kept_modes + traced_modes)}
    entries = []
    for state in basis.states:
        seq = [rank[m] for m in range(2 * basis.L) if state >> m & 1]
        inversions = sum(
            1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b]
        )
        local = 0
        for site in keep:
            local = 4 * local + site_occupation(state, site)
        traced = tuple(state >> m & 1 for m in traced_modes)
        entries.append((local, traced, -1 if inversions & 1 else 1))
    return entries


def reduce_to_sites(rho: DensityMatrix, keep) -> DensityMatrix:
    """Partial trace onto the listed sites (1-based, proper nonempty subset)."""
    basis = rho.basis
    if not isinstance(basis, SectorBasis):
        raise ValueError("reduce_to_sites needs a density matrix over a sector basis")
    keep = tuple(keep)
    if not keep:
        raise ValueError("keep must list at least one site")
    if len(set(keep)) != len(keep):
        raise ValueError(f"keep lists a site twice: {keep}")
    if any(not 1 <= s <= basis.L for s in keep):
        raise ValueError(f"keep {keep} out of range for L={basis.L}")
    if len(keep) >= basis.L:
        raise ValueError("keep must be a proper subset; nothing would be traced out")
    entries = _reduction_map(basis, keep)
    reduced = np.zeros((4 ** len(keep),) * 2)
    m = rho.matrix
    for a, (la, ta, sa) in enumerate(entries):
        for b, (lb, tb, sb) in enumerate(entries):
            if ta == tb:
                reduced[la, lb] += sa * sb * m[a, b]
    return DensityMatrix(reduced, LocalBasis(keep), degeneracy=rho.degeneracy)


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """Entropy in bits, -sum p log2 p over the eigenvalues of rho.

    Eigenvalues below -1e-10 raise PositivityError; smaller negative
    noise is clamped to zero and values are capped at 1.  The result is
    capped at log2(dim), so rounding never pushes it past the maximum.
    """
    vals = eigh(rho.matrix).eigenvalues
    if vals[0] < -POSITIVITY_TOL:
        raise PositivityError(
            f"density matrix has eigenvalue {vals[0]:g} below -{POSITIVITY_TOL:g}"
        )
    total = 0.0
    for v in vals:
        p = min(float(v), 1.0)
        if p > 0.0:
            total -= p * math.log2(p)
    return min(total, math.log2(len(vals)))


def site1_entanglement(params: ModelParams, kT: float = 0.0) -> float:
    """Entropy in bits of site 1 in the (thermal or ground) sector state."""
    ham = build_hamiltonian(params)
    spectrum = eigh(ham.matrix)
    rho = thermal_density_matrix(spectrum, kT, basis=ham.basis)
    return von_neumann_entropy(reduce_to_sites(rho, (1,)))
