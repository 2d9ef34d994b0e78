"""Dense symmetric eigensolver: cyclic Jacobi rotations, JIT-compiled.

Self-contained on purpose so the whole energy pipeline is auditable end to
end; the matrices here are tiny (9x9 for the cases of interest), where
Jacobi is both simple and fast.  Convergence is declared when the
off-diagonal Frobenius norm falls below 1e-12 of the full Frobenius norm.
"""

from dataclasses import dataclass

import numpy as np
from numba import njit

SYMMETRY_TOL = 1e-12
CONVERGENCE_RATIO = 1e-12
MAX_SWEEPS = 100


class NumericalError(RuntimeError):
    """A numerical routine failed to meet its accuracy contract."""


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues ascending; eigenvectors[:, k] belongs to eigenvalues[k]."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.eigenvalues)

    @property
    def ground_energy(self) -> float:
        return float(self.eigenvalues[0])

    def gap(self) -> float:
        """Spacing between the two lowest eigenvalues; 0 for a 1-dim spectrum."""
        if self.dim < 2:
            return 0.0
        return float(self.eigenvalues[1] - self.eigenvalues[0])


@njit(cache=True, nogil=True)
def _jacobi(a, v, tol, max_sweeps):  # pragma: no cover - exercised via eigh
    n = a.shape[0]
    for sweep in range(max_sweeps):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += 2.0 * a[p, q] * a[p, q]
        off = np.sqrt(off)
        if off <= tol:
            return off, sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                # stable rotation choice: the smaller root of t^2 + 2*theta*t = 1
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if theta >= 0.0:
                    t = 1.0 / (theta + np.sqrt(1.0 + theta * theta))
                else:
                    t = -1.0 / (-theta + np.sqrt(1.0 + theta * theta))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                app = a[p, p]
                aqq = a[q, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for r in range(n):
                    if r != p and r != q:
                        arp = a[r, p]
                        arq = a[r, q]
                        a[r, p] = c * arp - s * arq
                        a[p, r] = a[r, p]
                        a[r, q] = s * arp + c * arq
                        a[q, r] = a[r, q]
                for r in range(n):
                    vrp = v[r, p]
                    vrq = v[r, q]
                    v[r, p] = c * vrp - s * vrq
                    v[r, q] = s * vrp + c * vrq
    off = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            off += 2.0 * a[p, q] * a[p, q]
    return np.sqrt(off), max_sweeps


def eigh(matrix) -> Spectrum:
    """Diagonalize a real symmetric matrix.

    Raises ValueError if the input is not square and symmetric to 1e-12
    per entry, and NumericalError if the sweep budget runs out before the
    off-diagonal norm is driven below tolerance.
    """
    a = np.asarray(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] == 0:
        raise ValueError("expected a non-empty matrix")
    skew = np.abs(a - a.T).max()
    if skew > SYMMETRY_TOL:
        raise ValueError(f"matrix is not symmetric: max |a - a.T| = {skew:g}")
    work = 0.5 * (a + a.T)  # exact for a symmetric input, kills roundoff skew
    norm = np.linalg.norm(work)
    tol = CONVERGENCE_RATIO * norm
    vecs = np.eye(work.shape[0])
    off, _ = _jacobi(work, vecs, tol, MAX_SWEEPS)
    if off > tol:
        raise NumericalError(
            f"Jacobi sweeps did not converge: off-diagonal norm {off:g} "
            f"(tolerance {tol:g}) after {MAX_SWEEPS} sweeps"
        )
    order = np.argsort(np.diag(work), kind="stable")
    return Spectrum(np.diag(work)[order].copy(), vecs[:, order].copy())


def ground_manifold(spectrum: Spectrum, rel_tol: float = 1e-9) -> tuple:
    """Indices of all eigenvalues degenerate with the lowest one.

    Degeneracy means within rel_tol * max(1, |e0|) of the ground energy.
    """
    e0 = spectrum.eigenvalues[0]
    tol = rel_tol * max(1.0, abs(e0))
    return tuple(np.flatnonzero(spectrum.eigenvalues <= e0 + tol))
