"""Self-contained symmetric eigensolver and the direct spectral p-energy.

The solver is cyclic Jacobi (threshold variant, sweep cap 100) run on the
adjacency matrix until the off-diagonal Frobenius norm drops below the
requested tolerance.  Convergence is checked between full sweeps, so the
norm actually achieved is usually far below the request.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels as kernels
from .graphs import Graph

DEFAULT_EIG_TOL = 1e-12
JACOBI_SWEEP_CAP = 100


class JacobiConvergenceError(RuntimeError):
    """Sweep cap reached before the off-diagonal norm met the tolerance."""

    def __init__(self, residual: float, sweeps: int):
        super().__init__(
            f"Jacobi did not converge in {sweeps} sweeps (off-diagonal norm {residual:.3e})"
        )
        self.residual = residual
        self.sweeps = sweeps


@dataclass(frozen=True)
class Spectrum:
    """Adjacency eigenvalues sorted descending; tol is the residual achieved."""

    eigenvalues: tuple[float, ...]
    tol: float


def eigenvalues(g: Graph, tol: float = DEFAULT_EIG_TOL) -> Spectrum:
    """Eigenvalues of the adjacency matrix of g, sorted descending."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    if g.n == 0:
        return Spectrum((), 0.0)
    diag, off, sweeps = kernels.jacobi_eigenvalues(g.adjacency_matrix(), tol, JACOBI_SWEEP_CAP)
    if off > tol:
        raise JacobiConvergenceError(off, sweeps)
    return Spectrum(tuple(sorted(diag, reverse=True)), off)


def energy_from_spectrum(spectrum: Spectrum, p: float, zero_threshold: float) -> float:
    """sum |lambda|^p, clamping |lambda| <= zero_threshold to an exact zero.

    The clamp keeps solver noise on high-nullity graphs (stars) from blowing
    up as noise^p when p < 1.
    """
    if p <= 0:
        raise ValueError("p must be positive")
    total = 0.0
    for lam in spectrum.eigenvalues:
        mag = abs(lam)
        if mag > zero_threshold:
            total += mag**p
    return total


def energy_spectral(g: Graph, p: float, tol: float = DEFAULT_EIG_TOL) -> float:
    """p-Schatten energy sum |lambda_i|^p over the adjacency spectrum."""
    return energy_from_spectrum(eigenvalues(g, tol), p, 10.0 * tol)
