"""Numerical tolerances shared by every module."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    norm: float = 1e-12
    hermitian: float = 1e-12
    trace: float = 1e-12
    # minimum eigenvalue allowed for a density matrix is -psd
    psd: float = 1e-10
    # hermiticity check on generic eigenvalue input
    hermitian_input: float = 1e-10
    jacobi_offdiag: float = 1e-13
    jacobi_max_sweeps: int = 100
    # density-matrix eigenvalues below this are dropped in the spin-flip construction
    rank_cutoff: float = 1e-14
    # relative slack on the ratio condition E_i^g >= a E_{i+1}^g
    ratio: float = 1e-12
    # state-level soundness comparisons in sweeps
    soundness: float = 1e-9


TOL = Tolerances()
