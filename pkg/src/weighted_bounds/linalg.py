"""Small dense complex linear algebra and qubit-state manipulation.

Subsystem 0 is the leftmost tensor factor and basis ordering is big-endian,
so for three qubits ``|b0 b1 b2>`` sits at index ``4*b0 + 2*b1 + b2``.
Matrices are plain ``numpy`` complex arrays.
"""

from __future__ import annotations

import math
import string
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from .config import TOL
from .errors import ConvergenceError, DomainError


def _as_square(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {a.shape}")
    return a


def _is_hermitian(a: np.ndarray, tol: float) -> bool:
    return bool(np.all(np.abs(a - a.conj().T) <= tol))


def _jacobi(a: np.ndarray, vectors: bool):
    """Cyclic complex Jacobi diagonalization of a Hermitian matrix.

    Each rotation first removes the phase of the pivot ``a[p, q]`` and then
    applies the real symmetric Jacobi rotation that annihilates it.
    """
    a = np.array(a, dtype=complex)
    n = a.shape[0]
    v = np.eye(n, dtype=complex) if vectors else None
    scale = max(1.0, float(np.linalg.norm(a)))
    limit = TOL.jacobi_offdiag * scale
    off = np.abs(a - np.diag(np.diag(a)))

    for _ in range(TOL.jacobi_max_sweeps):
        if n < 2 or off.max() < limit:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r < 1e-300:
                    continue
                phase = np.conj(apq / r)
                tau = (a[q, q].real - a[p, p].real) / (2.0 * r)
                t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rot = np.array([[c, s], [-s * phase, c * phase]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ rot
                a[idx, :] = rot.conj().T @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                if v is not None:
                    v[:, idx] = v[:, idx] @ rot
        off = np.abs(a - np.diag(np.diag(a)))
    else:
        if n >= 2 and off.max() >= limit:
            raise ConvergenceError(
                f"Jacobi did not converge in {TOL.jacobi_max_sweeps} sweeps "
                f"(off-diagonal {off.max():.3e})"
            )

    w = np.diag(a).real.copy()
    order = np.argsort(w, kind="stable")
    if v is None:
        return w[order]
    return w[order], v[:, order]


def hermitian_eigenvalues(m) -> np.ndarray:
    """Real spectrum of a Hermitian matrix, ascending.

    Raises
    ------
    DomainError
        If ``m`` is not square or not Hermitian within 1e-10.
    """
    a = _as_square(m)
    if not _is_hermitian(a, TOL.hermitian_input):
        raise DomainError("matrix is not Hermitian")
    return _jacobi(a, vectors=False)


def hermitian_eigh(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and unitary eigenvector columns of ``m``."""
    a = _as_square(m)
    if not _is_hermitian(a, TOL.hermitian_input):
        raise DomainError("matrix is not Hermitian")
    return _jacobi(a, vectors=True)


def trace_norm(m) -> float:
    """Sum of singular values, ``Tr sqrt(X X^dagger)``.

    Hermitian input takes the absolute-eigenvalue path; anything else goes
    through the spectrum of ``X X^dagger``.
    """
    a = _as_square(m)
    if _is_hermitian(a, TOL.hermitian_input):
        return float(np.sum(np.abs(_jacobi(a, vectors=False))))
    w = _jacobi(a @ a.conj().T, vectors=False)
    return float(np.sum(np.sqrt(np.clip(w, 0.0, None))))


def _check_dims(dims) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if not dims or any(d < 2 for d in dims):
        raise DomainError(f"subsystem dimensions must all be >= 2, got {dims}")
    return dims


@dataclass(frozen=True)
class PureState:
    """Normalized amplitude vector over a tensor product of subsystems."""

    dims: tuple[int, ...]
    amplitudes: np.ndarray

    def __post_init__(self):
        dims = _check_dims(self.dims)
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size != math.prod(dims):
            raise DomainError(
                f"{amps.size} amplitudes do not match dimensions {dims}"
            )
        if abs(np.vdot(amps, amps).real - 1.0) > TOL.norm:
            raise DomainError("state is not normalized")
        amps.flags.writeable = False
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_amplitudes(cls, dims, amplitudes, normalize=False) -> "PureState":
        amps = np.asarray(amplitudes, dtype=complex).reshape(-1)
        if normalize:
            norm = np.linalg.norm(amps)
            if norm == 0:
                raise DomainError("cannot normalize the zero vector")
            amps = amps / norm
        return cls(tuple(dims), amps)

    @classmethod
    def from_kets(cls, terms: dict[str, complex], dims=None) -> "PureState":
        """Build a qubit state from ``{"010": amplitude, ...}``."""
        n = len(next(iter(terms)))
        dims = tuple(dims) if dims is not None else (2,) * n
        amps = np.zeros(math.prod(dims), dtype=complex)
        for label, value in terms.items():
            digits = [int(ch) for ch in label]
            amps[np.ravel_multi_index(digits, dims)] += value
        return cls(dims, amps)

    @property
    def n_subsystems(self) -> int:
        return len(self.dims)

    def density_matrix(self) -> "DensityMatrix":
        psi = self.amplitudes
        return DensityMatrix(self.dims, np.outer(psi, psi.conj()))


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite matrix with subsystem dims."""

    dims: tuple[int, ...]
    matrix: np.ndarray

    def __post_init__(self):
        dims = _check_dims(self.dims)
        m = np.array(self.matrix, dtype=complex)
        side = math.prod(dims)
        if m.shape != (side, side):
            raise DomainError(f"matrix shape {m.shape} does not match dims {dims}")
        if not _is_hermitian(m, TOL.hermitian):
            raise DomainError("density matrix is not Hermitian")
        if abs(np.trace(m) - 1.0) > TOL.trace:
            raise DomainError(f"density matrix trace {np.trace(m).real!r} != 1")
        if _jacobi(m, vectors=False)[0] < -TOL.psd:
            raise DomainError("density matrix is not positive semidefinite")
        m.flags.writeable = False
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "matrix", m)

    @property
    def n_subsystems(self) -> int:
        return len(self.dims)


State = Union[PureState, DensityMatrix]


def as_density_matrix(state: State) -> DensityMatrix:
    if isinstance(state, PureState):
        return state.density_matrix()
    if isinstance(state, DensityMatrix):
        return state
    raise TypeError(f"expected PureState or DensityMatrix, got {type(state).__name__}")


def _subsystem_set(indices, n: int, allow_empty=False) -> list[int]:
    if isinstance(indices, (int, np.integer)):
        indices = [indices]
    out = sorted({int(i) for i in indices})
    if not out and not allow_empty:
        raise DomainError("subsystem set is empty")
    for i in out:
        if not 0 <= i < n:
            raise DomainError(f"subsystem index {i} out of range for {n} subsystems")
    return out


def _reduce(matrix: np.ndarray, dims: Sequence[int], keep: Sequence[int]) -> np.ndarray:
    n = len(dims)
    letters = string.ascii_letters
    rows = list(letters[:n])
    cols = list(letters[n : 2 * n])
    for i in range(n):
        if i not in keep:
            cols[i] = rows[i]
    out = "".join(rows[i] for i in keep) + "".join(cols[i] for i in keep)
    tensor = matrix.reshape(tuple(dims) * 2)
    red = np.einsum("".join(rows) + "".join(cols) + "->" + out, tensor)
    side = math.prod(dims[i] for i in keep)
    return red.reshape(side, side)


def partial_trace(state: State, keep: Iterable[int]) -> DensityMatrix:
    """Reduced density matrix on the subsystems in ``keep``.

    Kept subsystems stay in their original relative order. A pure state is
    accepted and converted first.
    """
    rho = as_density_matrix(state)
    kept = _subsystem_set(keep, rho.n_subsystems)
    red = _reduce(rho.matrix, rho.dims, kept)
    return DensityMatrix(tuple(rho.dims[i] for i in kept), red)


def partial_transpose(state, subsystem: Union[int, Iterable[int]], dims=None) -> np.ndarray:
    """Transpose the indices of one subsystem (or several) of ``state``.

    ``state`` is a PureState, a DensityMatrix, or a bare square matrix with
    ``dims`` given. The result is Hermitian for Hermitian input but generally
    not positive semidefinite, so it is returned as a bare matrix.
    """
    if isinstance(state, (PureState, DensityMatrix)):
        matrix, dims = as_density_matrix(state).matrix, state.dims
    else:
        if dims is None:
            raise DomainError("dims are required for a bare matrix")
        matrix, dims = _as_square(state), _check_dims(dims)
        if matrix.shape[0] != math.prod(dims):
            raise DomainError(f"matrix shape {matrix.shape} does not match dims {dims}")
    n = len(dims)
    targets = _subsystem_set(subsystem, n)
    tensor = matrix.reshape(tuple(dims) * 2)
    axes = list(range(2 * n))
    for i in targets:
        axes[i], axes[n + i] = axes[n + i], axes[i]
    side = matrix.shape[0]
    return np.ascontiguousarray(tensor.transpose(axes)).reshape(side, side)


def purity(state: State) -> float:
    """``Tr(rho^2)``."""
    m = as_density_matrix(state).matrix
    return float(np.einsum("ij,ji->", m, m).real)
