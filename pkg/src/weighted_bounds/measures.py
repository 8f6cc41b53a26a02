"""Concurrence, negativity and SCREN on pure states and two-qubit mixed states."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .config import TOL
from .errors import DomainError
from .linalg import (
    PureState,
    State,
    _subsystem_set,
    as_density_matrix,
    hermitian_eigenvalues,
    hermitian_eigh,
    partial_trace,
    partial_transpose,
    trace_norm,
)

_YY = np.kron(np.array([[0, -1j], [1j, 0]]), np.array([[0, -1j], [1j, 0]]))


def _cut(state: State, bipartition) -> list[int]:
    n = state.n_subsystems
    side = _subsystem_set(bipartition, n, allow_empty=True)
    if not side or len(side) == n:
        raise DomainError(f"bipartition {side} of {n} subsystems is trivial")
    return side


def _amplitude_matrix(state: PureState, side: Sequence[int]) -> np.ndarray:
    """Amplitudes reshaped to (dim A, dim rest) for the cut ``side | rest``."""
    n = state.n_subsystems
    rest = [i for i in range(n) if i not in side]
    psi = state.amplitudes.reshape(state.dims).transpose(list(side) + rest)
    d_a = math.prod(state.dims[i] for i in side)
    return psi.reshape(d_a, -1)


def concurrence_pure(state: PureState, bipartition) -> float:
    """Concurrence ``sqrt(2 (1 - Tr rho_A^2))`` of a pure state across a cut.

    For a normalized state ``1 - Tr rho_A^2`` equals half the summed squared
    2x2 minors of the amplitude matrix; evaluating it that way keeps product
    states at zero instead of at the square root of round-off.

    Parameters
    ----------
    state : PureState
    bipartition : int or iterable of int
        Subsystems forming side A.
    """
    side = _cut(state, bipartition)
    m = _amplitude_matrix(state, side)
    minors = (
        m[:, None, :, None] * m[None, :, None, :]
        - m[:, None, None, :] * m[None, :, :, None]
    )
    return float(math.sqrt(np.sum(np.abs(minors) ** 2)))


def spin_flip(rho: np.ndarray) -> np.ndarray:
    """``(Y x Y) rho* (Y x Y)`` with conjugation in the computational basis."""
    return _YY @ np.conj(rho) @ _YY


def concurrence_two_qubit(state: State) -> float:
    """Wootters concurrence ``max(0, l1 - l2 - l3 - l4)`` of a two-qubit state.

    The ``l_i`` are the square roots of the eigenvalues of ``rho (Y x Y)
    rho* (Y x Y)``, obtained here as the singular values of Wootters'
    symmetric matrix ``tau_ij = <v_i| Y x Y |v_j*>`` built from the
    subnormalized eigenvectors of ``rho``. Zero-weight eigenvectors are
    dropped so pure inputs reduce to a single exact entry.
    """
    rho = as_density_matrix(state)
    if rho.dims != (2, 2):
        raise DomainError(f"two-qubit state required, got dims {rho.dims}")
    w, v = hermitian_eigh(rho.matrix)
    keep = w > TOL.rank_cutoff
    vecs = v[:, keep] * np.sqrt(w[keep])
    tau = vecs.T @ _YY @ vecs
    lam = np.sort(np.linalg.svd(tau, compute_uv=False))[::-1]
    lam = np.concatenate([lam, np.zeros(4 - lam.size)])
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def negativity(state: State, bipartition) -> float:
    """Unnormalized negativity ``||rho^{T_A}|| - 1`` across ``A | rest``.

    Round-off slightly below zero is clamped to 0.
    """
    rho = as_density_matrix(state)
    side = _cut(rho, bipartition)
    value = trace_norm(partial_transpose(rho, side)) - 1.0
    return max(value, 0.0)


def halved_negativity(state: State, bipartition) -> float:
    """Negativity with the conventional factor 1/2, ``(||rho^{T_A}|| - 1) / 2``."""
    return negativity(state, bipartition) / 2.0


def negativity_from_spectrum(state: PureState, bipartition) -> float:
    """Pure-state negativity ``(Tr sqrt(rho_A))^2 - 1 = 2 sum_{i<j} sqrt(l_i l_j)``.

    Independent of the partial-transpose route; used as a cross-check.
    """
    side = _cut(state, bipartition)
    lam = np.clip(hermitian_eigenvalues(partial_trace(state, side).matrix), 0.0, None)
    roots = np.sqrt(lam)
    return float(roots.sum() ** 2 - np.sum(roots**2))


def scren_pure(state: PureState, bipartition) -> float:
    """SCREN of a pure state, which coincides with its SCRENoA: ``N^2``."""
    if not isinstance(state, PureState):
        raise DomainError("SCREN is only computed for pure states")
    return negativity(state, bipartition) ** 2


@dataclass(frozen=True)
class MeasureVector:
    """Joint-cut value ``E_{A|B1...}`` and pairwise values ``E_i`` sorted descending.

    ``order[k]`` is the original position of ``parts[k]`` and ``names`` keeps
    the caller's labels in sorted order.
    """

    joint: float
    parts: tuple[float, ...]
    label: str = "E"
    order: tuple[int, ...] = ()
    names: tuple[str, ...] = field(default=())

    @property
    def n_parties(self) -> int:
        return len(self.parts) + 1


def build_measure_vector(
    joint: float,
    parts: Iterable[float],
    label: str = "E",
    names: Optional[Sequence[str]] = None,
) -> MeasureVector:
    """Validate and sort pairwise measure values (ties keep input order)."""
    parts = [float(p) for p in parts]
    joint = float(joint)
    if not parts:
        raise DomainError("at least one pairwise measure value is required")
    if names is None:
        names = [f"AB{i + 1}" for i in range(len(parts))]
    if len(names) != len(parts):
        raise DomainError("names and parts differ in length")
    for value in [joint, *parts]:
        if not math.isfinite(value) or value < 0:
            raise DomainError(f"measure values must be finite and >= 0, got {value}")
    order = sorted(range(len(parts)), key=lambda i: -parts[i])
    return MeasureVector(
        joint=joint,
        parts=tuple(parts[i] for i in order),
        label=label,
        order=tuple(order),
        names=tuple(names[i] for i in order),
    )


MEASURES = ("concurrence", "negativity")


def state_measure_vector(
    state: PureState,
    measure: str = "concurrence",
    subsystem_names: Optional[Sequence[str]] = None,
) -> MeasureVector:
    """Measure vector of an N-qubit pure state for the cut ``A | B1 ... B_{N-1}``.

    Subsystem 0 plays A. Pairwise values use the reduced states ``rho_{A B_j}``
    and are named by concatenating ``subsystem_names`` (default ``A, B, C, ...``).
    """
    if measure not in MEASURES:
        raise DomainError(
            f"measure {measure!r} cannot be computed from a state; "
            f"choose one of {MEASURES} or supply a measure vector"
        )
    if any(d != 2 for d in state.dims) or state.n_subsystems < 3:
        raise DomainError("state-derived measure vectors need at least three qubits")
    labels = list(subsystem_names) if subsystem_names else list("ABCDEFGHIJ"[: state.n_subsystems])
    if len(labels) != state.n_subsystems:
        raise DomainError("one name per subsystem is required")
    parts, names = [], []
    for j in range(1, state.n_subsystems):
        rho = partial_trace(state, {0, j})
        if measure == "concurrence":
            parts.append(concurrence_two_qubit(rho))
        else:
            parts.append(negativity(rho, 0))
        names.append(labels[0] + labels[j])
    joint = concurrence_pure(state, 0) if measure == "concurrence" else negativity(state, 0)
    return build_measure_vector(joint, parts, label=measure, names=names)
