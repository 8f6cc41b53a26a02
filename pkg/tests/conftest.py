import numpy as np
import pytest

ACCEPTANCE_LINES = []

SIGMA = [
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]]),
    np.array([[1, 0], [0, -1]], dtype=complex),
]


def random_pure(rng, n_qubits):
    z = rng.normal(size=2**n_qubits) + 1j * rng.normal(size=2**n_qubits)
    return z / np.linalg.norm(z)


def random_rotation(rng):
    """exp(-i theta n.sigma) for a random axis and angle."""
    axis = rng.normal(size=3)
    axis /= np.linalg.norm(axis)
    theta = rng.uniform(0, np.pi)
    gen = sum(c * s for c, s in zip(axis, SIGMA))
    return np.cos(theta) * np.eye(2) - 1j * np.sin(theta) * gen


def random_unitary(rng, dim):
    """Product of 2x2 rotations embedded on random index pairs."""
    u = np.eye(dim, dtype=complex)
    for _ in range(3 * dim):
        p, q = rng.choice(dim, size=2, replace=False)
        g = np.eye(dim, dtype=complex)
        r = random_rotation(rng) * np.exp(1j * rng.uniform(0, 2 * np.pi))
        g[np.ix_([p, q], [p, q])] = r
        u = g @ u
    return u


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
