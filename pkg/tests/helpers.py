"""Shared generators for randomized tests."""

from __future__ import annotations

import numpy as np


def rng_for(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_complex_matrix(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_hermitian(n: int, rng: np.random.Generator) -> np.ndarray:
    a = random_complex_matrix(n, n, rng)
    return 0.5 * (a + a.conj().T)


def random_unit_vector(d: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return v / np.linalg.norm(v)


def spectrum_with_equal_tail(mu: float, t: float, n: int, rng: np.random.Generator) -> np.ndarray:
    """Hermitian matrix with eigenvalues (mu, t, ..., t) in a random basis."""
    from kdframes.linalg import haar_unitary

    u = haar_unitary(n, rng)
    diag = np.diag([mu] + [t] * (n - 1)).astype(complex)
    return u @ diag @ u.conj().T
