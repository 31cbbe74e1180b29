"""Seeded random states, unitaries and channels for tests and sweeps."""

from __future__ import annotations

import numpy as np

from .linalg import DensityMatrix, PureState


def ensure_rng(seed) -> np.random.Generator:
    """Accept a Generator, a seed, or None and return a Generator."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def _ginibre(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_density_matrix(
    dim_a: int, dim_b: int, seed=None, rank: int | None = None
) -> DensityMatrix:
    """Ginibre-induced random state: G G^dag normalized to unit trace."""
    rng = ensure_rng(seed)
    side = dim_a * dim_b
    g = _ginibre(side, rank if rank is not None else side, rng)
    m = g @ g.conj().T
    return DensityMatrix(dim_a, dim_b, m / m.trace())


def random_pure_state(dim_a: int, dim_b: int, seed=None) -> PureState:
    rng = ensure_rng(seed)
    v = _ginibre(dim_a * dim_b, 1, rng).reshape(-1)
    return PureState(dim_a, dim_b, v / np.linalg.norm(v))


def random_product_pure_state(dim_a: int, dim_b: int, seed=None) -> PureState:
    rng = ensure_rng(seed)
    a = _ginibre(dim_a, 1, rng).reshape(-1)
    b = _ginibre(dim_b, 1, rng).reshape(-1)
    a /= np.linalg.norm(a)
    b /= np.linalg.norm(b)
    return PureState(dim_a, dim_b, np.kron(a, b))


def random_separable_state(
    dim_a: int, dim_b: int, seed=None, terms: int | None = None
) -> DensityMatrix:
    """Convex mixture of random product projectors (separable by construction)."""
    rng = ensure_rng(seed)
    if terms is None:
        terms = 2 * dim_a * dim_b
    weights = rng.dirichlet(np.ones(terms))
    side = dim_a * dim_b
    out = np.zeros((side, side), dtype=complex)
    for w in weights:
        amps = random_product_pure_state(dim_a, dim_b, rng).amplitudes
        out += w * np.outer(amps, amps.conj())
    return DensityMatrix(dim_a, dim_b, out)


def random_unitary(dim: int, seed=None) -> np.ndarray:
    """Haar-distributed unitary via QR of a Ginibre matrix with phase fix."""
    rng = ensure_rng(seed)
    q, r = np.linalg.qr(_ginibre(dim, dim, rng))
    phases = np.diag(r).copy()
    phases /= np.abs(phases)
    return q * phases


def random_isometry(rows: int, cols: int, seed=None) -> np.ndarray:
    """rows x cols matrix V with V^dag V = identity (requires rows >= cols)."""
    if rows < cols:
        raise ValueError("isometry needs rows >= cols")
    rng = ensure_rng(seed)
    q, r = np.linalg.qr(_ginibre(rows, cols, rng))
    phases = np.diag(r).copy()
    phases /= np.abs(phases)
    return q * phases


def random_kraus_set(dim: int, count: int, seed=None) -> list[np.ndarray]:
    """Kraus operators of a random channel, via a Stinespring isometry."""
    v = random_isometry(dim * count, dim, seed)
    return [v[i * dim : (i + 1) * dim, :] for i in range(count)]


def random_local_unitary_conjugate(rho: DensityMatrix, seed=None) -> DensityMatrix:
    """Conjugate by a product unitary u_A x u_B."""
    rng = ensure_rng(seed)
    ua = random_unitary(rho.dim_a, rng)
    ub = random_unitary(rho.dim_b, rng)
    u = np.kron(ua, ub)
    return DensityMatrix(rho.dim_a, rho.dim_b, u @ rho.entries @ u.conj().T)
