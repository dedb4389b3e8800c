r"""Covariance-matrix machinery for zero-mean Gaussian states.

Conventions
-----------
Mode operators are collected as :math:`\mathbb{X} = (a_1, \dots, a_N, a_1^\dagger, \dots, a_N^\dagger)`
and the covariance matrix is :math:`\sigma_{nm} = \langle\{\mathbb{X}_n, \mathbb{X}_m^\dagger\}\rangle`,
so the vacuum is the identity. Covariance and symplectic matrices are plain
``(2N, 2N)`` complex numpy arrays.

Purity is reported as the product of *squared* symplectic eigenvalues, which
is the inverse square of the usual :math:`\mathrm{Tr}\,\rho^2`; it equals 1 for
pure states and grows with mixedness.
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

PHYSICAL_TOL = 1e-10
PAIRING_TOL = 1e-8


class NumericalError(RuntimeError):
    """Raised when an eigen-decomposition does not have the expected structure."""


class NonPhysicalStateError(ValueError):
    """Raised when a covariance matrix violates the uncertainty principle."""


def n_modes_of(sigma: np.ndarray) -> int:
    """Number of modes of a ``(2N, 2N)`` matrix, validating the shape."""
    sigma = np.asarray(sigma)
    if sigma.ndim != 2 or sigma.shape[0] != sigma.shape[1] or sigma.shape[0] % 2:
        raise ValueError(f"expected a square matrix of even size, got shape {sigma.shape}")
    return sigma.shape[0] // 2


def symplectic_form(n_modes: int) -> np.ndarray:
    r"""Return :math:`\Omega` with :math:`i\Omega = \mathrm{diag}(\mathbb{1}, -\mathbb{1})`."""
    if n_modes < 1:
        raise ValueError("n_modes must be a positive integer")
    return -1j * np.diag(np.concatenate([np.ones(n_modes), -np.ones(n_modes)]))


def _i_omega(n_modes: int) -> np.ndarray:
    return np.diag(np.concatenate([np.ones(n_modes), -np.ones(n_modes)])).astype(complex)


def vacuum(n_modes: int) -> np.ndarray:
    return np.eye(2 * n_modes, dtype=complex)


def thermal(nus: Sequence[float]) -> np.ndarray:
    """Thermal (Williamson-diagonal) covariance matrix ``diag(nus, nus)``."""
    nus = np.asarray(nus, dtype=float)
    return np.diag(np.concatenate([nus, nus])).astype(complex)


def symplectic_residual(S: np.ndarray) -> float:
    r"""Max-norm of :math:`S\Omega S^\dagger - \Omega`."""
    omega = symplectic_form(n_modes_of(S))
    return float(np.abs(S @ omega @ S.conj().T - omega).max())


def is_symplectic(S: np.ndarray, tol: float = 1e-10) -> bool:
    return symplectic_residual(S) < tol


def bogoliubov_blocks(S: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split ``S = [[alpha, beta], [beta*, alpha*]]`` into its Bogoliubov blocks."""
    n = n_modes_of(S)
    return S[:n, :n], S[:n, n:]


def apply_transform(sigma: np.ndarray, S: np.ndarray) -> np.ndarray:
    r"""Evolve a covariance matrix: :math:`\sigma \mapsto S^\dagger \sigma S`."""
    sigma = np.asarray(sigma, dtype=complex)
    S = np.asarray(S, dtype=complex)
    if sigma.shape != S.shape:
        raise ValueError(f"dimension mismatch: sigma {sigma.shape} vs S {S.shape}")
    n_modes_of(sigma)
    return S.conj().T @ sigma @ S


def _hermitian_part(sigma: np.ndarray) -> np.ndarray:
    sigma = np.asarray(sigma, dtype=complex)
    n_modes_of(sigma)
    return 0.5 * (sigma + sigma.conj().T)


def symplectic_spectrum(sigma: np.ndarray) -> np.ndarray:
    r"""All eigenvalues of :math:`i\Omega\sigma` (real, ascending).

    ``sigma`` must be Hermitian positive definite; the spectrum is then
    obtained from the Hermitian matrix :math:`\sigma^{1/2}\, i\Omega\, \sigma^{1/2}`,
    which is similar to :math:`i\Omega\sigma` and has an exactly real spectrum.
    """
    sigma = _hermitian_part(sigma)
    n = sigma.shape[0] // 2
    w, U = np.linalg.eigh(sigma)
    if w.min() <= 0:
        raise NumericalError(f"covariance matrix is not positive definite (min eigenvalue {w.min():.3e})")
    root = (U * np.sqrt(w)) @ U.conj().T
    return np.linalg.eigvalsh(root @ _i_omega(n) @ root)


def symplectic_eigenvalues(sigma: np.ndarray) -> np.ndarray:
    """The N symplectic eigenvalues of ``sigma``, in descending order.

    The eigenvalues of ``i Omega sigma`` come in ``+nu, -nu`` pairs. They are
    paired by sorting absolute values, and each matched pair is averaged.

    Raises:
        NumericalError: if a pair mismatches by more than ``PAIRING_TOL``
            (relative to ``max(1, nu)``).
    """
    spectrum = symplectic_spectrum(sigma)
    mags = np.sort(np.abs(spectrum))
    pairs = mags.reshape(-1, 2)
    mismatch = np.abs(pairs[:, 0] - pairs[:, 1]) / np.maximum(1.0, pairs[:, 1])
    if mismatch.max() > PAIRING_TOL:
        raise NumericalError(f"symplectic eigenvalue pairing failed (mismatch {mismatch.max():.3e})")
    return pairs.mean(axis=1)[::-1]


def min_physical_eigenvalue(sigma: np.ndarray) -> float:
    r"""Smallest eigenvalue of :math:`\sigma + i\Omega`."""
    sigma = _hermitian_part(sigma)
    n = sigma.shape[0] // 2
    return float(np.linalg.eigvalsh(sigma + _i_omega(n)).min())


def is_physical(sigma: np.ndarray, tol: float = PHYSICAL_TOL) -> bool:
    r"""Check :math:`\sigma + i\Omega \geq 0` up to ``tol``.

    The tolerance is scaled by ``max(1, ||sigma||_inf)`` so that strongly
    squeezed states are not rejected because of roundoff.
    """
    sigma = np.asarray(sigma, dtype=complex)
    if not np.allclose(sigma, sigma.conj().T, atol=1e-12 * max(1.0, np.abs(sigma).max())):
        return False
    scale = max(1.0, float(np.abs(sigma).sum(axis=1).max()))
    return min_physical_eigenvalue(sigma) >= -tol * scale


def _mode_indices(n: int, modes: Iterable[int]) -> list[int]:
    modes = list(modes)
    if not modes:
        raise ValueError("mode subset must be non-empty")
    for m in modes:
        if not 0 <= m < n:
            raise ValueError(f"mode index {m} out of range for {n} modes")
    if len(set(modes)) != len(modes):
        raise ValueError(f"repeated mode index in {modes}")
    return modes + [m + n for m in modes]


def partial_trace(sigma: np.ndarray, keep: Iterable[int]) -> np.ndarray:
    """Reduced covariance matrix on the modes in ``keep`` (in the given order)."""
    sigma = np.asarray(sigma, dtype=complex)
    idx = _mode_indices(n_modes_of(sigma), keep)
    return sigma[np.ix_(idx, idx)]


def partial_transpose(sigma: np.ndarray, modes: int | Iterable[int]) -> np.ndarray:
    """Partial transpose with respect to one or more modes.

    Transposing mode ``m`` swaps its annihilation and creation rows and
    columns; for two modes and ``m = 1`` this is ``P sigma P`` with the usual
    permutation ``P`` exchanging indices 1 and 3.
    """
    sigma = np.asarray(sigma, dtype=complex)
    n = n_modes_of(sigma)
    if isinstance(modes, (int, np.integer)):
        modes = [int(modes)]
    _mode_indices(n, modes)
    perm = np.arange(2 * n)
    for m in modes:
        perm[m], perm[m + n] = m + n, m
    return sigma[np.ix_(perm, perm)]


def quadrature_basis_change(n_modes: int, order: Sequence[int] | None = None) -> np.ndarray:
    r"""Matrix ``K`` mapping :math:`\mathbb{X}` to interleaved quadratures.

    Row pair ``(2k, 2k+1)`` holds :math:`q = a + a^\dagger` and
    :math:`p = -i(a - a^\dagger)` of mode ``order[k]``. ``K K^\dagger = 2``.
    """
    order = list(range(n_modes)) if order is None else list(order)
    if sorted(order) != list(range(n_modes)):
        raise ValueError(f"order {order} is not a permutation of {n_modes} modes")
    K = np.zeros((2 * n_modes, 2 * n_modes), dtype=complex)
    for k, m in enumerate(order):
        K[2 * k, m] = 1.0
        K[2 * k, m + n_modes] = 1.0
        K[2 * k + 1, m] = -1j
        K[2 * k + 1, m + n_modes] = 1j
    return K


def to_quadrature_basis(sigma: np.ndarray, order: Sequence[int] | None = None) -> np.ndarray:
    r"""Real symmetric :math:`K\sigma K^\dagger` in the interleaved ``(q, p)`` ordering.

    The vacuum maps to ``2 * identity``. Put the mode to be measured last in
    ``order``.
    """
    sigma = np.asarray(sigma, dtype=complex)
    K = quadrature_basis_change(n_modes_of(sigma), order)
    out = K @ sigma @ K.conj().T
    return out.real


def from_quadrature_basis(sigma_q: np.ndarray, order: Sequence[int] | None = None) -> np.ndarray:
    """Inverse of :func:`to_quadrature_basis` (uses ``K^-1 = K^dagger / 2``)."""
    sigma_q = np.asarray(sigma_q)
    K_inv = quadrature_basis_change(n_modes_of(sigma_q), order).conj().T / 2
    return K_inv @ sigma_q @ K_inv.conj().T


def purity(sigma: np.ndarray) -> float:
    """Product of squared symplectic eigenvalues (1 for pure states, larger when mixed)."""
    if not is_physical(sigma):
        raise NonPhysicalStateError("purity is only defined for physical covariance matrices")
    return float(np.prod(symplectic_eigenvalues(sigma) ** 2))
