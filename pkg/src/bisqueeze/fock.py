"""Brute-force truncated Fock-space simulation of the two-pump squeezer.

This is an independent oracle for the Gaussian pipeline. It only handles
vacuum input, and it compares phase-insensitive quantities.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy import sparse
from scipy.linalg import expm
from scipy.sparse.linalg import expm_multiply

from .generation import PumpParameters, decouple


class TruncationError(ValueError):
    """Raised when the photon cutoff is too small for the requested squeezing."""


@dataclass(frozen=True)
class TruncatedSpace:
    """Three modes, each truncated at ``n_max`` photons.

    ``norm_tol`` bounds the probability allowed on the cutoff boundary (any
    mode holding ``n_max`` photons) before a run is rejected.
    """

    n_modes: int = 3
    n_max: int = 12
    norm_tol: float = 1e-5

    def __post_init__(self):
        if self.n_modes != 3:
            raise ValueError("the oracle simulates exactly three modes")
        if self.n_max < 1:
            raise ValueError(f"n_max must be positive, got {self.n_max}")
        if not self.norm_tol > 0:
            raise ValueError("norm_tol must be positive")

    @property
    def local_dim(self) -> int:
        return self.n_max + 1

    @property
    def dim(self) -> int:
        return self.local_dim**self.n_modes


def annihilation(space: TruncatedSpace, mode: int) -> sparse.csr_matrix:
    d = space.local_dim
    a = sparse.diags(np.sqrt(np.arange(1, d)), 1, format="csr")
    ops = [sparse.identity(d, format="csr")] * space.n_modes
    ops[mode] = a
    out = ops[0]
    for op in ops[1:]:
        out = sparse.kron(out, op, format="csr")
    return out


def _generator(p: PumpParameters, space: TruncatedSpace) -> sparse.csr_matrix:
    """``i (R_ab G_ab + R_bc G_bc)`` with ``G_mn = m^dagger n^dagger + m n``."""
    a, b, c = (annihilation(space, m) for m in range(3))
    g_ab = a.T @ b.T + a @ b
    g_bc = b.T @ c.T + b @ c
    return (1j * (p.R_ab * g_ab + p.R_bc * g_bc)).tocsr()


def check_cutoff(p: PumpParameters, space: TruncatedSpace) -> None:
    """A-priori guard: the idler occupation ``sinh^2 rho`` must stay below ``n_max / 4``."""
    rho = decouple(p).rho
    if np.sinh(rho) ** 2 >= space.n_max / 4:
        raise TruncationError(
            f"cutoff n_max={space.n_max} too small for rho={rho:.4g} (needs sinh^2 rho < n_max/4)"
        )


def build_unitary(p: PumpParameters, space: TruncatedSpace = TruncatedSpace()) -> np.ndarray:
    """Dense matrix exponential of the truncated generator."""
    check_cutoff(p, space)
    return expm(_generator(p, space).toarray())


def vacuum_state(space: TruncatedSpace) -> np.ndarray:
    psi = np.zeros(space.dim, dtype=complex)
    psi[0] = 1.0
    return psi


def boundary_weight(psi: np.ndarray, space: TruncatedSpace) -> float:
    """Probability of any mode sitting at the cutoff."""
    d = space.local_dim
    prob = np.abs(psi.reshape((d,) * space.n_modes)) ** 2
    inner = prob[(slice(0, d - 1),) * space.n_modes].sum()
    return float(prob.sum() - inner)


def evolve_vacuum(p: PumpParameters, space: TruncatedSpace = TruncatedSpace(), dense: bool = False) -> np.ndarray:
    """Apply the squeezer to the three-mode vacuum.

    Raises:
        TruncationError: if the cutoff guard fails or the evolved state puts
            more than ``space.norm_tol`` probability on the boundary.
    """
    check_cutoff(p, space)
    vac = vacuum_state(space)
    if dense:
        psi = build_unitary(p, space) @ vac
    else:
        psi = expm_multiply(_generator(p, space).tocsc(), vac)
    weight = boundary_weight(psi, space)
    if weight > space.norm_tol:
        raise TruncationError(f"boundary weight {weight:.2e} exceeds {space.norm_tol:.1e}; raise n_max")
    return psi


class OracleExpectations(NamedTuple):
    n_a: float
    n_b: float
    n_c: float
    a_dag_c: complex
    entropies: tuple[float, float, float]


def reduced_density_matrix(psi: np.ndarray, space: TruncatedSpace, mode: int) -> np.ndarray:
    d = space.local_dim
    t = np.moveaxis(psi.reshape((d,) * space.n_modes), mode, 0).reshape(d, -1)
    return t @ t.conj().T


def fock_entropy(rho: np.ndarray) -> float:
    """Von Neumann entropy (nats) of a density matrix."""
    w = np.linalg.eigvalsh(rho)
    w = w[w > 1e-16]
    return float(-(w * np.log(w)).sum())


def oracle_expectations(psi: np.ndarray, space: TruncatedSpace = TruncatedSpace()) -> OracleExpectations:
    """Occupations, ``<a^dagger c>`` and single-mode entropies by direct operator application."""
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (space.dim,):
        raise ValueError(f"state has shape {psi.shape}, expected ({space.dim},)")
    norm = np.vdot(psi, psi).real
    if abs(norm - 1) > 1e-8:
        raise ValueError(f"state is not normalized (norm {norm:.12g})")
    ops = [annihilation(space, m) for m in range(3)]
    moved = [op @ psi for op in ops]
    n = [float(np.vdot(v, v).real) for v in moved]
    a_dag_c = complex(np.vdot(moved[0], moved[2]))
    entropies = tuple(fock_entropy(reduced_density_matrix(psi, space, m)) for m in range(3))
    return OracleExpectations(n[0], n[1], n[2], a_dag_c, entropies)
