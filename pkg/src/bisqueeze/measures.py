"""Entanglement and coherence figures of merit for Gaussian covariance matrices."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .generation import MODES, CovarianceElements
from .symplectic import (
    NonPhysicalStateError,
    is_physical,
    n_modes_of,
    partial_trace,
    partial_transpose,
    symplectic_eigenvalues,
)

_LIMIT_EPS = 1e-14
SYMMETRY_TOL = 1e-8


@dataclass(frozen=True)
class EntanglementReport:
    nu_tilde_minus: float
    negativity: float
    log_negativity: float
    entanglement_of_formation: float
    # entanglement of formation is only meaningful for symmetric two-mode states
    symmetric: bool


@dataclass(frozen=True)
class CoherenceReport:
    pair_coherence: float
    g1: float
    spdm: np.ndarray
    relative_entropy_coherence: float


def _require_physical(sigma: np.ndarray) -> None:
    if not is_physical(sigma):
        raise NonPhysicalStateError("covariance matrix is not physical")


def _xlogx(x: float) -> float:
    return 0.0 if x < _LIMIT_EPS else x * math.log(x)


def negativity_from_nu(nu: float) -> float:
    return max(0.0, (1 - nu) / (2 * nu))


def log_negativity_from_nu(nu: float) -> float:
    return max(0.0, -math.log(nu))


def _f(x: float, sign: int) -> float:
    return _xlogx((x + sign) ** 2 / (4 * x))


def entanglement_of_formation_from_nu(nu: float) -> float:
    """``f_+(nu) - f_-(nu)`` below ``nu = 1``, zero otherwise."""
    if nu >= 1:
        return 0.0
    return max(0.0, _f(nu, +1) - _f(nu, -1))


def smallest_pt_eigenvalue(sigma: np.ndarray, transposed_modes=None) -> float:
    """Smallest symplectic eigenvalue of the partial transpose.

    ``transposed_modes`` defaults to the last mode.
    """
    n = n_modes_of(sigma)
    if transposed_modes is None:
        transposed_modes = n - 1
    return float(symplectic_eigenvalues(partial_transpose(sigma, transposed_modes)).min())


def negativity(sigma: np.ndarray, transposed_modes=None) -> EntanglementReport:
    """Entanglement report for the bipartition set by ``transposed_modes``.

    For a two-mode state the default transposes the second mode.
    """
    _require_physical(sigma)
    nu = smallest_pt_eigenvalue(sigma, transposed_modes)
    symmetric = False
    if n_modes_of(sigma) == 2:
        det_1 = np.linalg.det(partial_trace(sigma, [0])).real
        det_2 = np.linalg.det(partial_trace(sigma, [1])).real
        symmetric = abs(det_1 - det_2) <= SYMMETRY_TOL
    return EntanglementReport(
        nu_tilde_minus=nu,
        negativity=negativity_from_nu(nu),
        log_negativity=log_negativity_from_nu(nu),
        entanglement_of_formation=entanglement_of_formation_from_nu(nu),
        symmetric=symmetric,
    )


def reduced_nu_minus_analytic(e: CovarianceElements, pair: str) -> float:
    """Closed-form smallest PT eigenvalue of a two-mode reduction of a bi-squeezed state."""
    al, be, ga, de, ep, ze = e.as_tuple()
    if pair == "ab":
        return 0.5 * (al + be - math.sqrt((al - be) ** 2 + 4 * ep**2))
    if pair == "bc":
        return 0.5 * (be + ga - math.sqrt((be - ga) ** 2 + 4 * ze**2))
    if pair == "ac":
        return 0.5 * (math.sqrt((al + ga) ** 2 - 4 * de**2) - abs(al - ga))
    raise ValueError(f"pair must be one of 'ab', 'bc', 'ac', got {pair!r}")


def bipartition_negativities(sigma: np.ndarray) -> dict[str, float]:
    """Negativities of the three one-versus-two bipartitions of a three-mode state."""
    if n_modes_of(sigma) != 3:
        raise ValueError("expected a three-mode covariance matrix")
    _require_physical(sigma)
    names = {0: "a-bc", 1: "b-ac", 2: "c-ab"}
    return {names[m]: negativity_from_nu(smallest_pt_eigenvalue(sigma, m)) for m in range(3)}


def tripartite_negativity(sigma: np.ndarray) -> float:
    """Geometric mean of the three bipartition negativities."""
    parts = bipartition_negativities(sigma)
    return float(np.prod(list(parts.values())) ** (1 / 3))


def pair_negativity(sigma: np.ndarray, pair: str) -> float:
    """Negativity of the two-mode reduction on ``pair`` (e.g. ``"ac"``)."""
    keep = [MODES[ch] for ch in pair]
    return negativity(partial_trace(sigma, keep)).negativity


def number_expectation(sigma: np.ndarray, mode: int) -> float:
    n = n_modes_of(sigma)
    if not 0 <= mode < n:
        raise ValueError(f"mode index {mode} out of range for {n} modes")
    return 0.5 * (float(np.real(sigma[mode, mode])) - 1)


def _h(x: float, sign: int) -> float:
    return _xlogx((x + sign) / 2)


def von_neumann_entropy(sigma: np.ndarray, base: float = math.e) -> float:
    _require_physical(sigma)
    s = sum(_h(nu, +1) - _h(nu, -1) for nu in symplectic_eigenvalues(sigma))
    return max(0.0, s) / math.log(base)


def relative_entropy_of_coherence(sigma: np.ndarray, base: float = 2.0) -> float:
    """Relative entropy to the closest product of thermal states (zero first moments)."""
    _require_physical(sigma)
    n = n_modes_of(sigma)
    total = -von_neumann_entropy(sigma)
    for k in range(n):
        nbar = max(0.0, number_expectation(sigma, k))
        total += _xlogx(nbar + 1) - _xlogx(nbar)
    return max(0.0, total) / math.log(base)


def first_order_coherence(sigma: np.ndarray, m: int, n: int, base: float = 2.0) -> CoherenceReport:
    """Interference coherence between modes ``m`` and ``n``.

    ``pair_coherence`` is the real part of ``<a_m^dagger a_n> = sigma[n, m] / 2``.
    """
    if m == n:
        raise ValueError("first-order coherence needs two distinct modes")
    N = n_modes_of(sigma)
    for k in (m, n):
        if not 0 <= k < N:
            raise ValueError(f"mode index {k} out of range for {N} modes")
    g_mn = 0.5 * complex(sigma[n, m])
    n_m = number_expectation(sigma, m)
    n_n = number_expectation(sigma, n)
    g1 = 0.0 if n_m <= 0 or n_n <= 0 else g_mn.real / math.sqrt(n_m * n_n)
    spdm = np.array([[n_m, g_mn], [g_mn.conjugate(), n_n]])
    reduced = partial_trace(sigma, [m, n])
    return CoherenceReport(
        pair_coherence=g_mn.real,
        g1=g1,
        spdm=spdm,
        relative_entropy_coherence=relative_entropy_of_coherence(reduced, base=base),
    )


def purities_from_elements(e: CovarianceElements) -> dict[str, float]:
    """Closed-form purities (products of squared symplectic eigenvalues) of all reductions."""
    al, be, ga, de, ep, ze = e.as_tuple()
    return {
        "ab": (al * be - ep**2) ** 2,
        "bc": (be * ga - ze**2) ** 2,
        "ac": (al * ga - de**2) ** 2,
        "a": al**2,
        "b": be**2,
        "c": ga**2,
    }


def entropy_of_thermal_mode(nu: float, base: float = math.e) -> float:
    """Entropy of a single thermal mode with symplectic eigenvalue ``nu``."""
    return (_h(nu, +1) - _h(nu, -1)) / math.log(base)


def report_dict(report: EntanglementReport | CoherenceReport, prefix: Optional[str] = None) -> dict:
    """Flatten a report into ``key -> value`` pairs (matrices are skipped)."""
    out = {}
    for key, value in vars(report).items():
        if isinstance(value, np.ndarray):
            continue
        out[f"{prefix}{key}" if prefix else key] = value
    return out
