r"""Perfect homodyne detection of one mode and the conditional state of the rest.

Conditioning happens in the quadrature basis with the measured mode last:

.. math::  \sigma_{out} = A - C\,(\pi_\theta B \pi_\theta)^{+} C^T,

with :math:`\pi_\theta` the projector on :math:`x_\theta = \cos\theta\,q + \sin\theta\,p`
and :math:`(\cdot)^+` the Moore-Penrose pseudoinverse. The result does not
depend on the measured value, so there is no outcome argument.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .generation import CovarianceElements
from .symplectic import (
    NonPhysicalStateError,
    from_quadrature_basis,
    is_physical,
    n_modes_of,
    partial_trace,
    to_quadrature_basis,
)

PINV_RCOND = 1e-12


def quadrature_projector(theta: float) -> np.ndarray:
    u = np.array([math.cos(theta), math.sin(theta)])
    return np.outer(u, u)


def pseudoinverse(M: np.ndarray, rcond: float = PINV_RCOND) -> np.ndarray:
    """Pseudoinverse of a real symmetric matrix by spectral decomposition."""
    M = 0.5 * (M + M.T)
    w, U = np.linalg.eigh(M)
    cutoff = rcond * max(np.abs(w).max(), np.finfo(float).tiny)
    inv = np.where(np.abs(w) > cutoff, 1.0 / np.where(w == 0, 1.0, w), 0.0)
    return (U * inv) @ U.T


def homodyne_condition(sigma: np.ndarray, measured: int = 1, theta: float = 0.0) -> np.ndarray:
    """Covariance matrix of the unmeasured modes after homodyning ``measured``.

    Returns the ``(2N-2, 2N-2)`` complex-basis matrix of the remaining modes,
    kept in their original relative order.
    """
    n = n_modes_of(sigma)
    if not 0 <= measured < n:
        raise ValueError(f"measured mode {measured} out of range for {n} modes")
    if n < 2:
        raise ValueError("need at least two modes to condition on one of them")
    if not is_physical(sigma):
        raise NonPhysicalStateError("covariance matrix is not physical")
    order = [m for m in range(n) if m != measured] + [measured]
    sq = to_quadrature_basis(sigma, order)
    k = 2 * (n - 1)
    A, C, B = sq[:k, :k], sq[:k, k:], sq[k:, k:]
    pi = quadrature_projector(theta)
    out = A - C @ pseudoinverse(pi @ B @ pi) @ C.T
    return from_quadrature_basis(0.5 * (out + out.T))


def conditional_elements(e: CovarianceElements, theta: float = 0.0, quoted: bool = False) -> np.ndarray:
    """Closed-form ``(a, c)`` state after homodyning the idler of a bi-squeezed state.

    The anomalous (upper-right) block carries ``exp(-2i theta)`` for a
    measurement of ``cos(theta) q + sin(theta) p``. With ``quoted=True`` the
    phase is placed the other way round, which corresponds to measuring at
    ``-theta``; it is kept for comparison only. At ``theta = 0`` both agree.
    """
    al, be, ga, de, ep, ze = e.as_tuple()
    W = np.array(
        [
            [al - ep**2 / (2 * be), de - ep * ze / (2 * be)],
            [de - ep * ze / (2 * be), ga - ze**2 / (2 * be)],
        ]
    )
    V = -cmath.exp((2j if quoted else -2j) * theta) / (2 * be) * np.array([[ep**2, ep * ze], [ep * ze, ze**2]])
    return np.block([[W, V], [V.conj(), W]]).astype(complex)


def nu_minus_after_homodyne(e: CovarianceElements, quoted: bool = False) -> float:
    """Closed-form smallest PT eigenvalue of the conditional ``(a, c)`` state.

    Args:
        quoted: evaluate the commonly quoted form, whose leading term lacks
            the factor 1/2 on ``alpha^2 + gamma^2 - 2 delta^2``. It does not
            agree with the conditional state; kept only for comparison.
    """
    al, be, ga, de, ep, ze = e.as_tuple()
    lead = al**2 + ga**2 - 2 * de**2
    if quoted:
        radicand = -4 * be * (al * ga - de**2) * (
            al * be * ga - be * de**2 - ga * ep**2 + 2 * de * ep * ze - al * ze**2
        ) + (al**2 * be + be * (ga**2 - 2 * de**2) - al * ep**2 + ze * (2 * de * ep - ga * ze)) ** 2
    else:
        lead /= 2
        # Same polynomial, regrouped so that it is an exact square when either
        # pump is off. The expanded form cancels to zero there and the root
        # then loses half the significant digits.
        p = al * be * de - al * ep * ze - be * de * ga + de * ze**2
        q = al * be * de - be * de * ga - de * ep**2 + ep * ga * ze
        radicand = (be * (al**2 - ga**2) - al * ep**2 + ga * ze**2) ** 2 - 4 * p * q
    nu2 = lead - (al * ep**2 - 2 * de * ep * ze + ga * ze**2) / (2 * be) - math.sqrt(max(radicand, 0.0)) / (2 * be)
    return math.sqrt(max(nu2, 0.0))


def _sh2(r_ab: float, r_bc: float) -> tuple[float, float]:
    return math.sinh(r_ab) ** 2, math.sinh(r_bc) ** 2


def _denominator(sa: float, sb: float) -> float:
    return 1 + 2 * sa + 2 * sb + 2 * sa * sb


def nu_minus_after_homodyne_equal_frequency(nu: float, r_ab: float, r_bc: float, quoted: bool = False) -> float:
    """Equal-frequency closed form of :func:`nu_minus_after_homodyne`.

    With ``quoted=True`` the commonly quoted ``nu = 1`` expression is
    evaluated verbatim (``sh_ab^6`` where ``sh_ab^4 sh_bc^2`` belongs and
    ``sh^2`` instead of ``sh`` in front of the root); it is kept for
    comparison only.
    """
    sa, sb = _sh2(r_ab, r_bc)
    den = _denominator(sa, sb)
    root = 1 + 3 * sa + 2 * sb + 8 * sa * sb + 2 * sa**2 + 10 * sa**2 * sb + 4 * sa**3 * sb
    if quoted:
        nu2 = (1 + 2 * sa + 2 * sb + 10 * sa * sb + 8 * sa**3 - 4 * sa * sb * math.sqrt(root)) / den
    else:
        nu2 = nu**2 * (1 + 2 * sa + 2 * sb + 10 * sa * sb + 8 * sa**2 * sb - 4 * math.sqrt(sa * sb * root)) / den
    return math.sqrt(max(nu2, 0.0))


@dataclass(frozen=True)
class LocalInvariants:
    a2: float
    b2: float
    c_plus_c_minus: float
    det: float
    symmetric: bool
    nu_minus: float


def local_invariants(sigma: np.ndarray, tol: float = 1e-8) -> LocalInvariants:
    """Local symplectic invariants of a two-mode state and the PT eigenvalue they imply."""
    if n_modes_of(sigma) != 2:
        raise ValueError("local invariants are defined for two-mode states")
    sigma = np.asarray(sigma, dtype=complex)
    a2 = np.linalg.det(partial_trace(sigma, [0])).real
    b2 = np.linalg.det(partial_trace(sigma, [1])).real
    cc = np.linalg.det(sigma[np.ix_([0, 2], [1, 3])]).real
    det = np.linalg.det(sigma).real
    delta = a2 + b2 - 2 * cc
    nu2 = 0.5 * (delta - math.sqrt(max(delta**2 - 4 * det, 0.0)))
    return LocalInvariants(a2, b2, cc, det, abs(a2 - b2) < tol, math.sqrt(max(nu2, 0.0)))


def equal_frequency_invariants(nu: float, r_ab: float, r_bc: float) -> tuple[float, float]:
    """Closed-form ``(a^2 = b^2, c_+ c_-)`` of the conditional state at equal frequencies."""
    sa, sb = _sh2(r_ab, r_bc)
    den = _denominator(sa, sb)
    a2 = nu**2 * (1 + 2 * sb + 2 * sa * sb) * (1 + 2 * sa) / den
    cc = -4 * nu**2 * (1 + sa) * sa * sb / den
    return a2, cc


def homodyne_entanglement_condition(nu: float, r_ab: float, r_bc: float) -> bool:
    """True when the conditional ``(a, c)`` state is entangled (equal frequencies)."""
    sa, sb = _sh2(r_ab, r_bc)
    return (1 + sa) * sa * sb / _denominator(sa, sb) > ((nu**2 - 1) / (4 * nu)) ** 2
