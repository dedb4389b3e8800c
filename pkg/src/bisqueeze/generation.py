r"""Bi-squeezed tripartite states from double parametric down-conversion.

Modes are ordered ``(a, b, c)`` with ``b`` the shared idler. The joint
squeezing unitary :math:`\exp\{i[R_{ab}G_{ab} + R_{bc}G_{bc}]\}` factorises
exactly into a beam splitter on ``(a, c)`` followed by two two-mode
squeezers, with parameters given by :func:`decouple`. In matrix form this is

.. math::  e^{R_{ab}K_{ab} + R_{bc}K_{bc}} = S_{ac}(\theta_{ac})\,S_{ab}(r_{ab})\,S_{bc}(r_{bc}),

where ``K_ab`` and ``K_bc`` are the derivatives at zero of the squeezer
matrices. The state is :math:`S^\dagger\sigma_{th}S` with ``S`` the product on
the right.
"""
from __future__ import annotations

import math
from dataclasses import astuple, dataclass
from typing import Sequence, Union

import numpy as np
from scipy import constants

from .symplectic import apply_transform, thermal

HBAR = constants.hbar
K_B = constants.k

MODES = {"a": 0, "b": 1, "c": 2}


@dataclass(frozen=True)
class PumpParameters:
    """Real two-mode squeezing strengths of the two pumps."""

    R_ab: float
    R_bc: float

    def __post_init__(self):
        if not (math.isfinite(self.R_ab) and math.isfinite(self.R_bc)):
            raise ValueError("pump parameters must be finite")


@dataclass(frozen=True)
class DecoupledParameters:
    r_ab: float
    r_bc: float
    theta_ac: float
    rho: float
    phi: float


@dataclass(frozen=True)
class ThermalSpec:
    """Angular frequencies (rad/s) of modes a, b, c and the temperature (K)."""

    omega_a: float
    omega_b: float
    omega_c: float
    temperature: float

    def __post_init__(self):
        for name in ("omega_a", "omega_b", "omega_c"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        if not self.temperature >= 0:
            raise ValueError(f"temperature must be non-negative, got {self.temperature}")

    @classmethod
    def from_hz(cls, f_a: float, f_b: float, f_c: float, temperature: float) -> "ThermalSpec":
        return cls(2 * np.pi * f_a, 2 * np.pi * f_b, 2 * np.pi * f_c, temperature)

    @property
    def omegas(self) -> tuple[float, float, float]:
        return (self.omega_a, self.omega_b, self.omega_c)

    def nus(self) -> tuple[float, float, float]:
        return tuple(thermal_eigenvalue(w, self.temperature) for w in self.omegas)


@dataclass(frozen=True)
class CovarianceElements:
    """The six independent entries of a bi-squeezed covariance matrix."""

    alpha: float
    beta: float
    gamma: float
    delta: float
    epsilon: float
    zeta: float

    def as_tuple(self) -> tuple[float, ...]:
        return astuple(self)

    def matrix(self) -> np.ndarray:
        """Assemble the 6x6 complex-basis covariance matrix."""
        al, be, ga, de, ep, ze = self.as_tuple()
        W = np.array([[al, 0, de], [0, be, 0], [de, 0, ga]], dtype=float)
        V = np.array([[0, ep, 0], [ep, 0, ze], [0, ze, 0]], dtype=float)
        return np.block([[W, V], [V, W]]).astype(complex)

    @classmethod
    def from_matrix(cls, sigma: np.ndarray) -> "CovarianceElements":
        s = np.real(np.asarray(sigma))
        return cls(s[0, 0], s[1, 1], s[2, 2], s[0, 2], s[0, 4], s[1, 5])


def dimensionless_frequency(omega: float, temperature: float) -> float:
    """``hbar omega / (k_B T)``; infinite at zero temperature."""
    if temperature == 0:
        return math.inf
    return HBAR * omega / (K_B * temperature)


def thermal_eigenvalue(omega: float, temperature: float) -> float:
    """Symplectic eigenvalue ``coth(hbar omega / 2 k_B T)`` of a thermal mode."""
    if not omega > 0:
        raise ValueError(f"frequency must be positive, got {omega}")
    if temperature < 0:
        raise ValueError(f"temperature must be non-negative, got {temperature}")
    x = dimensionless_frequency(omega, temperature)
    if math.isinf(x):
        return 1.0
    # coth(x/2) = 1 + 2/(e^x - 1), accurate for large x
    return 1.0 + 2.0 / math.expm1(x)


def thermal_state(spec: ThermalSpec) -> np.ndarray:
    return thermal(spec.nus())


def decouple(p: PumpParameters) -> DecoupledParameters:
    """Parameters of the factorised representation of the joint squeezer."""
    rho = math.hypot(p.R_ab, p.R_bc)
    if rho == 0:
        return DecoupledParameters(0.0, 0.0, 0.0, 0.0, 0.0)
    phi = math.atan2(p.R_bc, p.R_ab)
    # single pump: the factorisation is trivial, skip the roundoff
    if p.R_bc == 0:
        return DecoupledParameters(p.R_ab, 0.0, 0.0, rho, phi)
    if p.R_ab == 0:
        return DecoupledParameters(0.0, p.R_bc, 0.0, rho, phi)
    # asinh/atanh forms of ln(x + sqrt(1 + x^2)) and (1/2) ln((1 + y)/(1 - y))
    r_ab = math.asinh(math.cos(phi) * math.sinh(rho))
    r_bc = math.atanh(math.sin(phi) * math.tanh(rho))
    # arctan(tan(phi)/cosh(rho)) on the branch continuous with phi
    theta_ac = math.atan2(math.sin(phi), math.cos(phi) * math.cosh(rho)) - phi
    return DecoupledParameters(r_ab, r_bc, theta_ac, rho, phi)


def _pair(pair: Union[str, Sequence[int]]) -> tuple[int, int]:
    if isinstance(pair, str):
        if len(pair) != 2 or any(ch not in MODES for ch in pair):
            raise ValueError(f"invalid mode pair {pair!r}")
        i, j = MODES[pair[0]], MODES[pair[1]]
    else:
        i, j = pair
    if i == j:
        raise ValueError(f"mode pair must be distinct, got {pair!r}")
    return int(i), int(j)


def two_mode_squeezer(pair: Union[str, Sequence[int]], r: float, n_modes: int = 3) -> np.ndarray:
    """Two-mode squeezer: ``a_i -> cosh r a_i + sinh r a_j^dagger`` and vice versa."""
    i, j = _pair(pair)
    if max(i, j) >= n_modes:
        raise ValueError(f"pair {pair!r} out of range for {n_modes} modes")
    n = n_modes
    S = np.eye(2 * n, dtype=complex)
    ch, sh = math.cosh(r), math.sinh(r)
    for k in (i, j):
        S[k, k] = S[k + n, k + n] = ch
    S[i, j + n] = S[j, i + n] = S[j + n, i] = S[i + n, j] = sh
    return S


def beam_splitter(pair: Union[str, Sequence[int]], theta: float, n_modes: int = 3) -> np.ndarray:
    """Real rotation by ``theta`` mixing the two modes (and their conjugates)."""
    i, j = _pair(pair)
    if max(i, j) >= n_modes:
        raise ValueError(f"pair {pair!r} out of range for {n_modes} modes")
    n = n_modes
    S = np.eye(2 * n, dtype=complex)
    c, s = math.cos(theta), math.sin(theta)
    for off in (0, n):
        S[i + off, i + off] = S[j + off, j + off] = c
        S[i + off, j + off] = s
        S[j + off, i + off] = -s
    return S


def beam_splitter_ac(theta: float) -> np.ndarray:
    return beam_splitter("ac", theta)


def squeezing_generator(pair: Union[str, Sequence[int]], n_modes: int = 3) -> np.ndarray:
    """``d/dr two_mode_squeezer(pair, r)`` at ``r = 0``."""
    i, j = _pair(pair)
    n = n_modes
    K = np.zeros((2 * n, 2 * n), dtype=complex)
    K[i, j + n] = K[j, i + n] = K[j + n, i] = K[i + n, j] = 1.0
    return K


def beam_splitter_generator(pair: Union[str, Sequence[int]], n_modes: int = 3) -> np.ndarray:
    """``d/dtheta beam_splitter(pair, theta)`` at ``theta = 0``."""
    i, j = _pair(pair)
    n = n_modes
    J = np.zeros((2 * n, 2 * n), dtype=complex)
    for off in (0, n):
        J[i + off, j + off] = 1.0
        J[j + off, i + off] = -1.0
    return J


def combined_generator(p: PumpParameters) -> np.ndarray:
    """``R_ab K_ab + R_bc K_bc``; its matrix exponential represents the joint squeezer."""
    return p.R_ab * squeezing_generator("ab") + p.R_bc * squeezing_generator("bc")


def bisqueezing_transform(p: PumpParameters) -> np.ndarray:
    """``S_ac(theta_ac) S_ab(r_ab) S_bc(r_bc)`` from the decoupled parameters."""
    d = decouple(p)
    return beam_splitter_ac(d.theta_ac) @ two_mode_squeezer("ab", d.r_ab) @ two_mode_squeezer("bc", d.r_bc)


def _nus(thermal_input) -> tuple[float, float, float]:
    if isinstance(thermal_input, ThermalSpec):
        return thermal_input.nus()
    nus = tuple(float(x) for x in thermal_input)
    if len(nus) != 3:
        raise ValueError(f"expected three symplectic eigenvalues, got {len(nus)}")
    if min(nus) < 1:
        raise ValueError(f"thermal symplectic eigenvalues must be >= 1, got {nus}")
    return nus


def bisqueezed_state(p: PumpParameters, thermal_input: Union[ThermalSpec, Sequence[float]] = (1, 1, 1)) -> np.ndarray:
    """Covariance matrix of the thermal input after both pumps.

    ``thermal_input`` is either a :class:`ThermalSpec` or the triple
    ``(nu_a, nu_b, nu_c)``.
    """
    sigma_th = thermal(_nus(thermal_input))
    return apply_transform(sigma_th, bisqueezing_transform(p))


def covariance_elements(d: DecoupledParameters, nus: Sequence[float], quoted: bool = False) -> CovarianceElements:
    """Closed-form entries of the bi-squeezed covariance matrix.

    Args:
        d: decoupled squeezing parameters.
        nus: thermal symplectic eigenvalues ``(nu_a, nu_b, nu_c)``.
        quoted: if True, evaluate the gamma entry with the ``sin^2(theta)``
            factor of the commonly quoted form instead of ``sin(2 theta)``.
            That variant does not match the matrix product when
            ``nu_a != nu_c``; it is kept only to report the discrepancy.
    """
    na, nb, nc = (float(x) for x in nus)
    ch, sh = math.cosh(d.r_ab), math.sinh(d.r_ab)
    cb, sb = math.cosh(d.r_bc), math.sinh(d.r_bc)
    th = d.theta_ac
    diff = nc - na
    s2 = math.sin(th) ** 2
    s2t = math.sin(2 * th)
    mix_a = na + diff * s2  # input variance landing on a after the beam splitter
    mix_c = nc - diff * s2
    sh2bc = math.sinh(2 * d.r_bc)

    alpha = mix_a * ch**2 + nb * sh**2
    beta = (
        nb * ch**2 * cb**2
        + mix_a * sh**2 * cb**2
        - diff / 2 * s2t * sh * sh2bc
        + mix_c * sb**2
    )
    gamma = (
        mix_c * cb**2
        - diff / 2 * (s2 if quoted else s2t) * sh * sh2bc
        + nb * ch**2 * sb**2
        + mix_a * sh**2 * sb**2
    )
    delta = -0.5 * diff * s2t * cb * ch + 0.5 * (nb + mix_a) * math.sinh(2 * d.r_ab) * sb
    epsilon = 0.5 * math.sinh(2 * d.r_ab) * cb * (nb + mix_a) - diff / 2 * s2t * sb * ch
    zeta = 0.25 * (
        -2 * diff * math.cosh(2 * d.r_bc) * s2t * sh
        + (na + 2 * nb + nc) * ch**2 * sh2bc
        - diff * math.cos(2 * th) * (sh**2 - 1) * sh2bc
    )
    return CovarianceElements(alpha, beta, gamma, delta, epsilon, zeta)


def elements_for(p: PumpParameters, thermal_input: Union[ThermalSpec, Sequence[float]] = (1, 1, 1)) -> CovarianceElements:
    """Covariance elements read off the matrix-product state."""
    return CovarianceElements.from_matrix(bisqueezed_state(p, thermal_input))
