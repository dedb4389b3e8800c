"""Closed forms valid at equal mode frequencies and at low temperature.

Everything here is a cross-check on the exact pipeline in
:mod:`bisqueeze.generation` and :mod:`bisqueeze.measures`, never a replacement
for it. Throughout, ``a = sinh^2 r_ab`` and ``b = sinh^2 r_bc``.

Several functions take ``quoted=True`` to evaluate the commonly quoted
variant of a formula where that variant disagrees with the exact pipeline.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .generation import HBAR, K_B, CovarianceElements


def _sh2(r_ab: float, r_bc: float) -> tuple[float, float]:
    return math.sinh(r_ab) ** 2, math.sinh(r_bc) ** 2


def _check_nu(nu: float) -> None:
    if not nu >= 1:
        raise ValueError(f"symplectic eigenvalue must be >= 1, got {nu}")


def coth_half(x: float) -> float:
    """``coth(x / 2)``, equal to 1 at ``x = inf``."""
    if math.isinf(x):
        return 1.0
    return 1.0 + 2.0 / math.expm1(x)


@dataclass(frozen=True)
class RegimeSpec:
    """Dimensionless frequencies ``Omega_m = hbar omega_m / k_B T``.

    Modes a, b, c sit at ``Omega - delta_Omega``, ``Omega`` and
    ``Omega + delta_Omega``.
    """

    Omega: float
    delta_Omega: float = 0.0

    def __post_init__(self):
        if not self.Omega > 0:
            raise ValueError(f"Omega must be positive, got {self.Omega}")
        if not abs(self.delta_Omega) <= self.Omega:
            raise ValueError("|delta_Omega| must not exceed Omega")

    @property
    def nu(self) -> float:
        return coth_half(self.Omega)

    def exact_nus(self) -> tuple[float, float, float]:
        O, d = self.Omega, self.delta_Omega
        return coth_half(O - d), coth_half(O), coth_half(O + d)

    def expanded_nus(self) -> tuple[float, float, float]:
        """First-order expansion ``coth(Omega/2) (1 -+ delta_Omega / sinh Omega)`` for (a, b, c)."""
        nu = self.nu
        if math.isinf(self.Omega):
            return nu, nu, nu
        shift = self.delta_Omega / math.sinh(self.Omega)
        return nu * (1 + shift), nu, nu * (1 - shift)


def equal_frequency_elements(nu: float, r_ab: float, r_bc: float) -> CovarianceElements:
    """Covariance elements when all three modes share the eigenvalue ``nu``."""
    _check_nu(nu)
    c2a = math.cosh(2 * r_ab)
    s2a = math.sinh(2 * r_ab)
    chb, shb = math.cosh(r_bc), math.sinh(r_bc)
    return CovarianceElements(
        alpha=nu * c2a,
        beta=nu * (c2a * chb**2 + shb**2),
        gamma=nu * (c2a * shb**2 + chb**2),
        delta=nu * s2a * shb,
        epsilon=nu * s2a * chb,
        zeta=nu * math.cosh(r_ab) ** 2 * math.sinh(2 * r_bc),
    )


def equal_frequency_nu_minus(nu: float, r_ab: float, r_bc: float, pair: str, quoted: bool = False) -> float:
    """Smallest PT eigenvalue of a two-mode reduction at equal frequencies.

    Args:
        nu: common thermal symplectic eigenvalue.
        r_ab: decoupled squeezing of the (a, b) pair.
        r_bc: decoupled squeezing of the (b, c) pair.
        pair: one of ``"ab"``, ``"bc"``, ``"ac"``.
        quoted: for ``"ac"``, use the quoted radicand that lacks the
            ``-2 a^2 b`` term. The other pairs are unaffected.

    Returns:
        The eigenvalue ``nu_tilde_minus``.
    """
    _check_nu(nu)
    a, b = _sh2(r_ab, r_bc)
    if pair == "ab":
        root = 4 * a + 4 * a**2 + b**2 + 4 * a * b + 2 * a * b**2 + 4 * a**2 * b + a**2 * b**2
        return nu * (1 + 2 * a + b + a * b - math.sqrt(root))
    if pair == "bc":
        root = a**2 + 4 * (1 + a) ** 2 * b * (1 + b)
        return nu * (1 + a + 2 * b + 2 * a * b - math.sqrt(root))
    if pair == "ac":
        root = 1 + 2 * a + 2 * b + a**2 + b**2 + 2 * a * b**2 + a**2 * b**2
        if not quoted:
            root -= 2 * a**2 * b
        return nu * (math.sqrt(root) - abs(a - b - a * b))
    raise ValueError(f"pair must be one of 'ab', 'bc', 'ac', got {pair!r}")


class EntanglementConditions(NamedTuple):
    ab: bool
    bc: bool
    ac: bool
    ac_after_homodyne: bool


def entanglement_conditions(nu: float, r_ab: float, r_bc: float, quoted: bool = False) -> EntanglementConditions:
    """Inequalities equivalent to ``nu_tilde_minus < 1`` for each reduction.

    With ``k = (nu - 1) / (2 nu)`` the exact (a, b) and (b, c) conditions are
    ``a > k^2 + k(2a + b + ab)`` and ``b(1 + a) > k^2 + k(a + 2b + 2ab)``.
    ``quoted=True`` swaps in the quoted (b, c) condition ``b > ...`` and the
    quoted (a, c) right-hand side with its extra ``2 a^2 b``; the quoted (b, c)
    form does not track the eigenvalue.
    """
    _check_nu(nu)
    a, b = _sh2(r_ab, r_bc)
    k = (nu - 1) / (2 * nu)
    ab = a > k**2 + k * (2 * a + b + a * b)
    if quoted:
        bc = b > k**2 + k * (a + 2 * b + 2 * a * b)
    else:
        bc = b * (1 + a) > k**2 + k * (a + 2 * b + 2 * a * b)
    rhs = 2 / nu * abs(a - b - a * b) + 2 * a + 2 * b + 2 * a * b
    if quoted:
        rhs += 2 * a**2 * b
    ac = (1 - nu**2) / nu**2 > rhs
    den = 1 + 2 * a + 2 * b + 2 * a * b
    after = (1 + a) * a * b / den > ((nu**2 - 1) / (4 * nu)) ** 2
    return EntanglementConditions(ab, bc, ac, after)


def zero_temperature_conditions(r_ab: float, r_bc: float, quoted: bool = False) -> EntanglementConditions:
    """The conditions at ``nu = 1``.

    By default this is :func:`entanglement_conditions` at ``nu = 1``. With
    ``quoted=True`` the quoted zero-temperature block is evaluated literally;
    its (b, c) line ``1 > (1 - th_ab^2)(1 - th_bc^2) / (2 (1 + th_bc^2))`` holds
    even at ``r_bc = 0``, where the (b, c) reduction is a product state.
    """
    if not quoted:
        return entanglement_conditions(1.0, r_ab, r_bc)
    a, b = _sh2(r_ab, r_bc)
    ta, tb = math.tanh(r_ab) ** 2, math.tanh(r_bc) ** 2
    return EntanglementConditions(
        ab=a > 0,
        bc=1 > 0.5 * (1 - ta) * (1 - tb) / (1 + tb),
        ac=0 > 2 * abs(a - b - a * b) + 2 * a + 2 * b + 2 * a * b + 2 * a**2 * b,
        ac_after_homodyne=a * b > 0,
    )


def local_temperature_b(omega: float, r_ab: float, r_bc: float) -> float:
    """Temperature of the thermal state with the idler's occupation, for vacuum input."""
    if not omega > 0:
        raise ValueError(f"frequency must be positive, got {omega}")
    a, b = _sh2(r_ab, r_bc)
    occupation = a + b + a * b
    if occupation == 0:
        return 0.0
    return HBAR * omega / K_B / math.log1p(1 / occupation)


def g1_equal_frequency(nu: float, r_ab: float, r_bc: float, quoted: bool = False) -> float:
    """First-order coherence of (a, c) at equal frequencies.

    ``quoted=True`` uses ``ch_bc^2`` in the second factor instead of
    ``ch_ab^2``; only the latter matches the occupation of mode c.
    """
    _check_nu(nu)
    sa, sb = math.sinh(r_ab), math.sinh(r_bc)
    ca = math.cosh(r_ab)
    second = math.cosh(r_bc) ** 2 if quoted else ca**2
    den = (nu - 1 + 2 * nu * sa**2) * (nu - 1 + 2 * nu * sb**2 * second)
    if den == 0:
        return 0.0
    return 2 * nu * sa * sb * ca / math.sqrt(den)


def g1_low_temperature(Omega: float, r_ab: float, r_bc: float, quoted: bool = False) -> float:
    """Leading correction to ``g1 = 1`` for ``Omega >> 1``.

    Returns ``1 - (1/a + 1/(b ch_ab^2)) e^(-Omega) / 2``; ``quoted=True``
    flips the sign of the correction. Coherence cannot exceed 1, so only the
    minus sign is consistent with the exact value.

    Raises:
        ValueError: if ``r_ab`` or ``r_bc`` is below ``e^(-Omega)``, where the
            expansion is not valid.
    """
    floor = math.exp(-Omega)
    if r_ab < floor or r_bc < floor:
        raise ValueError(f"low-temperature expansion needs r_ab, r_bc >= e^-Omega = {floor:.3e}")
    a, b = _sh2(r_ab, r_bc)
    corr = 0.5 * (1 / a + 1 / (b * math.cosh(r_ab) ** 2)) * floor
    return 1 + corr if quoted else 1 - corr


def g1_limits(nu: float, r_ab: float, r_bc: float, Omega: float = math.inf, quoted: bool = False) -> float:
    """Dispatch to the low-temperature form for finite ``Omega``, else the equal-frequency form."""
    if math.isinf(Omega):
        return g1_equal_frequency(nu, r_ab, r_bc, quoted)
    return g1_low_temperature(Omega, r_ab, r_bc, quoted)
