import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bisqueeze.generation import (
    HBAR,
    K_B,
    PumpParameters,
    bisqueezed_state,
    covariance_elements,
    decouple,
    two_mode_squeezer,
)
from bisqueeze.measures import first_order_coherence, negativity, number_expectation
from bisqueeze.regimes import (
    RegimeSpec,
    coth_half,
    entanglement_conditions,
    equal_frequency_elements,
    equal_frequency_nu_minus,
    g1_equal_frequency,
    g1_limits,
    g1_low_temperature,
    local_temperature_b,
    zero_temperature_conditions,
)
from bisqueeze.symplectic import apply_transform, partial_trace, vacuum

PAIRS = {"ab": [0, 1], "bc": [1, 2], "ac": [0, 2]}
GRID = [(0.1, 0.1), (0.5, 0.5), (0.3, 1.2), (1.6, 0.4), (2.0, 2.0)]


@pytest.mark.parametrize("nu", [1.0, 1.4, 3.0])
@pytest.mark.parametrize("R", GRID)
def test_equal_frequency_elements(nu, R):
    p = PumpParameters(*R)
    d = decouple(p)
    closed = equal_frequency_elements(nu, d.r_ab, d.r_bc)
    np.testing.assert_allclose(closed.as_tuple(), covariance_elements(d, (nu,) * 3).as_tuple(), rtol=1e-12)
    np.testing.assert_allclose(closed.matrix(), bisqueezed_state(p, (nu,) * 3), rtol=1e-9, atol=1e-9)


def test_single_squeezer_elements():
    e = equal_frequency_elements(1.3, 0.7, 0.0)
    assert e.delta == 0 and e.zeta == 0
    assert e.epsilon == pytest.approx(1.3 * math.sinh(1.4))


def test_reference_element_value():
    # same value as the matrix-product oracle in test_generation
    assert equal_frequency_elements(1.0, 0.5191, 0.4605).delta == pytest.approx(0.5890410500574271, abs=1e-12)


@pytest.mark.parametrize("nu", [1.0, 1.25, 2.0])
@pytest.mark.parametrize("R", GRID)
def test_equal_frequency_eigenvalues_match_numerics(nu, R):
    p = PumpParameters(*R)
    d = decouple(p)
    sigma = bisqueezed_state(p, (nu,) * 3)
    for pair, keep in PAIRS.items():
        numeric = negativity(partial_trace(sigma, keep)).nu_tilde_minus
        assert equal_frequency_nu_minus(nu, d.r_ab, d.r_bc, pair) == pytest.approx(numeric, abs=1e-9)


def test_reference_eigenvalues_at_vacuum():
    # numerical PPT of S_ab(0.3) S_bc(0.3) on the vacuum
    expected = {"ab": 0.613608446298179, "bc": 0.5935511644022105, "ac": 1.169620956133299}
    for pair, value in expected.items():
        assert equal_frequency_nu_minus(1.0, 0.3, 0.3, pair) == pytest.approx(value, abs=1e-12)


def test_quoted_signal_radicand_is_off():
    assert abs(equal_frequency_nu_minus(1.0, 0.3, 0.3, "ac", quoted=True) - 1.169620956133299) > 1e-4


def test_zero_squeezing_returns_nu():
    for pair in PAIRS:
        assert equal_frequency_nu_minus(1.7, 0, 0, pair) == pytest.approx(1.7)
    with pytest.raises(ValueError):
        equal_frequency_nu_minus(1.0, 0.1, 0.1, "ca")
    with pytest.raises(ValueError):
        equal_frequency_nu_minus(0.9, 0.1, 0.1, "ab")


def test_conditions_track_eigenvalues():
    for nu in (1.0, 1.1, 1.5, 3.0):
        for r_ab in np.linspace(0, 1.6, 17):
            for r_bc in np.linspace(0, 1.6, 17):
                cond = entanglement_conditions(nu, r_ab, r_bc)
                for pair in PAIRS:
                    value = equal_frequency_nu_minus(nu, r_ab, r_bc, pair)
                    if abs(value - 1) > 1e-9:
                        assert getattr(cond, pair) == (value < 1), (nu, r_ab, r_bc, pair)


def test_quoted_idler_signal_condition_misses_entanglement():
    # found by scanning: the quoted inequality says no, the eigenvalue says yes
    assert equal_frequency_nu_minus(1.5, 0.3, 0.25, "bc") < 1
    assert entanglement_conditions(1.5, 0.3, 0.25).bc
    assert not entanglement_conditions(1.5, 0.3, 0.25, quoted=True).bc


@given(st.floats(1e-3, 2), st.floats(1e-3, 2))
def test_vacuum_conditions(r_ab, r_bc):
    assert tuple(zero_temperature_conditions(r_ab, r_bc)) == (True, True, False, True)


def test_quoted_zero_temperature_line_holds_without_second_pump():
    assert zero_temperature_conditions(0.5, 0.0, quoted=True).bc
    assert not zero_temperature_conditions(0.5, 0.0).bc


def test_onset_needs_squeezing():
    assert not entanglement_conditions(1.5, 0.01, 0.01).ab
    assert equal_frequency_nu_minus(1.5, 0.01, 0.01, "ab") > 1


def test_local_temperature():
    omega = 2 * math.pi * 5e9
    assert local_temperature_b(omega, 0, 0) == 0
    for r_ab, r_bc in GRID:
        T = local_temperature_b(omega, r_ab, r_bc)
        sigma = apply_transform(vacuum(3), two_mode_squeezer("ab", r_ab) @ two_mode_squeezer("bc", r_bc))
        nb = number_expectation(sigma, 1)
        assert coth_half(HBAR * omega / (K_B * T)) == pytest.approx(2 * nb + 1, rel=1e-10)


@given(st.floats(0, 1.5), st.floats(0, 1.5), st.floats(0.01, 0.2))
def test_local_temperature_increases(r_ab, r_bc, step):
    omega = 1e10
    assert local_temperature_b(omega, r_ab + step, r_bc) > local_temperature_b(omega, r_ab, r_bc)
    assert local_temperature_b(omega, r_ab, r_bc + step) > local_temperature_b(omega, r_ab, r_bc)


@pytest.mark.parametrize("nu", [1.0, 1.01, 2.0])
def test_equal_frequency_g1(nu):
    p = PumpParameters(0.5, 0.5)
    d = decouple(p)
    full = first_order_coherence(bisqueezed_state(p, (nu,) * 3), 0, 2).g1
    assert g1_equal_frequency(nu, d.r_ab, d.r_bc) == pytest.approx(full, abs=1e-12)
    if nu > 1:
        assert abs(g1_equal_frequency(nu, d.r_ab, d.r_bc, quoted=True) - full) > 1e-6


def test_low_temperature_g1():
    Omega = 16.0
    p = PumpParameters(0.5, 0.5)
    d = decouple(p)
    full = first_order_coherence(bisqueezed_state(p, (coth_half(Omega),) * 3), 0, 2).g1
    assert g1_low_temperature(Omega, d.r_ab, d.r_bc) == pytest.approx(full, abs=math.exp(-Omega))
    assert g1_low_temperature(Omega, d.r_ab, d.r_bc, quoted=True) > 1 > full
    assert g1_limits(1.0, d.r_ab, d.r_bc, Omega) == g1_low_temperature(Omega, d.r_ab, d.r_bc)
    assert g1_limits(1.0, d.r_ab, d.r_bc) == pytest.approx(1.0)


def test_low_temperature_g1_limits():
    assert g1_low_temperature(60, 0.5, 0.5) == pytest.approx(1, abs=1e-20)
    with pytest.raises(ValueError):
        g1_low_temperature(5, 1e-3, 0.5)


def test_eigenvalue_expansion_is_second_order():
    errors = []
    for dO in (0.04, 0.02, 0.01):
        spec = RegimeSpec(1.0, dO)
        errors.append(max(abs(x - y) for x, y in zip(spec.expanded_nus(), spec.exact_nus())))
    assert errors[0] / errors[1] == pytest.approx(4, rel=0.05)
    assert errors[1] / errors[2] == pytest.approx(4, rel=0.05)


def test_regime_spec_validation():
    with pytest.raises(ValueError):
        RegimeSpec(1.0, 2.0)
    with pytest.raises(ValueError):
        RegimeSpec(0.0)
    assert RegimeSpec(math.inf).nu == 1.0
