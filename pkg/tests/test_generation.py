import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.linalg import expm

from bisqueeze.generation import (
    CovarianceElements,
    PumpParameters,
    ThermalSpec,
    beam_splitter_ac,
    beam_splitter_generator,
    bisqueezed_state,
    bisqueezing_transform,
    combined_generator,
    covariance_elements,
    decouple,
    squeezing_generator,
    thermal_eigenvalue,
    two_mode_squeezer,
)
from bisqueeze.symplectic import apply_transform, is_physical, purity, thermal, vacuum

pump = st.floats(-2, 2)


@given(pump, pump)
def test_factorisation_matches_exponential(R_ab, R_bc):
    p = PumpParameters(R_ab, R_bc)
    err = np.abs(expm(combined_generator(p)) - bisqueezing_transform(p)).max()
    assert err < 1e-10


def test_generator_commutator_is_beam_splitter():
    K_ab, K_bc = squeezing_generator("ab"), squeezing_generator("bc")
    np.testing.assert_array_equal(K_ab @ K_bc - K_bc @ K_ab, beam_splitter_generator("ac"))


@pytest.mark.parametrize("R", [-1.3, 0.0, 0.4, 2.0])
def test_single_pump_limits_are_exact(R):
    d = decouple(PumpParameters(R, 0.0))
    assert (d.r_ab, d.r_bc, d.theta_ac) == (R, 0.0, 0.0)
    d = decouple(PumpParameters(0.0, R))
    assert (d.r_ab, d.r_bc, d.theta_ac) == (0.0, R, 0.0)


def test_decoupled_values_at_equal_pumps():
    d = decouple(PumpParameters(0.5, 0.5))
    rho = math.sqrt(0.5)
    assert d.rho == pytest.approx(rho)
    assert d.r_ab == pytest.approx(math.asinh(math.sinh(rho) / math.sqrt(2)))
    assert d.r_bc == pytest.approx(math.atanh(math.tanh(rho) / math.sqrt(2)))
    assert d.theta_ac == pytest.approx(math.atan(1 / math.cosh(rho)) - math.pi / 4)


def test_negative_pump_takes_continuous_branch():
    # the naive arctan(tan(phi)/cosh(rho)) lands on the wrong branch here
    p = PumpParameters(-0.8, 0.6)
    assert np.abs(expm(combined_generator(p)) - bisqueezing_transform(p)).max() < 1e-12


def test_thermal_eigenvalue_matches_coth():
    spec = ThermalSpec.from_hz(4.99e9, 5e9, 5.01e9, 0.015)
    for w, nu in zip(spec.omegas, spec.nus()):
        x = 1.054571817e-34 * w / (1.380649e-23 * 0.015)
        assert nu == pytest.approx(1 / math.tanh(x / 2), rel=1e-12)
    assert thermal_eigenvalue(1.0, 0.0) == 1.0


@pytest.mark.parametrize("args", [(0, 1, 1, 0.1), (1, 1, 1, -1.0)])
def test_thermal_spec_validation(args):
    with pytest.raises(ValueError):
        ThermalSpec(*args)


def test_bad_thermal_input_rejected():
    with pytest.raises(ValueError):
        bisqueezed_state(PumpParameters(0.1, 0.1), (0.5, 1, 1))
    with pytest.raises(ValueError):
        PumpParameters(math.nan, 0.0)


@pytest.mark.parametrize("nus", [(1, 1, 1), (1.2, 2.0, 1.0), (2.0, 1.2, 1.5)])
@pytest.mark.parametrize("R", [(0.0, 0.0), (0.3, 1.1), (1.7, 0.2), (2.0, 2.0)])
def test_closed_form_elements_match_matrix_product(nus, R):
    p = PumpParameters(*R)
    sigma = bisqueezed_state(p, nus)
    np.testing.assert_allclose(covariance_elements(decouple(p), nus).matrix(), sigma, atol=1e-9, rtol=1e-12)


def test_quoted_gamma_differs_only_for_unequal_signal_eigenvalues():
    d = decouple(PumpParameters(0.8, 0.6))
    exact = covariance_elements(d, (1.2, 1.5, 2.0)).gamma
    quoted = covariance_elements(d, (1.2, 1.5, 2.0), quoted=True).gamma
    assert abs(exact - quoted) > 1e-3
    same = covariance_elements(d, (1.5, 1.0, 1.5))
    assert same.gamma == covariance_elements(d, (1.5, 1.0, 1.5), quoted=True).gamma


def test_vacuum_input_is_pure_and_physical():
    sigma = bisqueezed_state(PumpParameters(1.0, 0.7))
    assert is_physical(sigma)
    assert purity(sigma) == pytest.approx(1.0, abs=1e-9)


def test_vacuum_occupations():
    d = decouple(PumpParameters(0.9, 0.4))
    sigma = bisqueezed_state(PumpParameters(0.9, 0.4))
    a, b = math.sinh(d.r_ab) ** 2, math.sinh(d.r_bc) ** 2
    occ = 0.5 * (np.real(np.diag(sigma))[:3] - 1)
    np.testing.assert_allclose(occ, [a, a + b + a * b, b * (1 + a)], rtol=1e-12)


def test_elements_roundtrip_through_matrix():
    e = CovarianceElements(1.5, 2.0, 1.7, 0.3, 0.9, 1.1)
    assert CovarianceElements.from_matrix(e.matrix()) == e


def test_matrix_product_oracle_value():
    # frozen from S_ab(0.5191) S_bc(0.4605) acting on the vacuum
    S = two_mode_squeezer("ab", 0.5191) @ two_mode_squeezer("bc", 0.4605)
    sigma = apply_transform(vacuum(3), S)
    assert sigma[0, 2].real == pytest.approx(0.5890410500574271, abs=1e-12)


def test_beam_splitter_leaves_equal_thermal_untouched():
    sigma = thermal([1.4, 1.0, 1.4])
    np.testing.assert_allclose(apply_transform(sigma, beam_splitter_ac(0.37)), sigma, atol=1e-15)
