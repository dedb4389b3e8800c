import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bisqueeze.generation import beam_splitter, two_mode_squeezer
from bisqueeze.symplectic import (
    NonPhysicalStateError,
    NumericalError,
    apply_transform,
    from_quadrature_basis,
    is_physical,
    is_symplectic,
    min_physical_eigenvalue,
    partial_trace,
    partial_transpose,
    purity,
    symplectic_eigenvalues,
    symplectic_form,
    thermal,
    to_quadrature_basis,
    vacuum,
)

squeezings = st.floats(-1.5, 1.5)
angles = st.floats(-np.pi, np.pi)
nus = st.floats(1.0, 5.0)
pairs = st.sampled_from(["ab", "bc", "ac"])


def _transform(ops):
    S = np.eye(6, dtype=complex)
    for kind, pair, x in ops:
        S = S @ (two_mode_squeezer(pair, x) if kind == "sq" else beam_splitter(pair, x))
    return S


ops_strategy = st.lists(
    st.tuples(st.sampled_from(["sq", "bs"]), pairs, st.floats(-1.2, 1.2)), min_size=1, max_size=4
)


def test_symplectic_form_squares_to_minus_identity():
    om = symplectic_form(3)
    np.testing.assert_allclose(om @ om, -np.eye(6))


def test_thermal_eigenvalues_are_the_inputs():
    np.testing.assert_allclose(symplectic_eigenvalues(thermal([1.5, 3.0, 1.0])), [3.0, 1.5, 1.0])


@given(pairs, squeezings, angles)
def test_squeezer_and_beam_splitter_are_symplectic(pair, r, theta):
    assert is_symplectic(two_mode_squeezer(pair, r))
    assert is_symplectic(beam_splitter(pair, theta))


@settings(max_examples=50)
@given(st.tuples(nus, nus, nus), ops_strategy)
def test_eigenvalues_and_purity_invariant_under_transforms(th, ops):
    sigma = apply_transform(thermal(th), _transform(ops))
    assert is_physical(sigma)
    np.testing.assert_allclose(symplectic_eigenvalues(sigma), sorted(th, reverse=True), rtol=1e-8)
    assert purity(sigma) == pytest.approx(np.prod(np.square(th)), rel=1e-8)


@given(st.tuples(nus, nus, nus), ops_strategy, st.integers(0, 2))
def test_partial_transpose_is_an_involution(th, ops, m):
    sigma = apply_transform(thermal(th), _transform(ops))
    np.testing.assert_array_equal(partial_transpose(partial_transpose(sigma, m), m), sigma)


def test_partial_transpose_two_modes_matches_permutation():
    sigma = apply_transform(vacuum(2), two_mode_squeezer((0, 1), 0.4, n_modes=2))
    P = np.eye(4)[[0, 3, 2, 1]]
    np.testing.assert_allclose(partial_transpose(sigma, 1), P @ sigma @ P)


def test_two_mode_squeezed_pt_eigenvalues():
    r = 0.7
    sigma = apply_transform(vacuum(2), two_mode_squeezer((0, 1), r, n_modes=2))
    np.testing.assert_allclose(symplectic_eigenvalues(partial_transpose(sigma, 1)), [np.exp(2 * r), np.exp(-2 * r)])


def test_sub_vacuum_thermal_is_not_physical():
    assert not is_physical(thermal([0.9, 1.0]))
    assert is_physical(thermal([1.0, 1.0]))
    assert min_physical_eigenvalue(thermal([0.9])) == pytest.approx(-0.1)


def test_purity_rejects_unphysical():
    with pytest.raises(NonPhysicalStateError):
        purity(thermal([0.5]))


def test_non_positive_matrix_raises_numerical_error():
    with pytest.raises(NumericalError):
        symplectic_eigenvalues(np.diag([1.0, -1.0]).astype(complex))


def test_quadrature_basis_roundtrip_and_vacuum():
    np.testing.assert_allclose(to_quadrature_basis(vacuum(2)), 2 * np.eye(4))
    sigma = apply_transform(thermal([1.3, 2.0, 1.1]), _transform([("sq", "ab", 0.3), ("bs", "ac", 0.7)]))
    np.testing.assert_allclose(from_quadrature_basis(to_quadrature_basis(sigma)), sigma, atol=1e-12)


def test_partial_trace_order_and_validation():
    sigma = thermal([1.0, 2.0, 3.0])
    np.testing.assert_allclose(partial_trace(sigma, [2, 0]), thermal([3.0, 1.0]))
    for bad in ([], [3], [0, 0]):
        with pytest.raises(ValueError):
            partial_trace(sigma, bad)


def test_shape_validation():
    with pytest.raises(ValueError):
        symplectic_eigenvalues(np.eye(3))
    with pytest.raises(ValueError):
        apply_transform(vacuum(2), np.eye(6))
