"""Unit tests for the dense linear-algebra layer."""

import math

import numpy as np
import pytest

import helpers
from qsep import (
    ConvergenceError,
    NumericalError,
    Spectrum,
    bell_diagonal_density,
    hermitian_eigenvalues,
    partial_trace,
    partial_transpose,
    tensor_product,
    trace_power,
    werner,
)
from qsep.states import BellDiagonalState, bell_weights


def test_tensor_product_diagonal_example():
    a = np.diag([1.0, 2.0])
    b = np.diag([3.0, 4.0])
    expected = np.diag([3.0, 4.0, 6.0, 8.0])
    assert np.array_equal(tensor_product(a, b), expected)


def test_tensor_product_slow_index_is_first_factor():
    # row index 2*i_A + i_B: |1><1| (x) I occupies the lower-right block
    p1 = np.array([[0.0, 0.0], [0.0, 1.0]])
    out = tensor_product(p1, np.eye(2))
    assert np.array_equal(out, np.diag([0.0, 0.0, 1.0, 1.0]))


def test_tensor_product_rejects_wrong_dimension():
    with pytest.raises(ValueError):
        tensor_product(np.eye(4), np.eye(2))
    with pytest.raises(ValueError):
        tensor_product(np.eye(2), np.ones((2, 3)))


def test_partial_trace_inverts_tensor_product(rng):
    for _ in range(25):
        a = helpers.random_qubit_density(rng)
        b = helpers.random_qubit_density(rng)
        joint = tensor_product(a, b)
        assert np.allclose(partial_trace(joint, "A"), a, atol=1e-14)
        assert np.allclose(partial_trace(joint, "B"), b, atol=1e-14)


def test_partial_trace_requires_axis_label():
    with pytest.raises(ValueError):
        partial_trace(np.eye(4) / 4.0, "C")


def test_partial_transpose_singlet_spectrum():
    rho = bell_diagonal_density(werner(1.0)).matrix
    spectrum = hermitian_eigenvalues(partial_transpose(rho, on="B"))
    expected = (0.5, 0.5, 0.5, -0.5)
    assert spectrum.values == pytest.approx(expected, abs=1e-12)
    assert not spectrum.stochastic


def test_partial_transpose_involution_and_factor_relation(rng):
    m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    m = (m + m.conj().T) / 2.0
    assert np.allclose(partial_transpose(partial_transpose(m, "A"), "A"), m, atol=0)
    assert np.allclose(partial_transpose(m, "B"), partial_transpose(m, "A").T, atol=0)


def test_partial_transpose_spectrum_is_half_minus_weights(rng):
    # For Bell-diagonal states the partial-transpose eigenvalues are exactly
    # {1/2 - w_k}, which is what makes the PPT test a max-weight test.
    for xyz in helpers.random_physical_triples(rng, 50):
        s = BellDiagonalState(*xyz)
        rho = bell_diagonal_density(s).matrix
        got = sorted(hermitian_eigenvalues(partial_transpose(rho, "B")).values)
        expected = sorted(0.5 - w for w in bell_weights(s))
        assert got == pytest.approx(expected, abs=1e-12)


def test_jacobi_matches_reference_solver(rng):
    for dim in (2, 4):
        for _ in range(100):
            m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
            m = (m + m.conj().T) / 2.0
            scale = float(10.0 ** rng.integers(-3, 3))
            m = m * scale
            got = hermitian_eigenvalues(m).values
            expected = sorted(np.linalg.eigvalsh(m), reverse=True)
            assert got == pytest.approx(expected, abs=1e-11 * max(1.0, abs(scale)))


def test_hermitian_eigenvalues_rejects_asymmetry():
    m = np.eye(4, dtype=complex)
    m[0, 1] += 1e-6
    with pytest.raises(ValueError, match=r"not Hermitian.*\(0, 1\)"):
        hermitian_eigenvalues(m)


def test_hermitian_eigenvalues_symmetrises_tiny_asymmetry():
    m = np.diag([0.4, 0.3, 0.2, 0.1]).astype(complex)
    m[0, 1] += 1e-11
    spectrum = hermitian_eigenvalues(m)
    assert spectrum.values == pytest.approx((0.4, 0.3, 0.2, 0.1), abs=1e-10)


def test_spectrum_sorts_descending_and_detects_stochastic():
    s = Spectrum.from_values([0.1, 0.7, 0.2])
    assert s.values == (0.7, 0.2, 0.1)
    assert s.stochastic
    assert s.dim == 3
    assert not Spectrum.from_values([0.5, 0.2]).stochastic
    # sums to one but has a genuinely negative entry: not a probability vector
    assert not Spectrum.from_values([0.6, 0.5, -0.1]).stochastic


def test_spectrum_rejects_bad_explicit_stochastic_flag():
    with pytest.raises(ValueError, match="not a probability spectrum"):
        Spectrum.from_values([0.5, 0.5, 0.5, 0.5], stochastic=True)
    with pytest.raises(ValueError, match="not a probability spectrum"):
        Spectrum.from_values([0.6, 0.5, -0.1], stochastic=True)


def test_spectrum_rejects_empty_and_non_finite():
    with pytest.raises(ValueError):
        Spectrum.from_values([])
    with pytest.raises(ValueError):
        Spectrum.from_values([0.5, math.inf])


def test_spectrum_uniform():
    u = Spectrum.uniform(4)
    assert u.values == (0.25,) * 4
    assert u.stochastic
    with pytest.raises(ValueError):
        Spectrum.uniform(0)


def test_trace_power_closed_forms():
    w = Spectrum.from_values([0.125, 0.125, 0.125, 0.625], stochastic=True)
    assert trace_power(w, 2.0) == pytest.approx(7.0 / 16.0, abs=1e-15)
    assert trace_power(Spectrum.uniform(2), 3.0) == pytest.approx(0.25, abs=1e-16)


def test_trace_power_runs_over_support_only():
    s = Spectrum.from_values([0.5, 0.5, 0.0, 0.0], stochastic=True)
    assert trace_power(s, 0.0) == 2.0
    assert trace_power(s, -1.0) == 4.0


def test_trace_power_requires_stochastic_and_finite_q():
    pt = hermitian_eigenvalues(
        partial_transpose(bell_diagonal_density(werner(1.0)).matrix, "B")
    )
    with pytest.raises(ValueError):
        trace_power(pt, 2.0)
    with pytest.raises(ValueError):
        trace_power(Spectrum.uniform(2), math.inf)


def test_convergence_error_is_a_numerical_error():
    assert issubclass(ConvergenceError, NumericalError)
    assert isinstance(ConvergenceError("x"), NumericalError)
