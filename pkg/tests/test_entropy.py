"""Unit tests for Tsallis entropies and the conditional-entropy closed form."""

import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import helpers
from qsep import (
    BellDiagonalState,
    ConditionalEntropyValue,
    Spectrum,
    UnphysicalStateError,
    bell_diagonal_density,
    bell_spectrum,
    chain_rule_check,
    conditional_entropy,
    conditional_entropy_bell,
    hermitian_eigenvalues,
    partial_trace,
    pseudoadditive_combine,
    rescaled_power_sum,
    tensor_product,
    tsallis_entropy,
    werner,
)
from qsep.entropy import _cond_value
from qsep.states import bell_weights

UNIFORM4 = Spectrum.uniform(4)
PURE = Spectrum.from_values([1.0, 0.0, 0.0, 0.0], stochastic=True)


def uppermost_curve(q: float) -> float:
    """Conditional entropy of the maximally mixed state."""
    if q == 1.0:
        return math.log(2.0)
    return (2.0 ** (1.0 - q) - 1.0) / (1.0 - q)


def lowest_curve(q: float) -> float:
    """Conditional entropy of a pure Bell state."""
    if q == 1.0:
        return -math.log(2.0)
    return -(2.0 ** (q - 1.0) - 1.0) / (q - 1.0)


def test_tsallis_anchor_values():
    assert tsallis_entropy(UNIFORM4, 1.0) == pytest.approx(math.log(4.0), abs=1e-15)
    assert tsallis_entropy(UNIFORM4, 2.0) == pytest.approx(0.75, abs=1e-15)
    assert tsallis_entropy(UNIFORM4, 0.0) == pytest.approx(3.0, abs=1e-15)
    assert tsallis_entropy(UNIFORM4, 3.0) == pytest.approx(15.0 / 32.0, abs=1e-15)
    for q in (-2.0, 0.5, 1.0, 2.0):
        assert tsallis_entropy(PURE, q) == pytest.approx(0.0, abs=1e-15)


def test_tsallis_continuous_across_q_equals_one():
    spectra = [
        UNIFORM4,
        bell_spectrum(werner(0.37)),
        Spectrum.from_values([0.125, 0.125, 0.125, 0.625], stochastic=True),
    ]
    for s in spectra:
        center = tsallis_entropy(s, 1.0)
        assert abs(tsallis_entropy(s, 1.0 + 1e-6) - center) < 1e-5
        assert abs(tsallis_entropy(s, 1.0 - 1e-6) - center) < 1e-5


def test_tsallis_rejects_bad_inputs():
    raw = Spectrum.from_values([0.5, 0.2])
    with pytest.raises(ValueError):
        tsallis_entropy(raw, 2.0)
    with pytest.raises(ValueError):
        tsallis_entropy(UNIFORM4, math.inf)


@settings(derandomize=True, deadline=None)
@given(
    st.lists(st.floats(0.01, 1.0), min_size=4, max_size=4),
    st.floats(-3.0, 10.0),
)
def test_tsallis_nonnegative_on_full_support(raw, q):
    total = math.fsum(raw)
    spectrum = Spectrum.from_values([v / total for v in raw], stochastic=True)
    assert tsallis_entropy(spectrum, q) >= -1e-12


def test_tsallis_decreases_with_q_on_sampled_spectra():
    q_grid = [0.25 * k for k in range(1, 41)]
    for s in (UNIFORM4, bell_spectrum(werner(0.3))):
        values = [tsallis_entropy(s, q) for q in q_grid]
        assert all(a >= b - 1e-12 for a, b in zip(values, values[1:]))


def test_pseudoadditivity_on_a_product_pair(rng):
    a = helpers.random_qubit_density(rng)
    b = helpers.random_qubit_density(rng)
    sa = hermitian_eigenvalues(a)
    sb = hermitian_eigenvalues(b)
    joint = hermitian_eigenvalues(tensor_product(a, b))
    for q in (-2.0, -0.5, 0.5, 1.0, 2.0, 3.7, 5.0):
        combined = pseudoadditive_combine(
            tsallis_entropy(sa, q), tsallis_entropy(sb, q), q
        )
        assert tsallis_entropy(joint, q) == pytest.approx(combined, abs=1e-12)


def test_conditional_entropy_matrix_route_matches_closed_form():
    for s in (werner(0.6), BellDiagonalState(0.3, -0.4, 0.5)):
        rho = bell_diagonal_density(s).matrix
        joint = hermitian_eigenvalues(rho)
        reduced = hermitian_eigenvalues(partial_trace(rho, "A"))
        for q in (0.5, 1.0, 2.0, 5.0):
            via_matrices = conditional_entropy(joint, reduced, q)
            closed = conditional_entropy_bell(s, q).value
            assert via_matrices == pytest.approx(closed, abs=1e-10)


def test_conditional_entropy_uniform_anchor():
    assert conditional_entropy(UNIFORM4, Spectrum.uniform(2), 2.0) == pytest.approx(
        0.5, abs=1e-15
    )


def test_conditional_entropy_denominator_underflow():
    with pytest.raises(ValueError, match="denominator"):
        conditional_entropy(UNIFORM4, Spectrum.uniform(2), 2000.0)


def test_conditional_entropy_bell_validates_and_labels():
    value = conditional_entropy_bell(werner(0.2), 2.0)
    assert isinstance(value, ConditionalEntropyValue)
    assert value.q == 2.0
    assert value.direction == "B|A"
    with pytest.raises(UnphysicalStateError):
        conditional_entropy_bell(BellDiagonalState(2.0, 0.0, 0.0), 2.0)
    with pytest.raises(ValueError):
        conditional_entropy_bell(werner(0.2), math.nan)


def test_rescaled_power_sum_values():
    assert rescaled_power_sum((0.25,) * 4, 2.0) == pytest.approx(1.0, abs=1e-15)
    assert rescaled_power_sum((0.0, 0.0, 0.0, 1.0), 2.0) == pytest.approx(4.0, abs=0)
    # zero weights drop out of the support, keeping negative q finite
    assert rescaled_power_sum((0.5, 0.5, 0.0, 0.0), -1.0) == pytest.approx(2.0, abs=1e-15)
    # a divergent power sum saturates to infinity instead of raising
    assert rescaled_power_sum((0.0, 0.0, 0.0, 1.0), 5000.0) == math.inf
    assert _cond_value((0.0, 0.0, 0.0, 1.0), 5000.0) == -math.inf


def test_closed_form_curve_anchors():
    origin = bell_weights(BellDiagonalState(0.0, 0.0, 0.0))
    vertex = bell_weights(BellDiagonalState(1.0, 1.0, 1.0))
    for k in range(-12, 41):
        q = 0.25 * k
        assert _cond_value(origin, q) == pytest.approx(uppermost_curve(q), abs=1e-13)
        assert _cond_value(vertex, q) == pytest.approx(lowest_curve(q), abs=1e-13)


def test_conditional_entropy_near_quadratic_threshold():
    x = 0.577350269
    value = conditional_entropy_bell(BellDiagonalState(x, x, x), 2.0).value
    assert abs(value) < 1e-8


def test_weight_permutation_symmetry_is_bit_exact():
    base = (0.1, 0.2, 0.3, 0.4)
    for q in (-1.0, 0.5, 2.0, 7.3):
        reference = _cond_value(base, q)
        for perm in itertools.permutations(base):
            assert _cond_value(perm, q) == reference


def test_state_symmetry_images_agree():
    s = BellDiagonalState(0.3, -0.2, 0.6)
    images = [
        BellDiagonalState(0.3, 0.6, -0.2),                # swap phi-/psi+ weights
        BellDiagonalState(-0.2, 0.3, 0.6),                # swap phi+/phi- weights
        BellDiagonalState(-(0.3 - 0.2 + 0.6), -0.2, 0.6), # swap phi+/psi- weights
    ]
    for q in (0.5, 1.0, 2.0, 5.0):
        reference = conditional_entropy_bell(s, q).value
        for image in images:
            assert conditional_entropy_bell(image, q).value == pytest.approx(
                reference, abs=1e-13
            )


def test_chain_rule_reconstructs_joint_entropy():
    s = werner(0.7)
    joint = bell_spectrum(s)
    marginal = Spectrum.uniform(2)
    for q in (-2.0, 0.5, 1.0, 2.0, 5.0, 10.0):
        cond = conditional_entropy_bell(s, q).value
        rebuilt = chain_rule_check(marginal, cond, q)
        assert rebuilt == pytest.approx(tsallis_entropy(joint, q), abs=1e-12)


@settings(derandomize=True, deadline=None)
@given(st.floats(0.0, 1.0), st.floats(1.05, 50.0))
def test_conditional_entropy_sign_tracks_max_weight(t, q):
    # For q > 1 the sign of S_q(B|A) is governed by whether any rescaled
    # weight exceeds one; on the symmetric line that flips where the
    # residual sum crosses 2.
    weights = bell_weights(BellDiagonalState(t, t, t))
    value = _cond_value(weights, q)
    residual = rescaled_power_sum(weights, q) - 2.0
    if residual > 1e-12:
        assert value < 0.0
    elif residual < -1e-12:
        assert value > 0.0
