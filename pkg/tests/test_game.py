"""Strategy space, named moves, entangling operator, initial state."""

import math

import numpy as np
import pytest

from unruhpd.game import (
    D1,
    GAMMA_MAX,
    NAMED_STRATEGIES,
    TWO_PI,
    Strategy,
    entangler,
    initial_state,
    named_strategy_matrix,
    strategy_matrix,
    validate_gamma,
)
from unruhpd.linalg import basis_ket, identity, is_unitary, kron, matrix_exp, sup_norm


def test_cooperate_matrix_is_identity():
    assert np.array_equal(strategy_matrix(0.0, 0.0), identity(2))


def test_defect_matrix_is_i_times_bit_flip():
    want = np.array([[0.0, 1j], [1j, 0.0]])
    assert sup_norm(strategy_matrix(0.0, math.pi) - want) <= 1e-12


def test_miracle_matrix():
    want = (1j / math.sqrt(2)) * np.array([[1.0, 1.0], [1.0, -1.0]])
    assert sup_norm(strategy_matrix(math.pi / 2, math.pi / 2) - want) <= 1e-12


def test_named_matrices():
    assert np.array_equal(named_strategy_matrix(NAMED_STRATEGIES["Q"]), np.diag([1j, -1j]))
    assert np.array_equal(named_strategy_matrix(NAMED_STRATEGIES["C"]), identity(2))
    want_d = np.array([[0.0, 1j], [1j, 0.0]])
    assert sup_norm(named_strategy_matrix(NAMED_STRATEGIES["D"]) - want_d) <= 1e-12


def test_q_label_matrix_sits_at_alpha_half_pi():
    # The diagonal phase move equals the parametrized move at (pi/2, 0).
    assert sup_norm(np.diag([1j, -1j]) - strategy_matrix(math.pi / 2, 0.0)) <= 1e-12


def test_unitarity_on_dense_parameter_grid():
    for alpha in np.linspace(0.0, TWO_PI, 50):
        for theta in np.linspace(0.0, math.pi, 50):
            u = strategy_matrix(float(alpha), float(theta))
            assert is_unitary(u, tol=1e-12)
            assert abs(abs(np.linalg.det(u)) - 1.0) <= 1e-12


def test_strategy_domain_errors():
    with pytest.raises(ValueError):
        strategy_matrix(-0.5, 0.0)
    with pytest.raises(ValueError):
        strategy_matrix(0.0, math.pi + 0.2)
    with pytest.raises(ValueError):
        Strategy(TWO_PI + 0.5, 0.0)


def test_near_edge_values_are_clamped_not_rejected():
    # Decimal-rounded endpoints like theta = 3.1415927 must be accepted.
    s = Strategy(0.0, 3.1415927)
    assert s.theta == math.pi
    assert validate_gamma(1.5707964) == GAMMA_MAX


def test_strategy_labels_and_custom_rendering():
    assert str(NAMED_STRATEGIES["C"]) == "C"
    assert str(Strategy(0.5, 1.25)) == "0.5,1.25"


def test_entangler_at_zero_is_exact_identity():
    assert np.array_equal(entangler(0.0), identity(4))


def test_entangler_on_ground_state_at_max_entanglement():
    state = entangler(math.pi / 2) @ basis_ket(4, 0)
    want = (basis_ket(4, 0) + 1j * basis_ket(4, 3)) / math.sqrt(2)
    assert sup_norm(state - want) <= 1e-15


@pytest.mark.parametrize("gamma", [0.0, math.pi / 4, math.pi / 2])
def test_entangler_unitary_and_matches_series_exponential(gamma):
    j = entangler(gamma)
    assert is_unitary(j, tol=1e-12)
    series = matrix_exp(1j * (gamma / 2) * kron(D1, D1))
    assert sup_norm(j - series) <= 1e-13


def test_entangler_domain_error():
    with pytest.raises(ValueError):
        entangler(math.pi)


@pytest.mark.parametrize("gamma", [0.0, 0.3, math.pi / 4, math.pi / 2])
def test_entangler_commutes_with_equal_classical_pairs(gamma):
    j = entangler(gamma)
    for name in ("C", "D"):
        u = kron(named_strategy_matrix(NAMED_STRATEGIES[name]), named_strategy_matrix(NAMED_STRATEGIES[name]))
        assert sup_norm(j @ u - u @ j) <= 1e-12


def test_entangler_does_not_commute_with_mixed_classical_pairs():
    j = entangler(math.pi / 2)
    c = named_strategy_matrix(NAMED_STRATEGIES["C"])
    d = named_strategy_matrix(NAMED_STRATEGIES["D"])
    assert sup_norm(j @ kron(c, d) - kron(c, d) @ j) > 0.1
    assert sup_norm(j @ kron(d, c) - kron(d, c) @ j) > 0.1


def test_initial_state_values():
    assert np.array_equal(initial_state(0.0), basis_ket(4, 0))
    want = (basis_ket(4, 0) + 1j * basis_ket(4, 3)) / math.sqrt(2)
    assert sup_norm(initial_state(math.pi / 2) - want) <= 1e-15


@pytest.mark.parametrize("gamma", [0.0, 0.2, 0.9, math.pi / 2])
def test_initial_state_equals_entangler_on_ground_state(gamma):
    assert sup_norm(initial_state(gamma) - entangler(gamma) @ basis_ket(4, 0)) <= 1e-15
    assert abs(np.linalg.norm(initial_state(gamma)) - 1.0) <= 1e-12
