import numpy as np
import pytest

from dmsim.gates import hadamard1
from dmsim.pauli import (
    QOperator,
    SIGMA_MINUS,
    SIGMA_PLUS,
    identity,
    pauli_coefficients,
    proj_general,
    projector,
    rot_axis,
    rot_to,
    sigma,
    sp,
    tensor_op,
)
from dmsim.qstate import BasisKind, ket, ketv

from helpers import pauli_table_bruteforce, random_hermitian

EPSILON = np.zeros((3, 3, 3))
for i, j, k in [(0, 1, 2), (1, 2, 0), (2, 0, 1)]:
    EPSILON[i, j, k] = 1.0
    EPSILON[j, i, k] = -1.0


def test_sigma_matrices():
    assert np.array_equal(sigma(0).matrix, np.eye(2))
    assert np.array_equal(sigma(1).matrix, [[0, 1], [1, 0]])
    assert np.array_equal(sigma(2).matrix, [[0, -1j], [1j, 0]])
    assert np.array_equal(sigma(3).matrix, [[1, 0], [0, -1]])
    with pytest.raises(ValueError):
        sigma(4)


def test_sigma_traces():
    assert sigma(0).trace() == 2
    for i in (1, 2, 3):
        assert sigma(i).trace() == 0


def test_pauli_product_law_exact():
    # sigma_i sigma_j = delta_ij I + i epsilon_ijk sigma_k, entrywise exact
    for i in range(1, 4):
        for j in range(1, 4):
            product = sigma(i).matrix @ sigma(j).matrix
            expected = (i == j) * np.eye(2, dtype=complex)
            for k in range(1, 4):
                expected = expected + 1j * EPSILON[i - 1, j - 1, k - 1] * sigma(k).matrix
            assert np.array_equal(product, expected)


def test_anticommutator_vanishes_exactly():
    x, y = sigma(1).matrix, sigma(2).matrix
    assert np.array_equal(x @ y + y @ x, np.zeros((2, 2)))


def test_raising_lowering_convention():
    assert np.array_equal(SIGMA_PLUS, [[0, 2], [0, 0]])
    assert np.array_equal(SIGMA_MINUS, [[0, 0], [2, 0]])
    assert np.array_equal(SIGMA_PLUS, sigma(1).matrix + 1j * sigma(2).matrix)
    # raising annihilates |0>, lowering annihilates |1>
    assert np.array_equal(SIGMA_PLUS @ ket(0).amplitudes, [0, 0])
    assert np.array_equal(SIGMA_MINUS @ ket(1).amplitudes, [0, 0])


def test_sp_two_qubit_fixture():
    expected = np.array(
        [
            [0, 0, -1j, 0],
            [0, 0, 0, 1j],
            [1j, 0, 0, 0],
            [0, -1j, 0, 0],
        ]
    )
    assert np.array_equal(sp(2, [2, 3]).matrix, expected)
    assert np.array_equal(sp(2, [2, 3]).matrix, tensor_op(sigma(2), sigma(3)).matrix)


def test_sp_identity_word():
    assert np.array_equal(sp(3, [0, 0, 0]).matrix, np.eye(8))


def test_sp_validates_word():
    with pytest.raises(ValueError):
        sp(2, [1])
    with pytest.raises(ValueError):
        sp(2, [1, 5])


def test_tensor_op_on_states():
    flipped = tensor_op(sigma(1), sigma(0)) @ ketv([0, 0])
    assert flipped.isclose(ketv([1, 0]))
    assert np.array_equal(tensor_op(sigma(3), sigma(3)).matrix, np.diag([1, -1, -1, 1]))
    assert np.array_equal(tensor_op(identity(1), identity(1)).matrix, np.eye(4))


def test_coefficients_of_basis_operators():
    co = pauli_coefficients(sigma(3))
    assert co[(3,)] == 1
    assert sum(abs(v) for a, v in co.items() if a != (3,)) == 0

    co = pauli_coefficients(sp(2, [2, 3]))
    assert co[(2, 3)] == 1
    assert sum(abs(v) for a, v in co.items() if a != (2, 3)) == 0


def test_coefficients_of_maximally_mixed_qubit():
    co = pauli_coefficients(QOperator(1, np.eye(2) / 2))
    assert co[(0,)] == 0.5
    assert all(co[(i,)] == 0 for i in (1, 2, 3))


def test_coefficients_match_bruteforce(rng):
    for n in (1, 2, 3):
        m = random_hermitian(n, rng)
        table = pauli_table_bruteforce(m, n)
        co = pauli_coefficients(QOperator(n, m))
        for word, value in table.items():
            assert abs(co[word] - value) < 1e-12


def test_reconstruction_round_trip(rng):
    for n in (1, 2, 3):
        m = random_hermitian(n, rng)
        co = pauli_coefficients(QOperator(n, m))
        assert np.abs(co.reconstruct().matrix - m).max() < 1e-10
        assert co.max_abs_imag() < 1e-12


def test_general_operator_coefficients_complex(rng):
    m = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    co = pauli_coefficients(QOperator(2, m))
    assert co.max_abs_imag() > 1e-6
    assert np.abs(co.reconstruct().matrix - m).max() < 1e-10


def test_rot_axis_x_fixture():
    theta = 0.7123
    got = rot_axis(theta, [1, 0, 0]).matrix
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    assert np.allclose(got, [[c, -1j * s], [-1j * s, c]], atol=1e-15)


def test_rot_axis_pi_half_about_y():
    out = rot_axis(np.pi / 2, [0, 1, 0]) @ ket(0)
    assert np.allclose(out.amplitudes, [1 / np.sqrt(2), 1 / np.sqrt(2)], atol=1e-15)


def test_rot_axis_zero_angle_and_zero_axis():
    assert np.allclose(rot_axis(0.0, [0, 0.2, 0.4]).matrix, np.eye(2), atol=1e-15)
    with pytest.raises(ValueError):
        rot_axis(1.0, [0, 0, 0])


def test_rot_axis_unitary_inverse(rng):
    for _ in range(10):
        gamma = rng.uniform(0, 2 * np.pi)
        axis = rng.standard_normal(3)
        u = rot_axis(gamma, axis) @ rot_axis(-gamma, axis)
        assert np.abs(u.matrix - np.eye(2)).max() < 1e-12


def test_hadamard_as_rotation():
    u = rot_axis(np.pi, np.array([1, 0, 1]) / np.sqrt(2))
    assert np.abs(u.matrix - (-1j) * hadamard1().matrix).max() < 1e-12


def test_rot_to_special_cases():
    assert rot_to(0, 0).isclose(ket(0), atol=1e-15)
    assert np.allclose(rot_to(np.pi / 2, 0).amplitudes, [1 / np.sqrt(2), 1 / np.sqrt(2)], atol=1e-15)
    # theta=phi=pi/2 points along +y; equals (1, i)/sqrt(2) up to a global phase
    got = rot_to(np.pi / 2, np.pi / 2)
    expected = np.array([np.exp(-1j * np.pi / 4), np.exp(1j * np.pi / 4)]) / np.sqrt(2)
    assert np.allclose(got.amplitudes, expected, atol=1e-15)
    phase = got.amplitudes[0] / (1 / np.sqrt(2))
    assert np.allclose(got.amplitudes, phase * np.array([1, 1j]) / np.sqrt(2), atol=1e-14)


def test_rot_to_is_eigenvector(rng):
    for _ in range(10):
        theta = rng.uniform(0, np.pi)
        phi = rng.uniform(0, 2 * np.pi)
        n_hat = [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)]
        s_dot_n = sum(n_hat[i] * sigma(i + 1).matrix for i in range(3))
        v = rot_to(theta, phi).amplitudes
        assert np.abs(s_dot_n @ v - v).max() < 1e-12


def test_projector_fixtures():
    assert np.array_equal(projector(0).matrix, [[1, 0], [0, 0]])
    assert np.array_equal(projector(1).matrix, [[0, 0], [0, 1]])
    assert np.allclose(projector(0, BasisKind.X).matrix, [[0.5, 0.5], [0.5, 0.5]], atol=1e-15)
    assert np.allclose(projector(1, BasisKind.X).matrix, [[0.5, -0.5], [-0.5, 0.5]], atol=1e-15)


def test_projector_idempotent_complete(rng):
    for basis in BasisKind:
        p0, p1 = projector(0, basis), projector(1, basis)
        assert np.abs((p0 @ p0).matrix - p0.matrix).max() < 1e-14
        assert np.abs((p0 + p1).matrix - np.eye(2)).max() < 1e-14
    direction = rng.standard_normal(3)
    g = proj_general(0, direction)
    assert np.abs((g @ g).matrix - g.matrix).max() < 1e-14
    assert abs(g.trace() - 1) < 1e-14
    assert g.is_hermitian()


def test_proj_general_rejects_zero_direction():
    with pytest.raises(ValueError):
        proj_general(0, [0, 0, 0])
