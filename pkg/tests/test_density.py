from itertools import combinations, product

import numpy as np
import pytest

from dmsim.density import (
    DensityMatrix,
    correlation_tensor,
    entropy,
    evolve,
    fidelity,
    from_state,
    maximally_mixed,
    measure,
    measure_branch,
    polarization,
    ptrace,
    ptrace_direct,
    purity,
)
from dmsim.gates import cnot, had_mask
from dmsim.pauli import QOperator, identity, projector, sigma, sp, tensor_op
from dmsim.qstate import BasisKind, StateVector, ket, ketv, random_state
from dmsim.states import bell, werner

from helpers import random_density, random_hermitian, random_unitary


def test_from_state_outer_products():
    assert np.array_equal(from_state(ket(0)).matrix, [[1, 0], [0, 0]])
    plus = StateVector(1, np.array([1, 1]) / np.sqrt(2))
    assert np.allclose(from_state(plus).matrix, [[0.5, 0.5], [0.5, 0.5]], atol=1e-15)
    assert abs(purity(from_state(bell(0, 0))) - 1) < 1e-12


def test_from_state_rejects_unnormalized():
    with pytest.raises(ValueError):
        from_state(StateVector(1, [1.0, 1.0]))


def test_constructor_invariants_rejected():
    with pytest.raises(ValueError):
        DensityMatrix(QOperator(1, [[1.0, 0.5j], [0.5, 0.0]]))  # not Hermitian
    with pytest.raises(ValueError):
        DensityMatrix(QOperator(1, [[0.7, 0], [0, 0.7]]))  # trace != 1
    with pytest.raises(ValueError):
        DensityMatrix(QOperator(1, [[1.5, 0], [0, -0.5]]))  # negative eigenvalue


def test_evolve_bell_construction():
    u = cnot(2, 1, 2) @ had_mask(2, [1, 0])
    got = evolve(from_state(ketv([0, 0])), u)
    assert got.isclose(from_state(bell(0, 0)), atol=1e-14)
    rho = from_state(random_state(2, 1))
    assert evolve(rho, identity(2)).isclose(rho, atol=1e-14)


def test_evolve_validates_unitarity_and_dims():
    rho = maximally_mixed(1)
    with pytest.raises(ValueError):
        evolve(rho, QOperator(1, [[1, 0], [0, 2]]))
    with pytest.raises(ValueError):
        evolve(rho, identity(2))


def test_evolve_preserves_spectrum_and_entropy(rng):
    for _ in range(5):
        rho = DensityMatrix(QOperator(2, random_density(2, rng)))
        u = QOperator(2, random_unitary(4, rng))
        evolved = evolve(rho, u)
        before = np.sort(np.linalg.eigvalsh(rho.matrix))
        after = np.sort(np.linalg.eigvalsh(evolved.matrix))
        assert np.abs(before - after).max() < 1e-9
        assert abs(entropy(evolved) - entropy(rho)) < 1e-9


def test_purity_values(rng):
    assert abs(purity(from_state(random_state(3, rng))) - 1) < 1e-12
    assert purity(maximally_mixed(1)) == 0.5
    assert abs(purity(werner(0.0)) - 0.25) < 1e-14


def test_entropy_values():
    assert entropy(from_state(ket(0))) == 0
    assert abs(entropy(ptrace([2], from_state(bell(0, 0)))) - 1) < 1e-12
    assert abs(entropy(werner(0.0)) - 2) < 1e-12
    assert abs(entropy(werner(1.0))) < 1e-9


def test_entropy_iff_purity_pure(rng):
    for _ in range(5):
        rho = DensityMatrix(QOperator(2, random_density(2, rng)))
        pure = abs(purity(rho) - 1) < 1e-8
        zero_entropy = entropy(rho) < 1e-8
        assert pure == zero_entropy


def test_fidelity_identities(rng):
    rho = DensityMatrix(QOperator(2, random_density(2, rng)))
    assert abs(fidelity(rho, rho) - 1) < 1e-10
    assert fidelity(from_state(ket(0)), from_state(ket(1))) < 1e-10
    got = fidelity(from_state(ket(0)), from_state(ket(0, BasisKind.X)))
    assert abs(got - 1 / np.sqrt(2)) < 1e-12


def test_fidelity_pure_state_limit(rng):
    for _ in range(5):
        a, b = random_state(2, rng), random_state(2, rng)
        got = fidelity(from_state(a), from_state(b))
        expected = abs(np.vdot(a.amplitudes, b.amplitudes))
        assert abs(got - expected) < 1e-10


def test_fidelity_symmetric(rng):
    for _ in range(5):
        r1 = DensityMatrix(QOperator(2, random_density(2, rng)))
        r2 = DensityMatrix(QOperator(2, random_density(2, rng, rank=2)))
        assert abs(fidelity(r1, r2) - fidelity(r2, r1)) < 1e-9


def test_fidelity_dimension_mismatch():
    with pytest.raises(ValueError):
        fidelity(maximally_mixed(1), maximally_mixed(2))


def test_ptrace_sigma_identity():
    # tracing qubit 2 of sigma_i x sigma_j x sigma_k leaves 2 delta_j0 sigma_i x sigma_k
    for i, j, k in product(range(4), repeat=3):
        got = ptrace([2], sp(3, [i, j, k]))
        expected = 2.0 * (j == 0) * sp(2, [i, k]).matrix
        assert np.abs(got.matrix - expected).max() < 1e-12


def test_ptrace_two_qubit_identity():
    for k in range(4):
        got = ptrace([1, 2], sp(3, [0, 0, k]))
        assert np.abs(got.matrix - 4.0 * sigma(k).matrix).max() < 1e-12


def test_ptrace_bell_reduction():
    rho = from_state(bell(0, 0))
    reduced = ptrace([2], rho)
    assert isinstance(reduced, DensityMatrix)
    assert np.abs(reduced.matrix - np.eye(2) / 2).max() < 1e-12


def test_ptrace_product_form(rng):
    a = random_hermitian(1, rng)
    b = random_hermitian(1, rng)
    op = tensor_op(QOperator(1, a), QOperator(1, b))
    assert np.abs(ptrace_direct([1], op).matrix - np.trace(a) * b).max() < 1e-10
    assert np.abs(ptrace_direct([2], op).matrix - np.trace(b) * a).max() < 1e-10


def test_ptrace_matches_direct(rng):
    for _ in range(60):
        n = int(rng.integers(1, 5))
        op = QOperator(n, random_hermitian(n, rng))
        subsets = [
            list(c)
            for r in range(1, n + 1)
            for c in combinations(range(1, n + 1), r)
        ]
        for traced in subsets:
            a = ptrace(traced, op)
            b = ptrace_direct(traced, op)
            assert a.n_qubits == b.n_qubits == n - len(traced)
            assert np.abs(a.matrix - b.matrix).max() < 1e-10


def test_ptrace_trace_preservation(rng):
    for _ in range(10):
        n = int(rng.integers(2, 5))
        op = QOperator(n, random_hermitian(n, rng))
        t = [int(q) for q in rng.choice(np.arange(1, n + 1), size=rng.integers(1, n), replace=False)]
        assert abs(ptrace(t, op).trace() - op.trace()) < 1e-12


def test_ptrace_composition(rng):
    # tracing in two steps equals tracing the union at once (with relabeling)
    op = QOperator(4, random_hermitian(4, rng))
    step1 = ptrace([2], op)          # survivors 1,3,4 relabeled 1,2,3
    step2 = ptrace([2], step1)       # original qubit 3
    direct = ptrace([2, 3], op)
    assert np.abs(step2.matrix - direct.matrix).max() < 1e-10


def test_ptrace_full_trace_and_validation(rng):
    op = QOperator(2, random_hermitian(2, rng))
    total = ptrace([1, 2], op)
    assert total.matrix.shape == (1, 1)
    assert abs(complex(total.matrix[0, 0]) - op.trace()) < 1e-12
    with pytest.raises(ValueError):
        ptrace([], op)
    with pytest.raises(ValueError):
        ptrace([3], op)
    with pytest.raises(ValueError):
        ptrace([1, 1], op)
    with pytest.raises(ValueError):
        ptrace_direct([0], op)


def test_polarization_values():
    rho = from_state(bell(0, 0))
    assert np.abs(polarization(rho, 1)).max() < 1e-12
    assert np.allclose(polarization(from_state(ket(0)), 1), [0, 0, 1], atol=1e-14)
    with pytest.raises(ValueError):
        polarization(rho, 3)


def test_polarization_bloch_bound(rng):
    for _ in range(10):
        rho = DensityMatrix(QOperator(2, random_density(2, rng)))
        for q in (1, 2):
            assert np.linalg.norm(polarization(rho, q)) <= 1 + 1e-10


def test_correlation_tensor_bell_states():
    # oracle: brute-force Tr[rho (sigma_i x sigma_j)] with plain numpy
    rho = from_state(bell(0, 0)).matrix
    expected = np.zeros((3, 3))
    for i in range(3):
        for j in range(3):
            op = np.kron(sigma(i + 1).matrix, sigma(j + 1).matrix)
            expected[i, j] = np.trace(rho @ op).real
    got = correlation_tensor(from_state(bell(0, 0)), 1, 2)
    assert np.abs(got - expected).max() < 1e-12
    assert np.allclose(got, np.diag([1.0, -1.0, 1.0]), atol=1e-12)


def test_correlation_tensor_validation():
    rho = from_state(bell(0, 0))
    with pytest.raises(ValueError):
        correlation_tensor(rho, 1, 1)


def _z_projectors():
    return [projector(0), projector(1)]


def test_measure_deterministic_outcome():
    rec = measure(from_state(ket(0)), _z_projectors(), seed=11)
    assert rec.outcome == 0
    assert abs(rec.probability - 1) < 1e-12


def test_measure_branch_born_rule():
    rec = measure_branch(from_state(ket(0, BasisKind.X)), _z_projectors(), 1)
    assert abs(rec.probability - 0.5) < 1e-12
    assert np.abs(rec.post_state.matrix - [[0, 0], [0, 1]]).max() < 1e-12


def test_measure_probabilities_sum_to_one(rng):
    for _ in range(5):
        rho = DensityMatrix(QOperator(1, random_density(1, rng)))
        probs = [measure_branch(rho, _z_projectors(), k).probability for k in (0, 1)]
        assert abs(sum(probs) - 1) < 1e-10


def test_measure_reproducible_and_validated(rng):
    rho = from_state(random_state(1, rng))
    a = measure(rho, _z_projectors(), seed=99)
    b = measure(rho, _z_projectors(), seed=99)
    assert a.outcome == b.outcome
    with pytest.raises(ValueError):
        measure(rho, [projector(0)], seed=0)  # incomplete set
    with pytest.raises(ValueError):
        measure_branch(from_state(ket(0)), _z_projectors(), 1)  # forbidden branch


def test_density_json_round_trip():
    rho = werner(0.3, 1, 0)
    again = DensityMatrix.from_json_dict(rho.to_json_dict())
    assert again.isclose(rho, atol=1e-15)
