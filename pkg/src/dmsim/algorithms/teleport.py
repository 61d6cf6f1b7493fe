"""Teleportation of one qubit, a Bell pair, and a general two-qubit state.

Each variant runs the full density-matrix pipeline: prepare the joint state,
entangle, measure Alice's qubits projectively, trace them out, and apply
Bob's outcome-dependent Pauli correction.  The correction tables below were
derived by an exhaustive per-branch search for the sigma_z^p sigma_x^q
combination reaching fidelity 1 and then frozen; the tests re-derive them.

Register layouts (qubit 1 most significant):

* one:  qubit 1 holds the input, Bob's Bell pair lives on (2, 3); Alice
  measures (1, 2) and Bob corrects qubit 3.
* bell: the input Bell pair is (1, 2), Bob's GHZ resource is (3, 4, 5);
  Alice measures (1, 2, 3) and Bob corrects (4, 5).  Bit m2 of the outcome
  always equals the input label b, so half of the eight outcome labels have
  probability zero; enumeration returns only realizable branches.
* two:  the input is (1, 2), Bob's resource is two Bell pairs (3, 5) and
  (4, 6); Alice measures (1, 2, 3, 4) and Bob corrects (5, 6).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping, Sequence

import numpy as np

from ..density import (
    BRANCH_MIN_PROB,
    DensityMatrix,
    _branch_probabilities,
    evolve,
    fidelity,
    from_state,
    measure_branch,
    ptrace,
)
from ..gates import cnot, had, place
from ..pauli import QOperator, projector, sigma_matrix
from ..qstate import StateVector, ket, tensor_state
from ..states import bell

# Per-branch correction: one (z, x) exponent pair per Bob qubit, applied as
# sigma_z^z . sigma_x^x.
CorrectionTable = Mapping[tuple[int, ...], tuple[tuple[int, int], ...]]

CORRECTIONS_ONE: CorrectionTable = {
    (m1, m2): ((m1, m2),) for m1, m2 in product((0, 1), repeat=2)
}

CORRECTIONS_BELL: CorrectionTable = {
    (m1, m2, m3): ((0, 0), (m1, m2))
    for m1, m2, m3 in product((0, 1), repeat=3)
}

CORRECTIONS_TWO: CorrectionTable = {
    (m1, m2, m3, m4): ((m1, m3), (m2, m4))
    for m1, m2, m3, m4 in product((0, 1), repeat=4)
}


@dataclass(frozen=True)
class TeleportOutcome:
    """One measurement branch: Alice's bits, its probability, Bob's corrected
    state, and the fidelity against the original input."""

    alice_bits: tuple[int, ...]
    branch_probability: float
    bob_state: DensityMatrix
    fidelity_vs_input: float


@dataclass(frozen=True)
class _Protocol:
    n_total: int
    measured: tuple[int, ...]
    traced: tuple[int, ...]
    circuit: QOperator
    corrections: CorrectionTable

    def projectors(self) -> list[QOperator]:
        return [
            place(self.n_total, {q: projector(b) for q, b in zip(self.measured, bits)})
            for bits in product((0, 1), repeat=len(self.measured))
        ]


def correction_unitary(pairs: Sequence[tuple[int, int]]) -> QOperator:
    """Tensor product of per-qubit sigma_z^z . sigma_x^x corrections."""
    m = np.ones((1, 1), dtype=np.complex128)
    for z, x in pairs:
        q = np.eye(2, dtype=np.complex128)
        if x:
            q = sigma_matrix(1) @ q
        if z:
            q = sigma_matrix(3) @ q
        m = np.kron(m, q)
    return QOperator(len(pairs), m)


def _pad_with_zeros(psi: StateVector, extra: int) -> StateVector:
    full = psi
    for _ in range(extra):
        full = tensor_state(full, ket(0))
    return full


def _protocol_one() -> _Protocol:
    circuit = had(3, 1) @ cnot(3, 1, 2) @ cnot(3, 2, 3) @ had(3, 2)
    return _Protocol(3, (1, 2), (1, 2), circuit, CORRECTIONS_ONE)


def _protocol_bell() -> _Protocol:
    bob = cnot(5, 3, 5) @ cnot(5, 3, 4) @ had(5, 3)
    alice = had(5, 1) @ cnot(5, 1, 3) @ cnot(5, 1, 2)
    return _Protocol(5, (1, 2, 3), (1, 2, 3), alice @ bob, CORRECTIONS_BELL)


def _protocol_two() -> _Protocol:
    bob = cnot(6, 4, 6) @ cnot(6, 3, 5) @ had(6, 4) @ had(6, 3)
    alice = had(6, 2) @ had(6, 1) @ cnot(6, 2, 4) @ cnot(6, 1, 3)
    return _Protocol(6, (1, 2, 3, 4), (1, 2, 3, 4), alice @ bob, CORRECTIONS_TWO)


def _pre_measurement_state(protocol: _Protocol, psi: StateVector) -> DensityMatrix:
    if not psi.is_normalized(1e-10):
        raise ValueError("input state must be normalized")
    full = _pad_with_zeros(psi, protocol.n_total - psi.n_qubits)
    return evolve(from_state(full), protocol.circuit)


def _uncorrected_branch(
    protocol: _Protocol, rho: DensityMatrix, bits: tuple[int, ...]
) -> tuple[float, DensityMatrix]:
    """Probability and Bob's reduced state before the Pauli correction."""
    index = int("".join(str(b) for b in bits), 2)
    record = measure_branch(rho, protocol.projectors(), index)
    return record.probability, ptrace(protocol.traced, record.post_state)


def _run_branch(
    protocol: _Protocol,
    rho: DensityMatrix,
    target: DensityMatrix,
    bits: tuple[int, ...],
) -> TeleportOutcome:
    prob, bob = _uncorrected_branch(protocol, rho, bits)
    corrected = evolve(bob, correction_unitary(protocol.corrections[bits]))
    return TeleportOutcome(bits, prob, corrected, fidelity(corrected, target))


def _sample_bits(
    protocol: _Protocol, rho: DensityMatrix, seed
) -> tuple[int, ...]:
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    probs = _branch_probabilities(rho, protocol.projectors())
    k = int(rng.choice(len(probs), p=probs / probs.sum()))
    width = len(protocol.measured)
    return tuple((k >> (width - 1 - i)) & 1 for i in range(width))


def _check_branch(bits, width: int) -> tuple[int, ...]:
    bits = tuple(int(b) for b in bits)
    if len(bits) != width or any(b not in (0, 1) for b in bits):
        raise ValueError(f"branch must be {width} bits, got {bits}")
    return bits


def _run(protocol: _Protocol, psi: StateVector, target: DensityMatrix, branch, seed):
    rho = _pre_measurement_state(protocol, psi)
    if branch is None:
        branch = _sample_bits(protocol, rho, seed)
    else:
        branch = _check_branch(branch, len(protocol.measured))
    return _run_branch(protocol, rho, target, branch)


def _all_branches(protocol: _Protocol, psi: StateVector, target: DensityMatrix):
    rho = _pre_measurement_state(protocol, psi)
    probs = _branch_probabilities(rho, protocol.projectors())
    outcomes = []
    for k, bits in enumerate(product((0, 1), repeat=len(protocol.measured))):
        if probs[k] < BRANCH_MIN_PROB:
            continue
        outcomes.append(_run_branch(protocol, rho, target, bits))
    return outcomes


def teleport_one(psi: StateVector, branch=None, seed=None) -> TeleportOutcome:
    """Teleport a one-qubit state; branch is sampled unless forced."""
    if psi.n_qubits != 1:
        raise ValueError("teleport_one takes a one-qubit state")
    return _run(_protocol_one(), psi, from_state(psi), branch, seed)


def teleport_one_branches(psi: StateVector) -> list[TeleportOutcome]:
    if psi.n_qubits != 1:
        raise ValueError("teleport_one takes a one-qubit state")
    return _all_branches(_protocol_one(), psi, from_state(psi))


def teleport_bell(a: int, b: int, branch=None, seed=None) -> TeleportOutcome:
    """Teleport the Bell pair |B_ab> through a GHZ resource."""
    psi = bell(a, b)
    return _run(_protocol_bell(), psi, from_state(psi), branch, seed)


def teleport_bell_branches(a: int, b: int) -> list[TeleportOutcome]:
    psi = bell(a, b)
    return _all_branches(_protocol_bell(), psi, from_state(psi))


def teleport_two(psi2: StateVector, branch=None, seed=None) -> TeleportOutcome:
    """Teleport an arbitrary two-qubit state through two Bell pairs."""
    if psi2.n_qubits != 2:
        raise ValueError("teleport_two takes a two-qubit state")
    return _run(_protocol_two(), psi2, from_state(psi2), branch, seed)


def teleport_two_branches(psi2: StateVector) -> list[TeleportOutcome]:
    if psi2.n_qubits != 2:
        raise ValueError("teleport_two takes a two-qubit state")
    return _all_branches(_protocol_two(), psi2, from_state(psi2))
