"""Measurement-based ("one-way") computing on small CPHASE clusters.

Two demonstrations: transport of one qubit along a two-qubit cluster, and a
CNOT realized on a four-qubit cluster.  Inputs are entangled into the cluster
by CPHASE edges, intermediate qubits are measured in the x basis, and the
surviving qubits carry the result up to outcome-dependent Pauli corrections
(derived by exhaustive search, then frozen; tests re-derive them).

Transport moves |psi> from qubit 1 to qubit 2 as sigma_x^a H|psi> for outcome
a, so the branch-independent transported state carries a Hadamard.

The CNOT cluster uses qubit 1 as control (in and out), target line 2 -> 3 -> 4
with edges (1,3), (2,3), (3,4); qubits 2 and 3 are measured, the result lives
on (1, 4), and each branch has probability 1/4 for any input.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

import numpy as np

from ..density import (
    DensityMatrix,
    _branch_probabilities,
    evolve,
    fidelity,
    from_state,
    measure_branch,
    ptrace,
)
from ..gates import cnot, cphase, hadamard1, place
from ..pauli import QOperator, projector
from ..qstate import BasisKind, StateVector, ket, tensor_state
from .teleport import correction_unitary

# branch bit a -> sigma_x^a on the transported qubit
TRANSPORT_CORRECTIONS = {(0,): ((0, 0),), (1,): ((0, 1),)}

# measured bits (m2, m3) -> (z, x) exponents on (control, target-out)
CNOT_CORRECTIONS = {
    (m2, m3): ((m2, 0), (m2, m3)) for m2, m3 in product((0, 1), repeat=2)
}


@dataclass(frozen=True)
class ClusterTransportOutcome:
    outcome: int
    probability: float
    transported: DensityMatrix
    corrected: DensityMatrix
    fidelity_vs_target: float


@dataclass(frozen=True)
class ClusterCnotOutcome:
    bits: tuple[int, int]
    probability: float
    output_state: DensityMatrix
    fidelity_vs_cnot: float


def cluster_prepare(n: int, edges: Sequence[tuple[int, int]]) -> StateVector:
    """Cluster state: |+> on every qubit, one CPHASE per edge.

    Edge order is irrelevant (all CPHASEs are diagonal and commute), and a
    repeated edge cancels itself.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    psi = ket(0, BasisKind.X)
    for _ in range(n - 1):
        psi = tensor_state(psi, ket(0, BasisKind.X))
    for q1, q2 in edges:
        psi = cphase(n, q1, q2) @ psi
    return psi


def _x_projectors(n: int, measured: Sequence[int]) -> list[QOperator]:
    return [
        place(n, {q: projector(b, BasisKind.X) for q, b in zip(measured, bits)})
        for bits in product((0, 1), repeat=len(measured))
    ]


def _branch_bits(k: int, width: int) -> tuple[int, ...]:
    return tuple((k >> (width - 1 - i)) & 1 for i in range(width))


def _resolve_branch(rho, projectors, branch, seed, width) -> int:
    if branch is not None:
        bits = tuple(int(b) for b in (branch if hasattr(branch, "__len__") else (branch,)))
        if len(bits) != width or any(b not in (0, 1) for b in bits):
            raise ValueError(f"branch must be {width} bits, got {bits}")
        return int("".join(str(b) for b in bits), 2)
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    probs = _branch_probabilities(rho, projectors)
    return int(rng.choice(len(probs), p=probs / probs.sum()))


def _transport_state(psi: StateVector) -> DensityMatrix:
    if psi.n_qubits != 1:
        raise ValueError("cluster_transport takes a one-qubit state")
    if not psi.is_normalized(1e-10):
        raise ValueError("input state must be normalized")
    full = tensor_state(psi, ket(0, BasisKind.X))
    return evolve(from_state(full), cphase(2, 1, 2))


def _transport_branch(rho: DensityMatrix, target: DensityMatrix, k: int):
    rec = measure_branch(rho, _x_projectors(2, (1,)), k)
    transported = ptrace([1], rec.post_state)
    corrected = evolve(
        transported, correction_unitary(TRANSPORT_CORRECTIONS[(k,)])
    )
    return ClusterTransportOutcome(
        k, rec.probability, transported, corrected, fidelity(corrected, target)
    )


def cluster_transport(psi: StateVector, branch=None, seed=None) -> ClusterTransportOutcome:
    """Transport |psi> across one cluster link; X-measure qubit 1.

    The qubit-2 state is sigma_x^outcome H|psi|>; the corrected state is the
    branch-independent H|psi> and fidelity is taken against it.
    """
    rho = _transport_state(psi)
    target = from_state(hadamard1() @ psi)
    k = _resolve_branch(rho, _x_projectors(2, (1,)), branch, seed, 1)
    return _transport_branch(rho, target, k)


def cluster_transport_branches(psi: StateVector) -> list[ClusterTransportOutcome]:
    rho = _transport_state(psi)
    target = from_state(hadamard1() @ psi)
    return [_transport_branch(rho, target, k) for k in (0, 1)]


def _cnot_state(psi2: StateVector) -> DensityMatrix:
    if psi2.n_qubits != 2:
        raise ValueError("cluster_cnot takes a two-qubit state")
    if not psi2.is_normalized(1e-10):
        raise ValueError("input state must be normalized")
    full = tensor_state(tensor_state(psi2, ket(0, BasisKind.X)), ket(0, BasisKind.X))
    entangle = cphase(4, 3, 4) @ cphase(4, 1, 3) @ cphase(4, 2, 3)
    return evolve(from_state(full), entangle)


def _cnot_branch(rho: DensityMatrix, target: DensityMatrix, k: int):
    bits = _branch_bits(k, 2)
    rec = measure_branch(rho, _x_projectors(4, (2, 3)), k)
    out = ptrace([2, 3], rec.post_state)
    corrected = evolve(out, correction_unitary(CNOT_CORRECTIONS[bits]))
    return ClusterCnotOutcome(
        bits, rec.probability, corrected, fidelity(corrected, target)
    )


def cluster_cnot(psi2: StateVector, branches=None, seed=None) -> ClusterCnotOutcome:
    """CNOT (control qubit 1) on the four-qubit cluster; one branch."""
    rho = _cnot_state(psi2)
    target = from_state(cnot(2, 1, 2) @ psi2)
    k = _resolve_branch(rho, _x_projectors(4, (2, 3)), branches, seed, 2)
    return _cnot_branch(rho, target, k)


def cluster_cnot_branches(psi2: StateVector) -> list[ClusterCnotOutcome]:
    rho = _cnot_state(psi2)
    target = from_state(cnot(2, 1, 2) @ psi2)
    return [_cnot_branch(rho, target, k) for k in range(4)]
