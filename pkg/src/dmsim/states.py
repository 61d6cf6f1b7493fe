"""Factories for the special entangled and mixed states used by the demos."""

from __future__ import annotations

import numpy as np

from .density import DensityMatrix, from_state, maximally_mixed
from .pauli import QOperator, tensor_op
from .qstate import StateVector


def uniform(n_qubits: int) -> StateVector:
    """Uniform superposition of all computational basis states."""
    if n_qubits < 1:
        raise ValueError("n_qubits must be >= 1")
    dim = 2**n_qubits
    return StateVector(n_qubits, np.full(dim, 1.0 / np.sqrt(dim), dtype=np.complex128))


def bell(a: int, b: int) -> StateVector:
    """Bell state ``(|0 b> + (-1)^a |1 !b>)/sqrt(2)``.

    Equals the circuit construction: CNOT(1->2) after a Hadamard on qubit 1,
    applied to |a b>.
    """
    if a not in (0, 1) or b not in (0, 1):
        raise ValueError("Bell labels must be bits")
    amps = np.zeros(4, dtype=np.complex128)
    amps[0b00 | b] = 1.0
    amps[0b10 | (1 - b)] = (-1.0) ** a
    return StateVector(2, amps / np.sqrt(2.0))


def ghz(a: int, b: int, c: int) -> StateVector:
    """GHZ state ``(|0 b c> + (-1)^a |1 !b !c>)/sqrt(2)``."""
    if any(x not in (0, 1) for x in (a, b, c)):
        raise ValueError("GHZ labels must be bits")
    amps = np.zeros(8, dtype=np.complex128)
    amps[(0 << 2) | (b << 1) | c] = 1.0
    amps[(1 << 2) | ((1 - b) << 1) | (1 - c)] = (-1.0) ** a
    return StateVector(3, amps / np.sqrt(2.0))


def werner(lam: float, a: int = 0, b: int = 0) -> DensityMatrix:
    """Noisy-entanglement interpolation between a Bell projector and I/4.

    ``lam = 1`` gives the pure Bell state |B_ab>, ``lam = 0`` the product of
    two maximally mixed qubits.
    """
    if not 0.0 <= lam <= 1.0:
        raise ValueError(f"lambda must lie in [0, 1], got {lam}")
    bell_part = from_state(bell(a, b)).matrix
    mixed = tensor_op(maximally_mixed(1).op, maximally_mixed(1).op).matrix
    return DensityMatrix(QOperator(2, lam * bell_part + (1.0 - lam) * mixed))
