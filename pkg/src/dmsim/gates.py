"""Circuit-model gate factories.

Qubit labels run 1..L with qubit 1 the most significant bit of the basis
index.  All factories return unitary :class:`~dmsim.pauli.QOperator` values
built by projector-sum tensor assembly, so control and target may appear in
either order.
"""

from __future__ import annotations

from typing import Mapping, Sequence

import numpy as np

from .pauli import QOperator, projector, sigma_matrix

_I2 = sigma_matrix(0)
_P0 = projector(0).matrix
_P1 = projector(1).matrix


def _check_labels(n_qubits: int, *labels: int) -> None:
    for q in labels:
        if not 1 <= q <= n_qubits:
            raise ValueError(f"qubit label {q} out of range 1..{n_qubits}")
    if len(set(labels)) != len(labels):
        raise ValueError(f"qubit labels must be distinct, got {labels}")


def _one_qubit_matrix(op: QOperator | np.ndarray) -> np.ndarray:
    m = op.matrix if isinstance(op, QOperator) else np.asarray(op, dtype=np.complex128)
    if m.shape != (2, 2):
        raise ValueError(f"expected a one-qubit (2x2) operator, got shape {m.shape}")
    return m


def place(n_qubits: int, ops: Mapping[int, QOperator | np.ndarray]) -> QOperator:
    """Embed one-qubit operators at the labelled slots, identity elsewhere."""
    _check_labels(n_qubits, *ops.keys())
    slots = {q: _one_qubit_matrix(op) for q, op in ops.items()}
    m = np.ones((1, 1), dtype=np.complex128)
    for q in range(1, n_qubits + 1):
        m = np.kron(m, slots.get(q, _I2))
    return QOperator(n_qubits, m)


def hadamard1() -> QOperator:
    """One-qubit Hadamard (sigma_x + sigma_z)/sqrt(2)."""
    return QOperator(1, (sigma_matrix(1) + sigma_matrix(3)) / np.sqrt(2.0))


def had_mask(n_qubits: int, mask: Sequence[int]) -> QOperator:
    """Hadamards on every qubit whose mask entry is 1, identity elsewhere."""
    mask = [int(b) for b in mask]
    if len(mask) != n_qubits:
        raise ValueError(f"mask length {len(mask)} does not match L={n_qubits}")
    if any(b not in (0, 1) for b in mask):
        raise ValueError(f"mask entries must be 0 or 1, got {mask}")
    h = hadamard1()
    return place(n_qubits, {q + 1: h for q, b in enumerate(mask) if b})


def had(n_qubits: int, qubit: int) -> QOperator:
    """Hadamard on a single qubit of an L-qubit register."""
    _check_labels(n_qubits, qubit)
    return place(n_qubits, {qubit: hadamard1()})


def hall(n_qubits: int) -> QOperator:
    """Hadamard on every qubit."""
    return had_mask(n_qubits, [1] * n_qubits)


def controlled_op(
    n_qubits: int, control: int, target: int, omega: QOperator | np.ndarray
) -> QOperator:
    """Controlled one-qubit operator: |0><0|_c x I + |1><1|_c x omega_t."""
    _check_labels(n_qubits, control, target)
    m = _one_qubit_matrix(omega)
    return place(n_qubits, {control: _P0}) + place(
        n_qubits, {control: _P1, target: m}
    )


def cnot(n_qubits: int, control: int, target: int) -> QOperator:
    """Controlled-NOT (controlled sigma_x)."""
    return controlled_op(n_qubits, control, target, sigma_matrix(1))


def cphase(n_qubits: int, control: int, target: int) -> QOperator:
    """Controlled phase flip (controlled sigma_z)."""
    return controlled_op(n_qubits, control, target, sigma_matrix(3))


def crot(n_qubits: int, control: int, target: int) -> QOperator:
    """Controlled i*sigma_y."""
    return controlled_op(n_qubits, control, target, 1j * sigma_matrix(2))


# ControlledX/ControlledY: read here as the sigma_x / sigma_y specializations
# of the generic controlled embedding (ControlledX coincides with cnot).
def controlled_x(n_qubits: int, control: int, target: int) -> QOperator:
    return controlled_op(n_qubits, control, target, sigma_matrix(1))


def controlled_y(n_qubits: int, control: int, target: int) -> QOperator:
    return controlled_op(n_qubits, control, target, sigma_matrix(2))


def swap(n_qubits: int, q1: int, q2: int) -> QOperator:
    """Exchange the contents of two qubits (three-CNOT chain)."""
    _check_labels(n_qubits, q1, q2)
    return cnot(n_qubits, q1, q2) @ cnot(n_qubits, q2, q1) @ cnot(n_qubits, q1, q2)


def two_op(
    n_qubits: int,
    q1: int,
    q2: int,
    op1: QOperator | np.ndarray,
    op2: QOperator | np.ndarray,
) -> QOperator:
    """Two one-qubit operators placed at their labelled slots."""
    _check_labels(n_qubits, q1, q2)
    return place(n_qubits, {q1: op1, q2: op2})


def three_op(
    n_qubits: int,
    q1: int,
    q2: int,
    q3: int,
    op1: QOperator | np.ndarray,
    op2: QOperator | np.ndarray,
    op3: QOperator | np.ndarray,
) -> QOperator:
    """Three one-qubit operators placed at their labelled slots."""
    _check_labels(n_qubits, q1, q2, q3)
    return place(n_qubits, {q1: op1, q2: op2, q3: op3})


def toffoli(n_qubits: int, control1: int, control2: int, target: int) -> QOperator:
    """Doubly controlled NOT: the target flips only when both controls are 1."""
    _check_labels(n_qubits, control1, control2, target)
    x = sigma_matrix(1)
    return (
        place(n_qubits, {control1: _P0, control2: _P0})
        + place(n_qubits, {control1: _P0, control2: _P1})
        + place(n_qubits, {control1: _P1, control2: _P0})
        + place(n_qubits, {control1: _P1, control2: _P1, target: x})
    )
