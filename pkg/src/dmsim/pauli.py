"""Pauli matrices, multi-qubit tensor operators, coefficient expansion,
spin rotations, and projection operators.

Any ``2**n x 2**n`` operator M decomposes uniquely over the tensor-product
Pauli basis as ``M = sum_a c_a * sp(n, a)`` with
``c_a = Tr[M . sp(n, a)] / 2**n``; that expansion underlies the
coefficient-based partial trace in :mod:`dmsim.density`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from .qstate import BasisKind, StateVector

# Index type for one Pauli tensor term: length-n word over {0,1,2,3}.
PauliIndex = tuple[int, ...]


def _readonly(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=np.complex128)
    m.setflags(write=False)
    return m


_SIGMA = (
    _readonly([[1, 0], [0, 1]]),
    _readonly([[0, 1], [1, 0]]),
    _readonly([[0, -1j], [1j, 0]]),
    _readonly([[1, 0], [0, -1]]),
)

# Raising/lowering combinations sigma_x +/- i sigma_y (nonzero entry is 2).
SIGMA_PLUS = _readonly([[0, 2], [0, 0]])
SIGMA_MINUS = _readonly([[0, 0], [2, 0]])

# Per-qubit transforms between the matrix-element axis (m = 2*row + col,
# size 4) and the Pauli-component axis (a, size 4):
#   coefficients:  c_a = (1/2) sum_m TO[a, m] T[m]   with TO[a, 2r+c] = sigma_a[c, r]
#   reconstruction: T[m] = sum_a FROM[m, a] c_a      with FROM[2r+c, a] = sigma_a[r, c]
_TO_COEFF = _readonly(np.stack([s.T.reshape(-1) for s in _SIGMA]))
_FROM_COEFF = _readonly(np.stack([s.reshape(-1) for s in _SIGMA], axis=1))


@dataclass(frozen=True, eq=False)
class QOperator:
    """Dense complex ``2**n_qubits`` square operator.

    Unitarity/Hermiticity are properties of specific factories, not of the
    type; use :meth:`is_unitary`/:meth:`is_hermitian` to assert them.
    ``n_qubits == 0`` (a 1x1 matrix) is permitted so a full trace can be
    returned by the partial-trace machinery.
    """

    n_qubits: int
    matrix: np.ndarray

    def __post_init__(self) -> None:
        if self.n_qubits < 0:
            raise ValueError("n_qubits must be >= 0")
        dim = 2**self.n_qubits
        m = np.asarray(self.matrix, dtype=np.complex128)
        if m.shape != (dim, dim):
            raise ValueError(f"expected shape {(dim, dim)}, got {m.shape}")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def dag(self) -> "QOperator":
        return QOperator(self.n_qubits, self.matrix.conj().T)

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    def is_hermitian(self, atol: float = 1e-12) -> bool:
        return bool(np.allclose(self.matrix, self.matrix.conj().T, atol=atol, rtol=0.0))

    def is_unitary(self, atol: float = 1e-10) -> bool:
        eye = np.eye(self.dim)
        return bool(
            np.allclose(self.matrix @ self.matrix.conj().T, eye, atol=atol, rtol=0.0)
        )

    def isclose(self, other: "QOperator", atol: float = 1e-12) -> bool:
        return self.n_qubits == other.n_qubits and bool(
            np.allclose(self.matrix, other.matrix, atol=atol, rtol=0.0)
        )

    def __matmul__(self, other):
        if isinstance(other, QOperator):
            if other.dim != self.dim:
                raise ValueError("operator dimensions do not match")
            return QOperator(self.n_qubits, self.matrix @ other.matrix)
        if isinstance(other, StateVector):
            if other.dim != self.dim:
                raise ValueError("operator and state dimensions do not match")
            return StateVector(other.n_qubits, self.matrix @ other.amplitudes)
        return NotImplemented

    def __add__(self, other: "QOperator") -> "QOperator":
        if not isinstance(other, QOperator):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError("operator dimensions do not match")
        return QOperator(self.n_qubits, self.matrix + other.matrix)

    def __sub__(self, other: "QOperator") -> "QOperator":
        if not isinstance(other, QOperator):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError("operator dimensions do not match")
        return QOperator(self.n_qubits, self.matrix - other.matrix)

    def __mul__(self, scalar) -> "QOperator":
        return QOperator(self.n_qubits, self.matrix * complex(scalar))

    __rmul__ = __mul__

    def __neg__(self) -> "QOperator":
        return QOperator(self.n_qubits, -self.matrix)


def identity(n_qubits: int) -> QOperator:
    return QOperator(n_qubits, np.eye(2**n_qubits, dtype=np.complex128))


def sigma(i: int) -> QOperator:
    """Pauli matrix sigma_i; index 0 is the 2x2 identity."""
    if i not in (0, 1, 2, 3):
        raise ValueError(f"Pauli index must be in 0..3, got {i!r}")
    return QOperator(1, _SIGMA[i])


def sigma_matrix(i: int) -> np.ndarray:
    """Raw 2x2 Pauli matrix (read-only view)."""
    if i not in (0, 1, 2, 3):
        raise ValueError(f"Pauli index must be in 0..3, got {i!r}")
    return _SIGMA[i]


def _check_pauli_index(n: int, a: Sequence[int]) -> PauliIndex:
    a = tuple(int(x) for x in a)
    if len(a) != n:
        raise ValueError(f"index length {len(a)} does not match n={n}")
    if any(x not in (0, 1, 2, 3) for x in a):
        raise ValueError(f"index entries must be in 0..3, got {a}")
    return a


def sp(n: int, a: Sequence[int]) -> QOperator:
    """Tensor product sigma_{a_1} x sigma_{a_2} x ... x sigma_{a_n}."""
    a = _check_pauli_index(n, a)
    m = _SIGMA[a[0]]
    for x in a[1:]:
        m = np.kron(m, _SIGMA[x])
    return QOperator(n, m)


def tensor_op(left: QOperator, right: QOperator) -> QOperator:
    """Kronecker product of operators; the left factor varies slowest."""
    return QOperator(
        left.n_qubits + right.n_qubits, np.kron(left.matrix, right.matrix)
    )


def _merge_qubit_axes(m: np.ndarray, n: int) -> np.ndarray:
    """Reshape a 2^n x 2^n matrix to an (4,)*n tensor, one axis per qubit."""
    t = m.reshape((2,) * (2 * n))
    perm = [ax for k in range(n) for ax in (k, n + k)]
    return t.transpose(perm).reshape((4,) * n)


def _split_qubit_axes(t: np.ndarray, n: int) -> np.ndarray:
    """Inverse of :func:`_merge_qubit_axes`."""
    t = t.reshape((2,) * (2 * n))
    perm = [2 * k for k in range(n)] + [2 * k + 1 for k in range(n)]
    return t.transpose(perm).reshape((2**n, 2**n))


def coefficient_table(m: np.ndarray, n: int) -> np.ndarray:
    """Pauli coefficients of ``m`` as an (4,)*n complex tensor.

    Entry ``[a_1, ..., a_n]`` equals ``Tr[m . sp(n, a)] / 2**n``.
    """
    t = _merge_qubit_axes(np.asarray(m, dtype=np.complex128), n)
    for _ in range(n):
        t = np.tensordot(_TO_COEFF, t, axes=([1], [t.ndim - 1]))
    return t / 2**n


def table_to_matrix(table: np.ndarray, n: int) -> np.ndarray:
    """Rebuild the 2^n x 2^n matrix ``sum_a table[a] * sp(n, a)``."""
    t = np.asarray(table, dtype=np.complex128)
    for _ in range(n):
        t = np.tensordot(_FROM_COEFF, t, axes=([1], [t.ndim - 1]))
    return _split_qubit_axes(t, n)


@dataclass(frozen=True, eq=False)
class PauliCoefficients:
    """All 4**n expansion coefficients of one operator.

    Coefficients are stored complex; they are real exactly when the source
    operator is Hermitian (e.g. a density matrix), which callers can assert
    via :meth:`max_abs_imag`.
    """

    n_qubits: int
    table: np.ndarray

    def __post_init__(self) -> None:
        t = np.asarray(self.table, dtype=np.complex128)
        if t.shape != (4,) * self.n_qubits:
            raise ValueError(f"expected shape {(4,) * self.n_qubits}, got {t.shape}")
        t = t.copy()
        t.setflags(write=False)
        object.__setattr__(self, "table", t)

    def coefficient(self, a: Sequence[int]) -> complex:
        return complex(self.table[_check_pauli_index(self.n_qubits, a)])

    def __getitem__(self, a: Sequence[int]) -> complex:
        return self.coefficient(a)

    def items(self) -> Iterator[tuple[PauliIndex, complex]]:
        for a in product(range(4), repeat=self.n_qubits):
            yield a, complex(self.table[a])

    def max_abs_imag(self) -> float:
        return float(np.abs(self.table.imag).max())

    def reconstruct(self) -> QOperator:
        return QOperator(self.n_qubits, table_to_matrix(self.table, self.n_qubits))


def pauli_coefficients(op: QOperator) -> PauliCoefficients:
    """Expand ``op`` over the Pauli tensor basis.

    The reconstruction ``sum_a c_a sp(n, a)`` reproduces ``op``; see
    :meth:`PauliCoefficients.reconstruct`.
    """
    if op.n_qubits < 1:
        raise ValueError("operator must act on at least one qubit")
    return PauliCoefficients(op.n_qubits, coefficient_table(op.matrix, op.n_qubits))


def _unit_vector(direction: Sequence[float]) -> np.ndarray:
    v = np.asarray(direction, dtype=float).reshape(-1)
    if v.shape != (3,):
        raise ValueError(f"direction must be a real 3-vector, got shape {v.shape}")
    norm = np.linalg.norm(v)
    if norm < 1e-12:
        raise ValueError("direction vector must be nonzero")
    return v / norm


def _sigma_dot(direction: np.ndarray) -> np.ndarray:
    return (
        direction[0] * _SIGMA[1]
        + direction[1] * _SIGMA[2]
        + direction[2] * _SIGMA[3]
    )


def rot_axis(gamma: float, axis: Sequence[float]) -> QOperator:
    """Spin rotation by angle gamma about the (normalized) axis.

    Equals ``cos(gamma/2) I - i sin(gamma/2) (sigma . axis)`` and is unitary.
    """
    n_hat = _unit_vector(axis)
    m = np.cos(gamma / 2) * _SIGMA[0] - 1j * np.sin(gamma / 2) * _sigma_dot(n_hat)
    return QOperator(1, m)


def rot_to(theta: float, phi: float) -> StateVector:
    """Spin-up state rotated to the (theta, phi) direction.

    The result is the +1 eigenvector of ``sigma . n`` for
    ``n = (sin th cos ph, sin th sin ph, cos th)``.
    """
    amps = np.array(
        [
            np.cos(theta / 2) * np.exp(-1j * phi / 2),
            np.sin(theta / 2) * np.exp(+1j * phi / 2),
        ],
        dtype=np.complex128,
    )
    return StateVector(1, amps)


_BASIS_AXES = {
    BasisKind.COMPUTATIONAL: np.array([0.0, 0.0, 1.0]),
    BasisKind.X: np.array([1.0, 0.0, 0.0]),
    BasisKind.Y: np.array([0.0, 1.0, 0.0]),
}


def proj_general(a: int, direction: Sequence[float]) -> QOperator:
    """Projector onto the spin state pointing (anti-)parallel to direction.

    ``(I + (-1)**a sigma . n) / 2``; idempotent, Hermitian, trace one.
    """
    if a not in (0, 1):
        raise ValueError(f"projector label must be 0 or 1, got {a!r}")
    n_hat = _unit_vector(direction)
    sign = 1.0 if a == 0 else -1.0
    return QOperator(1, (_SIGMA[0] + sign * _sigma_dot(n_hat)) / 2)


def projector(a: int, basis: BasisKind = BasisKind.COMPUTATIONAL) -> QOperator:
    """One-qubit projector |a><a| in the given basis."""
    return proj_general(a, _BASIS_AXES[basis])
