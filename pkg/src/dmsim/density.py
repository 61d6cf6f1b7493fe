"""Density matrices and their functionals.

Provides the validated :class:`DensityMatrix` type plus purity, von Neumann
entropy, fidelity, polarization observables, unitary evolution, projective
measurement, and two independent partial-trace routes:

* :func:`ptrace` expands the operator over the Pauli tensor basis, keeps the
  coefficients whose traced slots are the identity component, scales by 2 per
  traced qubit, and reconstructs in the reduced space.
* :func:`ptrace_direct` sums matrix elements over the traced indices and
  never touches the Pauli expansion; it serves as the cross-check oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .pauli import QOperator, coefficient_table, sp, table_to_matrix
from .qstate import StateVector

HERMITIAN_ATOL = 1e-12
TRACE_ATOL = 1e-12
EIGENVALUE_FLOOR = -1e-10
PURITY_CEIL = 1.0 + 1e-12
BRANCH_MIN_PROB = 1e-14


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite operator.

    The invariants are checked on construction, so every value of this type
    produced anywhere in the package is a valid state.
    """

    op: QOperator

    def __post_init__(self) -> None:
        m = self.op.matrix
        if not self.op.is_hermitian(HERMITIAN_ATOL):
            raise ValueError("density matrix must be Hermitian")
        tr = np.trace(m)
        if abs(tr - 1.0) > TRACE_ATOL:
            raise ValueError(f"density matrix must have unit trace, got {tr}")
        eigs = np.linalg.eigvalsh(m)
        if eigs.min() < EIGENVALUE_FLOOR:
            raise ValueError(
                f"density matrix must be positive semidefinite, min eigenvalue {eigs.min()}"
            )
        if float(np.sum(eigs**2)) > PURITY_CEIL:
            raise ValueError("density matrix violates Tr[rho^2] <= 1")

    @property
    def n_qubits(self) -> int:
        return self.op.n_qubits

    @property
    def matrix(self) -> np.ndarray:
        return self.op.matrix

    @property
    def dim(self) -> int:
        return self.op.dim

    @classmethod
    def from_matrix(cls, m: np.ndarray, n_qubits: int) -> "DensityMatrix":
        return cls(QOperator(n_qubits, m))

    def isclose(self, other: "DensityMatrix", atol: float = 1e-12) -> bool:
        return self.op.isclose(other.op, atol=atol)

    def to_json_dict(self) -> dict:
        """JSON form: dimension plus row-major [re, im] entries."""
        flat = self.matrix.reshape(-1)
        return {
            "n_qubits": self.n_qubits,
            "dim": self.dim,
            "entries": [[float(x.real), float(x.imag)] for x in flat],
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> "DensityMatrix":
        n = int(payload["n_qubits"])
        dim = 2**n
        entries = payload["entries"]
        if len(entries) != dim * dim:
            raise ValueError(f"expected {dim * dim} entries, got {len(entries)}")
        m = np.array([complex(re, im) for re, im in entries]).reshape(dim, dim)
        return cls(QOperator(n, m))


@dataclass(frozen=True)
class MeasurementRecord:
    """Outcome label, its Born probability, and the collapsed state."""

    outcome: int
    probability: float
    post_state: DensityMatrix


def from_state(psi: StateVector) -> DensityMatrix:
    """Rank-one density matrix |psi><psi| of a normalized pure state."""
    if not psi.is_normalized(1e-10):
        raise ValueError("state must be normalized to build a density matrix")
    amps = psi.amplitudes
    return DensityMatrix(QOperator(psi.n_qubits, np.outer(amps, amps.conj())))


def maximally_mixed(n_qubits: int) -> DensityMatrix:
    dim = 2**n_qubits
    return DensityMatrix(QOperator(n_qubits, np.eye(dim) / dim))


def evolve(rho: DensityMatrix, u: QOperator) -> DensityMatrix:
    """Unitary conjugation ``U rho U^dag``."""
    if u.dim != rho.dim:
        raise ValueError("operator and state dimensions do not match")
    if not u.is_unitary(1e-10):
        raise ValueError("evolution operator must be unitary")
    m = u.matrix @ rho.matrix @ u.matrix.conj().T
    return DensityMatrix(QOperator(rho.n_qubits, m))


def purity(rho: DensityMatrix) -> float:
    """Tr[rho^2]; equals 1 exactly for pure states."""
    return float(np.einsum("ij,ji->", rho.matrix, rho.matrix).real)


def entropy(rho: DensityMatrix) -> float:
    """Von Neumann entropy in bits, with 0*log(0) taken as 0."""
    eigs = np.linalg.eigvalsh(rho.matrix)
    eigs = np.clip(eigs, 0.0, None)
    pos = eigs[eigs > 0.0]
    return float(-np.sum(pos * np.log2(pos)))


def _psd_eigvals(eigs: np.ndarray) -> np.ndarray:
    # Eigenvalues below the numerical-zero scale would contribute sqrt(eps)
    # errors after a square root; treat them as exact zeros.
    floor = eigs.size * np.finfo(float).eps * max(float(eigs.max()), 0.0)
    return np.where(eigs < floor, 0.0, eigs)


def _psd_sqrt(m: np.ndarray) -> np.ndarray:
    eigs, vecs = np.linalg.eigh(m)
    eigs = _psd_eigvals(eigs)
    return (vecs * np.sqrt(eigs)) @ vecs.conj().T


def fidelity(rho1: DensityMatrix, rho2: DensityMatrix) -> float:
    """Tr[sqrt(sqrt(rho2) rho1 sqrt(rho2))].

    Reduces to |<psi1|psi2>| when both states are pure and to 1 when the
    arguments coincide.
    """
    if rho1.dim != rho2.dim:
        raise ValueError("density matrix dimensions do not match")
    s = _psd_sqrt(rho2.matrix)
    inner = s @ rho1.matrix @ s
    eigs = np.linalg.eigvalsh((inner + inner.conj().T) / 2)
    return float(np.sum(np.sqrt(_psd_eigvals(eigs))))


def _check_traced(n_qubits: int, traced: Iterable[int]) -> list[int]:
    labels = [int(q) for q in traced]
    if not labels:
        raise ValueError("must trace out at least one qubit")
    if len(set(labels)) != len(labels):
        raise ValueError(f"traced labels must be distinct, got {labels}")
    for q in labels:
        if not 1 <= q <= n_qubits:
            raise ValueError(f"qubit label {q} out of range 1..{n_qubits}")
    return sorted(labels)


def _wrap_like(source, n_qubits: int, m: np.ndarray):
    op = QOperator(n_qubits, m)
    return DensityMatrix(op) if isinstance(source, DensityMatrix) else op


def ptrace(traced: Iterable[int], op: QOperator | DensityMatrix):
    """Partial trace via the Pauli coefficient expansion.

    Keeps only expansion terms whose component is 0 on every traced qubit,
    drops those slots, multiplies by 2 per traced qubit, and reconstructs the
    operator on the surviving qubits (which keep their relative order).
    Tracing out all qubits yields the 1x1 total trace.
    """
    matrix = op.matrix
    n = op.n_qubits
    labels = _check_traced(n, traced)
    if len(labels) == n:
        return _wrap_like(op, 0, np.trace(matrix).reshape(1, 1))
    table = coefficient_table(matrix, n)
    keep = tuple(0 if q in labels else slice(None) for q in range(1, n + 1))
    sub = table[keep] * 2 ** len(labels)
    n_out = n - len(labels)
    return _wrap_like(op, n_out, table_to_matrix(sub, n_out))


def ptrace_direct(traced: Iterable[int], op: QOperator | DensityMatrix):
    """Partial trace by direct summation over the traced subsystem indices."""
    matrix = op.matrix
    n = op.n_qubits
    labels = _check_traced(n, traced)
    if len(labels) == n:
        return _wrap_like(op, 0, np.trace(matrix).reshape(1, 1))
    kept = [q for q in range(1, n + 1) if q not in labels]
    t = matrix.reshape((2,) * (2 * n))
    perm = (
        [q - 1 for q in kept]
        + [q - 1 for q in labels]
        + [n + q - 1 for q in kept]
        + [n + q - 1 for q in labels]
    )
    dim_keep = 2 ** len(kept)
    dim_traced = 2 ** len(labels)
    blocks = t.transpose(perm).reshape(dim_keep, dim_traced, dim_keep, dim_traced)
    return _wrap_like(op, len(kept), np.einsum("atbt->ab", blocks))


def _expectation(rho: DensityMatrix, pauli_word: Sequence[int]) -> float:
    observable = sp(rho.n_qubits, pauli_word)
    return float(np.einsum("ij,ji->", rho.matrix, observable.matrix).real)


def polarization(rho: DensityMatrix, qubit: int) -> np.ndarray:
    """Bloch vector <sigma_i> of one qubit of a multi-qubit state."""
    if not 1 <= qubit <= rho.n_qubits:
        raise ValueError(f"qubit label {qubit} out of range 1..{rho.n_qubits}")
    vec = np.zeros(3)
    for i in (1, 2, 3):
        word = [0] * rho.n_qubits
        word[qubit - 1] = i
        vec[i - 1] = _expectation(rho, word)
    return vec


def correlation_tensor(rho: DensityMatrix, q1: int, q2: int) -> np.ndarray:
    """Spin correlation tensor T_ij = <sigma_i^(q1) sigma_j^(q2)>."""
    for q in (q1, q2):
        if not 1 <= q <= rho.n_qubits:
            raise ValueError(f"qubit label {q} out of range 1..{rho.n_qubits}")
    if q1 == q2:
        raise ValueError("correlation tensor needs two distinct qubits")
    tensor = np.zeros((3, 3))
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            word = [0] * rho.n_qubits
            word[q1 - 1] = i
            word[q2 - 1] = j
            tensor[i - 1, j - 1] = _expectation(rho, word)
    return tensor


def _branch_probabilities(
    rho: DensityMatrix, projectors: Sequence[QOperator]
) -> np.ndarray:
    total = sum(p.matrix for p in projectors)
    if not np.allclose(total, np.eye(rho.dim), atol=1e-10, rtol=0.0):
        raise ValueError("projector set is incomplete (does not sum to identity)")
    probs = np.array(
        [
            float(np.trace(p.matrix @ rho.matrix @ p.matrix).real)
            for p in projectors
        ]
    )
    return np.clip(probs, 0.0, None)


def _branch_record(
    rho: DensityMatrix, projectors: Sequence[QOperator], k: int, prob: float
) -> MeasurementRecord:
    p = projectors[k].matrix
    post = p @ rho.matrix @ p / prob
    post = (post + post.conj().T) / 2
    return MeasurementRecord(k, prob, DensityMatrix(QOperator(rho.n_qubits, post)))


def measure(
    rho: DensityMatrix, projectors: Sequence[QOperator], seed=None
) -> MeasurementRecord:
    """Projective measurement: sample an outcome and collapse.

    The projector set must be complete and orthogonal.  Outcome ``k`` occurs
    with probability ``Tr[P_k rho P_k]``; the collapsed state is
    ``P_k rho P_k / p_k``.  Reproducible given the seed.
    """
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    probs = _branch_probabilities(rho, projectors)
    k = int(rng.choice(len(projectors), p=probs / probs.sum()))
    return _branch_record(rho, projectors, k, float(probs[k]))


def measure_branch(
    rho: DensityMatrix, projectors: Sequence[QOperator], outcome: int
) -> MeasurementRecord:
    """Deterministic variant of :func:`measure` with a forced outcome."""
    probs = _branch_probabilities(rho, projectors)
    if not 0 <= outcome < len(projectors):
        raise ValueError(f"outcome {outcome} out of range")
    if probs[outcome] < BRANCH_MIN_PROB:
        raise ValueError(
            f"forced branch {outcome} has vanishing probability {probs[outcome]}"
        )
    return _branch_record(rho, projectors, outcome, float(probs[outcome]))
