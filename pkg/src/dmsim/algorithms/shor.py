"""Period finding and factoring: QFT, register loading, and three pipelines.

The pipeline follows the textbook order: load register 2 with x^i mod N,
measure register 2, Fourier-transform register 1, measure it, and convert the
result to a period candidate by continued fractions.  Three methods share the
classical pre/post-processing and differ in how the transform is applied:

* ``DENSITY_QFT``      — full density-matrix evolution with the circuit QFT;
* ``STATEVECTOR_QFT``  — state-vector evolution with the circuit QFT;
* ``CLASSICAL_DFT``    — state-vector evolution applying the DFT matrix
                         directly to the register-1 amplitudes.

Register 1 spans qubits 1..n1 (most significant); register 2 spans the
remaining n2 qubits, so a basis index reads i * 2**n2 + w.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Sequence

import numpy as np

from ..density import DensityMatrix, evolve, from_state
from ..gates import controlled_op, had, swap
from ..pauli import QOperator, identity, tensor_op
from ..qstate import StateVector


class QftMethod(enum.Enum):
    CIRCUIT = "circuit"
    DFT = "dft"


class ShorMethod(enum.Enum):
    DENSITY_QFT = "density"
    STATEVECTOR_QFT = "statevector"
    CLASSICAL_DFT = "dft"


def dft_matrix(dim: int) -> np.ndarray:
    """Unitary DFT matrix F[j, k] = exp(2 pi i j k / dim) / sqrt(dim)."""
    j = np.arange(dim)
    return np.exp(2j * np.pi * np.outer(j, j) / dim) / np.sqrt(dim)


def qft(n: int, method: QftMethod = QftMethod.CIRCUIT) -> QOperator:
    """Quantum Fourier transform on n qubits.

    The circuit form is the usual Hadamard / controlled-phase ladder followed
    by the qubit-reversal swap network, and matches the direct DFT matrix
    entrywise (most-significant-qubit-first indexing).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if method is QftMethod.DFT:
        return QOperator(n, dft_matrix(2**n))
    u = identity(n)
    for target in range(1, n + 1):
        u = had(n, target) @ u
        for control in range(target + 1, n + 1):
            k = control - target + 1
            phase = np.diag([1.0, np.exp(2j * np.pi / 2**k)])
            u = controlled_op(n, control, target, phase) @ u
    for q in range(1, n // 2 + 1):
        u = swap(n, q, n + 1 - q) @ u
    return u


@dataclass(frozen=True)
class ShorRun:
    """One factoring attempt: the number N, base x, register sizes, method.

    ``store_register2=False`` skips building the joint state and samples the
    register-2 outcome from the classically computed value distribution
    (state-vector methods only); the register-1 statistics are identical.
    """

    N: int
    x: int
    n1: int | None = None
    n2: int | None = None
    method: ShorMethod = ShorMethod.CLASSICAL_DFT
    seed: int = 0
    store_register2: bool = True

    def __post_init__(self) -> None:
        if self.N < 3:
            raise ValueError("N must be a composite integer >= 3")
        if not 1 < self.x < self.N:
            raise ValueError("x must satisfy 1 < x < N")
        if gcd(self.x, self.N) != 1:
            raise ValueError(f"x={self.x} and N={self.N} must be coprime")
        n2 = self.n2 if self.n2 is not None else int(np.ceil(np.log2(self.N)))
        n1 = self.n1 if self.n1 is not None else 2 * n2
        if 2**n2 < self.N:
            raise ValueError(f"register 2 too small: 2^{n2} < N={self.N}")
        if n1 < 1:
            raise ValueError("register 1 must hold at least one qubit")
        object.__setattr__(self, "n1", n1)
        object.__setattr__(self, "n2", n2)


@dataclass(frozen=True)
class ShorResult:
    success: bool
    factors: tuple[int, int] | None
    register2_value: int | None
    register1_value: int
    period: int | None
    method: ShorMethod
    seed: int


def modexp_load(x: int, N: int, n1: int, n2: int) -> StateVector:
    """Joint state (1/sqrt(2^n1)) sum_i |i> |x^i mod N> after register load."""
    run = ShorRun(N=N, x=x, n1=n1, n2=n2)  # reuse the invariant checks
    m1, m2 = 2**run.n1, 2**run.n2
    amps = np.zeros(m1 * m2, dtype=np.complex128)
    value = 1
    for i in range(m1):
        amps[i * m2 + value] = 1.0
        value = (value * x) % N
    return StateVector(run.n1 + run.n2, amps / np.sqrt(m1))


def _modexp_values(x: int, N: int, m1: int) -> np.ndarray:
    values = np.empty(m1, dtype=np.int64)
    value = 1
    for i in range(m1):
        values[i] = value
        value = (value * x) % N
    return values


def continued_fraction_period(
    v: int, m: int, x: int, N: int, max_denominator: int
) -> int | None:
    """Period candidate from a register-1 outcome via continued fractions.

    Walks the convergents of v/m; a denominator d is accepted when
    x^d = 1 (mod N) and d <= max_denominator.  An odd denominator that fails
    is retried once at 2d.
    """
    if not 0 <= v < m:
        raise ValueError(f"outcome {v} out of range for register size {m}")
    # Convergent denominators of v/m by the Euclidean recurrence.
    denominators = []
    a, b = v, m
    d_prev, d = 1, 0
    while b:
        q = a // b
        a, b = b, a - q * b
        d_prev, d = d, q * d + d_prev
        denominators.append(d)
    if not denominators:
        denominators = [1]
    for d in denominators:
        if d < 1 or d > max_denominator:
            continue
        if pow(x, d, N) == 1:
            return d
        if d % 2 == 1 and 2 * d <= max_denominator and pow(x, 2 * d, N) == 1:
            return 2 * d
    return None


def _factors_from_period(x: int, N: int, r: int) -> tuple[int, int] | None:
    if r % 2 == 1:
        return None
    half = pow(x, r // 2, N)
    if half == N - 1:
        return None
    for candidate in (gcd(half - 1, N), gcd(half + 1, N)):
        if 1 < candidate < N:
            return tuple(sorted((candidate, N // candidate)))
    return None


def _sample(rng: np.random.Generator, probs: np.ndarray) -> int:
    probs = np.clip(probs, 0.0, None)
    return int(rng.choice(probs.size, p=probs / probs.sum()))


def _register2_collapse(
    run: ShorRun, rng: np.random.Generator
) -> tuple[int, np.ndarray]:
    """Measure register 2; return its value and the collapsed register-1 comb."""
    m1, m2 = 2**run.n1, 2**run.n2
    values = _modexp_values(run.x, run.N, m1)
    if run.store_register2:
        psi = modexp_load(run.x, run.N, run.n1, run.n2)
        joint = psi.amplitudes.reshape(m1, m2)
        probs = np.sum(np.abs(joint) ** 2, axis=0)
        w = _sample(rng, probs)
        reg1 = joint[:, w]
    else:
        counts = np.bincount(values, minlength=m2)
        w = _sample(rng, counts / m1)
        reg1 = np.where(values == w, 1.0, 0.0).astype(np.complex128)
    return w, reg1 / np.linalg.norm(reg1)


def _density_pipeline(run: ShorRun, rng: np.random.Generator) -> tuple[int, int]:
    """Full density-matrix evolution; returns (register2, register1) values."""
    m1, m2 = 2**run.n1, 2**run.n2
    rho = from_state(modexp_load(run.x, run.N, run.n1, run.n2))
    # Projective measurement of register 2 (computational), by index masks.
    diag = np.real(np.diag(rho.matrix))
    probs = diag.reshape(m1, m2).sum(axis=0)
    w = _sample(rng, probs)
    mask = np.zeros(m1 * m2)
    mask[w::m2] = 1.0
    collapsed = rho.matrix * np.outer(mask, mask) / probs[w]
    rho = DensityMatrix(QOperator(run.n1 + run.n2, collapsed))
    # Circuit QFT on register 1.
    u = tensor_op(qft(run.n1), identity(run.n2))
    rho = evolve(rho, u)
    diag = np.real(np.diag(rho.matrix))
    v = _sample(rng, diag.reshape(m1, m2).sum(axis=1))
    return w, v


def shor_factor(run: ShorRun) -> ShorResult:
    """One seeded factoring attempt.

    Probabilistic: a run can fail (period not recovered or unusable); callers
    repeat with fresh seeds.
    """
    rng = np.random.default_rng(run.seed)
    m1 = 2**run.n1
    if run.method is ShorMethod.DENSITY_QFT:
        w, v = _density_pipeline(run, rng)
    else:
        w, reg1 = _register2_collapse(run, rng)
        f = (
            qft(run.n1).matrix
            if run.method is ShorMethod.STATEVECTOR_QFT
            else dft_matrix(m1)
        )
        v = _sample(rng, np.abs(f @ reg1) ** 2)
    period = continued_fraction_period(v, m1, run.x, run.N, 2**run.n2)
    factors = _factors_from_period(run.x, run.N, period) if period else None
    return ShorResult(
        success=factors is not None,
        factors=factors,
        register2_value=w,
        register1_value=v,
        period=period,
        method=run.method,
        seed=run.seed,
    )


def outcome_distribution(run: ShorRun) -> np.ndarray:
    """Exact register-1 outcome distribution for the run's method.

    Marginalizes over the register-2 measurement; used to cross-check that
    the three methods agree without any sampling noise.
    """
    m1, m2 = 2**run.n1, 2**run.n2
    psi = modexp_load(run.x, run.N, run.n1, run.n2)
    joint = psi.amplitudes.reshape(m1, m2)
    weights = np.sum(np.abs(joint) ** 2, axis=0)
    if run.method is ShorMethod.DENSITY_QFT:
        rho1 = np.zeros((m1, m1), dtype=np.complex128)
        for w in range(m2):
            if weights[w] <= 0.0:
                continue
            col = joint[:, w]
            rho1 += np.outer(col, col.conj())
        u = qft(run.n1).matrix
        return np.real(np.diag(u @ rho1 @ u.conj().T))
    f = (
        qft(run.n1).matrix
        if run.method is ShorMethod.STATEVECTOR_QFT
        else dft_matrix(m1)
    )
    dist = np.zeros(m1)
    for w in range(m2):
        if weights[w] <= 0.0:
            continue
        col = joint[:, w] / np.sqrt(weights[w])
        dist += weights[w] * np.abs(f @ col) ** 2
    return dist
