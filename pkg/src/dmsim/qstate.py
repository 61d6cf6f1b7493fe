"""Construction and combination of multi-qubit state vectors.

Basis convention: qubit 1 is the most significant bit, so the basis index of
``|a_1 a_2 ... a_n>`` is ``sum(a_k * 2**(n-k))``.  All states are immutable
values; every operation returns a fresh vector.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

NORM_ATOL = 1e-12

_SQRT2_INV = 1.0 / np.sqrt(2.0)


class BasisKind(enum.Enum):
    """Single-qubit preparation/measurement basis."""

    COMPUTATIONAL = "computational"
    X = "x"
    Y = "y"


@dataclass(frozen=True, eq=False)
class StateVector:
    """Complex amplitude column of length ``2**n_qubits``."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.n_qubits < 1:
            raise ValueError("n_qubits must be a positive integer")
        amps = np.asarray(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.shape[0] != 2**self.n_qubits:
            raise ValueError(
                f"expected {2**self.n_qubits} amplitudes, got {amps.shape[0]}"
            )
        amps = amps.copy()
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def is_normalized(self, atol: float = NORM_ATOL) -> bool:
        return abs(self.norm() ** 2 - 1.0) <= atol

    def normalized(self) -> "StateVector":
        n = self.norm()
        if n < 1e-300:
            raise ValueError("cannot normalize a zero vector")
        return StateVector(self.n_qubits, self.amplitudes / n)

    def isclose(self, other: "StateVector", atol: float = 1e-12) -> bool:
        return self.n_qubits == other.n_qubits and bool(
            np.allclose(self.amplitudes, other.amplitudes, atol=atol, rtol=0.0)
        )

    def to_json_dict(self) -> dict:
        """JSON-friendly form: amplitudes as [re, im] pairs."""
        return {
            "n_qubits": self.n_qubits,
            "amplitudes": [[float(a.real), float(a.imag)] for a in self.amplitudes],
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> "StateVector":
        amps = np.array(
            [complex(re, im) for re, im in payload["amplitudes"]], dtype=np.complex128
        )
        return cls(int(payload["n_qubits"]), amps)


def _check_bit(value: int) -> int:
    if value not in (0, 1):
        raise ValueError(f"bit label must be 0 or 1, got {value!r}")
    return int(value)


def ket(label: int, basis: BasisKind = BasisKind.COMPUTATIONAL) -> StateVector:
    """One-qubit basis ket in the computational, x, or y basis.

    Computational kets are the columns of the identity; the x/y kets are
    ``(|0> ± |1>)/sqrt(2)`` and ``(|0> ± i|1>)/sqrt(2)`` with ``+`` for label 0.
    """
    a = _check_bit(label)
    sign = 1.0 if a == 0 else -1.0
    if basis is BasisKind.COMPUTATIONAL:
        amps = np.array([1.0 - a, float(a)], dtype=np.complex128)
    elif basis is BasisKind.X:
        amps = np.array([_SQRT2_INV, sign * _SQRT2_INV], dtype=np.complex128)
    elif basis is BasisKind.Y:
        amps = np.array([_SQRT2_INV, sign * 1j * _SQRT2_INV], dtype=np.complex128)
    else:
        raise ValueError(f"unknown basis {basis!r}")
    return StateVector(1, amps)


def ketv(bits: Sequence[int]) -> StateVector:
    """Computational product state ``|b_1 b_2 ... b_n>``.

    The single nonzero amplitude sits at index ``sum(b_k * 2**(n-k))``
    (qubit 1 most significant).
    """
    bits = [_check_bit(b) for b in bits]
    n = len(bits)
    if n < 1:
        raise ValueError("need at least one qubit")
    index = 0
    for b in bits:
        index = (index << 1) | b
    amps = np.zeros(2**n, dtype=np.complex128)
    amps[index] = 1.0
    return StateVector(n, amps)


def tensor_state(left: StateVector, right: StateVector) -> StateVector:
    """Kronecker product of two states; the left factor varies slowest."""
    return StateVector(
        left.n_qubits + right.n_qubits, np.kron(left.amplitudes, right.amplitudes)
    )


def inner(bra_of: StateVector, ket_: StateVector) -> complex:
    """Bracket ``<bra_of|ket_>``, conjugate-linear in the first argument."""
    if bra_of.dim != ket_.dim:
        raise ValueError(
            f"dimension mismatch: {bra_of.dim} vs {ket_.dim}"
        )
    return complex(np.vdot(bra_of.amplitudes, ket_.amplitudes))


def random_state(n_qubits: int, seed=None) -> StateVector:
    """Normalized state with complex Gaussian amplitudes (reproducible by seed)."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    amps = rng.standard_normal(2**n_qubits) + 1j * rng.standard_normal(2**n_qubits)
    return StateVector(n_qubits, amps / np.linalg.norm(amps))
