"""Grover search over an n-qubit register with one or more marked items."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..pauli import QOperator
from ..states import uniform


@dataclass(frozen=True)
class GroverProblem:
    """Search instance: register size, marked basis indices, iteration count.

    ``iterations=None`` selects the closed-form optimum
    round(pi / (4 arcsin sqrt(M/N)) - 1/2).
    """

    n_register: int
    marked: tuple[int, ...]
    iterations: int | None = None

    def __post_init__(self) -> None:
        if self.n_register < 1:
            raise ValueError("register must hold at least one qubit")
        marked = tuple(sorted(int(x) for x in self.marked))
        if not marked:
            raise ValueError("marked set must be nonempty")
        if len(set(marked)) != len(marked):
            raise ValueError("marked indices must be distinct")
        dim = 2**self.n_register
        if any(not 0 <= x < dim for x in marked):
            raise ValueError(f"marked indices must lie in [0, {dim})")
        if len(marked) >= dim:
            raise ValueError("cannot mark every basis state")
        if self.iterations is not None and self.iterations < 0:
            raise ValueError("iterations must be >= 0")
        object.__setattr__(self, "marked", marked)


@dataclass(frozen=True)
class GroverResult:
    problem: GroverProblem
    iterations: int
    distribution: np.ndarray
    success_probability: float


def grover_oracle(n: int, marked) -> QOperator:
    """The (n+1)-qubit oracle |x>|y> -> |x>|y XOR f(x)>.

    The recognition bit is the last (least significant) qubit; f(x) = 1
    exactly on the marked indices.
    """
    marked = set(GroverProblem(n, tuple(marked)).marked)
    dim = 2 ** (n + 1)
    m = np.zeros((dim, dim), dtype=np.complex128)
    for x in range(2**n):
        f = 1 if x in marked else 0
        for y in (0, 1):
            m[2 * x + (y ^ f), 2 * x + y] = 1.0
    return QOperator(n + 1, m)


def grover_phase_oracle(n: int, marked) -> QOperator:
    """The n-qubit reduction of the oracle: a sign flip on marked |x>.

    Equivalent to sandwiching :func:`grover_oracle` with the recognition
    qubit held in |->.
    """
    marked = set(GroverProblem(n, tuple(marked)).marked)
    diag = np.ones(2**n, dtype=np.complex128)
    for x in marked:
        diag[x] = -1.0
    return QOperator(n, np.diag(diag))


def grover_diffusion(n: int) -> QOperator:
    """Inversion about the mean: 2|s><s| - I with |s> the uniform state."""
    if n < 1:
        raise ValueError("n must be >= 1")
    s = uniform(n).amplitudes
    return QOperator(n, 2.0 * np.outer(s, s.conj()) - np.eye(2**n))


def default_iterations(n: int, n_marked: int) -> int:
    """Iteration count closest to the rotation-picture optimum."""
    theta = np.arcsin(np.sqrt(n_marked / 2**n))
    return max(0, int(np.floor(np.pi / (4 * theta))))


def grover_search(problem: GroverProblem) -> GroverResult:
    """Run the search and return the output-register distribution.

    Starts from the uniform superposition and applies
    (diffusion . phase-oracle) the requested number of times; the success
    probability is the total weight on the marked indices.
    """
    n = problem.n_register
    iterations = (
        problem.iterations
        if problem.iterations is not None
        else default_iterations(n, len(problem.marked))
    )
    g = (grover_diffusion(n) @ grover_phase_oracle(n, problem.marked)).matrix
    amps = uniform(n).amplitudes.copy()
    for _ in range(iterations):
        amps = g @ amps
    distribution = np.abs(amps) ** 2
    success = float(distribution[list(problem.marked)].sum())
    return GroverResult(problem, iterations, distribution, success)
