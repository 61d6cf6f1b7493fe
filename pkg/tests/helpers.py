"""Shared test oracles, independent of the library code paths they check."""

from __future__ import annotations

from itertools import product
from math import gcd

import numpy as np

from dmsim.density import evolve, fidelity
from dmsim.pauli import QOperator

SIGMA = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def kron_chain(mats) -> np.ndarray:
    out = np.ones((1, 1), dtype=complex)
    for m in mats:
        out = np.kron(out, m)
    return out


def pauli_table_bruteforce(matrix: np.ndarray, n: int) -> dict:
    """Coefficient table computed by explicit trace loops."""
    table = {}
    for word in product(range(4), repeat=n):
        basis = kron_chain(SIGMA[a] for a in word)
        table[word] = complex(np.trace(matrix @ basis)) / 2**n
    return table


def random_hermitian(n: int, rng: np.random.Generator) -> np.ndarray:
    dim = 2**n
    m = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return m + m.conj().T


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    m = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(m)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_density(n: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    dim = 2**n
    rank = rank or dim
    a = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    m = a @ a.conj().T
    return m / np.trace(m)


def grover_success_closed_form(n: int, n_marked: int, k: int) -> float:
    """Two-dimensional rotation picture: sin^2((2k+1) arcsin sqrt(M/N))."""
    theta = np.arcsin(np.sqrt(n_marked / 2**n))
    return float(np.sin((2 * k + 1) * theta) ** 2)


def shor_success_probability(N: int, x: int, n1: int, n2: int) -> float:
    """Brute-force success probability by enumerating every measurement path.

    Walks all register-2 values w with their probabilities, Fourier-transforms
    the surviving register-1 comb, and scores each register-1 outcome v by
    whether continued fractions recover a usable even period.
    """
    from dmsim.algorithms.shor import continued_fraction_period

    m1, m2 = 2**n1, 2**n2
    values = np.array([pow(x, i, N) for i in range(m1)])
    j = np.arange(m1)
    fourier = np.exp(2j * np.pi * np.outer(j, j) / m1) / np.sqrt(m1)

    def succeeds(v: int) -> bool:
        r = continued_fraction_period(v, m1, x, N, m2)
        if r is None or r % 2 == 1:
            return False
        half = pow(x, r // 2, N)
        if half == N - 1:
            return False
        return any(1 < gcd(half + s, N) < N for s in (-1, 1))

    success_by_v = np.array([succeeds(v) for v in range(m1)], dtype=float)
    total = 0.0
    for w in set(values.tolist()):
        comb = (values == w).astype(complex)
        p_w = comb.sum().real / m1
        comb /= np.linalg.norm(comb)
        dist = np.abs(fourier @ comb) ** 2
        total += p_w * float(dist @ success_by_v)
    return total


def derive_corrections(branches: dict, target, n_bob: int) -> dict:
    """Search per-qubit sigma_z^z sigma_x^x corrections reaching fidelity 1.

    ``branches`` maps outcome bits to the uncorrected reduced state; the
    returned table maps bits to one (z, x) pair per output qubit.
    """
    table = {}
    for bits, rho in branches.items():
        for exps in product((0, 1), repeat=2 * n_bob):
            pairs = tuple((exps[2 * i], exps[2 * i + 1]) for i in range(n_bob))
            corr = kron_chain(
                np.linalg.matrix_power(SIGMA[3], z) @ np.linalg.matrix_power(SIGMA[1], x)
                for z, x in pairs
            )
            candidate = evolve(rho, QOperator(n_bob, corr))
            if fidelity(candidate, target) > 1 - 1e-10:
                table[bits] = pairs
                break
        else:
            raise AssertionError(f"no Pauli correction restores branch {bits}")
    return table
