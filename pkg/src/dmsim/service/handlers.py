"""Request handlers shared by the HTTP routes and the CLI.

Each handler is a pure function from a request model to a :class:`RunOutput`
envelope; all randomness comes from the request's seed, so identical requests
produce identical JSON.
"""

from __future__ import annotations

from typing import Any

import numpy as np

from .. import density, states
from ..algorithms import cluster, grover, shor, teleport
from ..density import DensityMatrix
from ..pauli import QOperator
from ..qstate import StateVector, ketv, random_state
from .models import (
    BellRequest,
    ClusterCnotRequest,
    ClusterTransportRequest,
    EntropyRequest,
    FidelityRequest,
    GhzRequest,
    GroverRequest,
    PtraceCheckRequest,
    RunOutput,
    ShorRequest,
    StateInput,
    TeleportRequest,
    WernerRequest,
)


def _pairs(values: np.ndarray) -> list[list[float]]:
    return [[float(v.real), float(v.imag)] for v in np.asarray(values).reshape(-1)]


def _state_dict(psi: StateVector) -> dict[str, Any]:
    return {"n_qubits": psi.n_qubits, "amplitudes": _pairs(psi.amplitudes)}


def _density_dict(rho: DensityMatrix) -> dict[str, Any]:
    return rho.to_json_dict()


def _params(request, exclude=("seed",)) -> dict[str, Any]:
    return request.model_dump(exclude=set(exclude))


def _output(command: str, request, results: dict[str, Any]) -> RunOutput:
    return RunOutput(
        command=command, params=_params(request), seed=request.seed, results=results
    )


def run_bell(request: BellRequest) -> RunOutput:
    psi = states.bell(request.a, request.b)
    rho = density.from_state(psi)
    results = {
        "state": _state_dict(psi),
        "entropy": density.entropy(rho),
        "reduced_entropies": [
            density.entropy(density.ptrace([2], rho)),
            density.entropy(density.ptrace([1], rho)),
        ],
        "polarization": [
            [float(x) for x in density.polarization(rho, q)] for q in (1, 2)
        ],
        "correlation_tensor": [
            [float(x) for x in row] for row in density.correlation_tensor(rho, 1, 2)
        ],
    }
    return _output("bell", request, results)


def run_ghz(request: GhzRequest) -> RunOutput:
    psi = states.ghz(request.a, request.b, request.c)
    rho = density.from_state(psi)
    singles = [
        density.entropy(density.ptrace([q for q in (1, 2, 3) if q != keep], rho))
        for keep in (1, 2, 3)
    ]
    pairs = [density.entropy(density.ptrace([drop], rho)) for drop in (3, 2, 1)]
    results = {
        "state": _state_dict(psi),
        "entropy": density.entropy(rho),
        "single_qubit_entropies": singles,
        "pair_entropies": pairs,
    }
    return _output("ghz", request, results)


def run_werner(request: WernerRequest) -> RunOutput:
    rho = states.werner(request.lam, request.a, request.b)
    results = {
        "entropy": density.entropy(rho),
        "purity": density.purity(rho),
        "single_qubit_entropy": density.entropy(density.ptrace([2], rho)),
        "density": _density_dict(rho),
    }
    return _output("werner", request, results)


def _teleport_branches(request: TeleportRequest):
    if request.variant == "one":
        psi = random_state(1, request.seed)
        return psi, teleport.teleport_one_branches(psi)
    if request.variant == "bell":
        psi = states.bell(request.a, request.b)
        return psi, teleport.teleport_bell_branches(request.a, request.b)
    psi = random_state(2, request.seed)
    return psi, teleport.teleport_two_branches(psi)


def run_teleport(request: TeleportRequest) -> RunOutput:
    psi, outcomes = _teleport_branches(request)
    if request.branch is not None:
        wanted = tuple(request.branch)
        outcomes = [o for o in outcomes if o.alice_bits == wanted]
        if not outcomes:
            raise ValueError(f"branch {wanted} is not realizable for this input")
    results = {
        "variant": request.variant,
        "input_state": _state_dict(psi),
        "branches": [
            {
                "bits": list(o.alice_bits),
                "probability": o.branch_probability,
                "fidelity": o.fidelity_vs_input,
            }
            for o in outcomes
        ],
        "probability_sum": float(sum(o.branch_probability for o in outcomes)),
    }
    return _output("teleport", request, results)


def run_grover(request: GroverRequest) -> RunOutput:
    problem = grover.GroverProblem(request.n, tuple(request.marked), request.iters)
    result = grover.grover_search(problem)
    results = {
        "n": request.n,
        "marked": list(problem.marked),
        "iterations": result.iterations,
        "success_probability": result.success_probability,
        "distribution": [float(p) for p in result.distribution],
    }
    return _output("grover", request, results)


_SHOR_METHODS = {
    "density": shor.ShorMethod.DENSITY_QFT,
    "statevector": shor.ShorMethod.STATEVECTOR_QFT,
    "dft": shor.ShorMethod.CLASSICAL_DFT,
}


def run_shor(request: ShorRequest) -> RunOutput:
    method = _SHOR_METHODS[request.method]
    runs = []
    successes = 0
    for i in range(request.runs):
        run = shor.ShorRun(
            N=request.N,
            x=request.x,
            n1=request.n1,
            n2=request.n2,
            method=method,
            seed=request.seed + i,
            store_register2=request.store_register2,
        )
        res = shor.shor_factor(run)
        successes += int(res.success)
        runs.append(
            {
                "seed": res.seed,
                "register1_value": res.register1_value,
                "register2_value": res.register2_value,
                "period": res.period,
                "factors": list(res.factors) if res.factors else None,
                "success": res.success,
            }
        )
    first = shor.ShorRun(N=request.N, x=request.x, n1=request.n1, n2=request.n2)
    results = {
        "N": request.N,
        "x": request.x,
        "method": request.method,
        "n1": first.n1,
        "n2": first.n2,
        "runs": runs,
        "success_fraction": successes / request.runs,
    }
    return _output("shor", request, results)


def run_cluster_transport(request: ClusterTransportRequest) -> RunOutput:
    psi = random_state(1, request.seed)
    outcomes = cluster.cluster_transport_branches(psi)
    if request.branch is not None:
        outcomes = [o for o in outcomes if o.outcome == request.branch]
    results = {
        "input_state": _state_dict(psi),
        "branches": [
            {
                "outcome": o.outcome,
                "probability": o.probability,
                "fidelity_after_correction": o.fidelity_vs_target,
            }
            for o in outcomes
        ],
    }
    return _output("cluster-transport", request, results)


def run_cluster_cnot(request: ClusterCnotRequest) -> RunOutput:
    psi2 = random_state(2, request.seed)
    outcomes = cluster.cluster_cnot_branches(psi2)
    if request.branches is not None:
        wanted = tuple(request.branches)
        outcomes = [o for o in outcomes if o.bits == wanted]
        if not outcomes:
            raise ValueError(f"branch {wanted} not found")
    results = {
        "input_state": _state_dict(psi2),
        "branches": [
            {
                "bits": list(o.bits),
                "probability": o.probability,
                "fidelity_vs_cnot": o.fidelity_vs_cnot,
            }
            for o in outcomes
        ],
        "probability_sum": float(sum(o.probability for o in outcomes)),
    }
    return _output("cluster-cnot", request, results)


def run_ptrace_check(request: PtraceCheckRequest) -> RunOutput:
    rng = np.random.default_rng(request.seed)
    n = request.n
    dim = 2**n
    worst = 0.0
    for _ in range(request.trials):
        m = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        m = m + m.conj().T
        op = QOperator(n, m)
        traced = sorted(
            rng.choice(np.arange(1, n + 1), size=rng.integers(1, n + 1), replace=False)
        )
        a = density.ptrace(traced, op)
        b = density.ptrace_direct(traced, op)
        worst = max(worst, float(np.abs(a.matrix - b.matrix).max()))
    results = {
        "n": n,
        "trials": request.trials,
        "max_abs_diff": worst,
        "tolerance": 1e-10,
        "ok": worst < 1e-10,
    }
    return _output("ptrace-check", request, results)


def parse_state_spec(spec: str) -> DensityMatrix:
    """Named states: bell:ab, ghz:abc, werner:lam[:ab], uniform:n, ket:bits."""
    parts = spec.split(":")
    kind = parts[0]
    try:
        if kind == "bell" and len(parts) == 2 and len(parts[1]) == 2:
            a, b = (int(c) for c in parts[1])
            return density.from_state(states.bell(a, b))
        if kind == "ghz" and len(parts) == 2 and len(parts[1]) == 3:
            a, b, c = (int(x) for x in parts[1])
            return density.from_state(states.ghz(a, b, c))
        if kind == "werner" and len(parts) in (2, 3):
            lam = float(parts[1])
            a, b = (int(c) for c in parts[2]) if len(parts) == 3 else (0, 0)
            return states.werner(lam, a, b)
        if kind == "uniform" and len(parts) == 2:
            return density.from_state(states.uniform(int(parts[1])))
        if kind == "ket" and len(parts) == 2:
            return density.from_state(ketv([int(c) for c in parts[1]]))
    except ValueError as exc:
        raise ValueError(f"bad state spec {spec!r}: {exc}") from exc
    raise ValueError(f"unrecognized state spec {spec!r}")


def _resolve_state(state: StateInput) -> DensityMatrix:
    if state.spec is not None:
        return parse_state_spec(state.spec)
    return DensityMatrix.from_json_dict(state.matrix.model_dump())


def run_entropy(request: EntropyRequest) -> RunOutput:
    rho = _resolve_state(request.state)
    results = {
        "n_qubits": rho.n_qubits,
        "entropy": density.entropy(rho),
        "purity": density.purity(rho),
    }
    return _output("entropy", request, results)


def run_fidelity(request: FidelityRequest) -> RunOutput:
    rho1 = _resolve_state(request.state1)
    rho2 = _resolve_state(request.state2)
    results = {"fidelity": density.fidelity(rho1, rho2)}
    return _output("fidelity", request, results)
